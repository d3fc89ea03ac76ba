#include "lowcore/core.hpp"

#include <cmath>

namespace lowcore {

WeightedPointSet::WeightedPointSet(std::size_t dim) : dim_(dim) {
    if (dim == 0) throw DimensionError("point set dimension must be positive");
}

WeightedPointSet::WeightedPointSet(std::size_t dim, std::vector<double> coords, std::vector<double> weights)
    : dim_(dim), coords_(std::move(coords)), weights_(std::move(weights)) {
    if (dim == 0) throw DimensionError("point set dimension must be positive");
    if (coords_.size() != weights_.size() * dim_)
        throw DimensionError("coordinate count does not match dim * number of weights");
    for (double w : weights_)
        if (!(w >= 0.0) || !std::isfinite(w)) throw std::invalid_argument("weights must be finite and nonnegative");
}

WeightedPointSet WeightedPointSet::from_1d(const std::vector<double>& xs) {
    return WeightedPointSet(1, xs, std::vector<double>(xs.size(), 1.0));
}

WeightedPointSet WeightedPointSet::from_1d(const std::vector<double>& xs, const std::vector<double>& ws) {
    return WeightedPointSet(1, xs, ws);
}

void WeightedPointSet::add(std::span<const double> p, double w) {
    if (p.size() != dim_) throw DimensionError("point dimension mismatch");
    if (!(w >= 0.0) || !std::isfinite(w)) throw std::invalid_argument("weights must be finite and nonnegative");
    coords_.insert(coords_.end(), p.begin(), p.end());
    weights_.push_back(w);
}

double WeightedPointSet::total_weight() const {
    CompensatedSum s;
    for (double w : weights_) s.add(w);
    return s.value();
}

CenterSet::CenterSet(std::size_t dim, std::vector<double> coords) : dim_(dim), coords_(std::move(coords)) {
    if (dim == 0) throw DimensionError("center dimension must be positive");
    if (coords_.size() % dim_ != 0) throw DimensionError("center coordinates not a multiple of dim");
}

CenterSet CenterSet::from_1d(const std::vector<double>& cs) { return CenterSet(1, cs); }

void CenterSet::add(std::span<const double> c) {
    if (c.size() != dim_) throw DimensionError("center dimension mismatch");
    coords_.insert(coords_.end(), c.begin(), c.end());
}

void CompensatedSum::add(double x) {
    double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x))
        comp_ += (sum_ - t) + x;
    else
        comp_ += (x - t) + sum_;
    sum_ = t;
}

}  // namespace lowcore
