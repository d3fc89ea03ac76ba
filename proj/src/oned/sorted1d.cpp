#include "lowcore/oned.hpp"

#include <algorithm>
#include <numeric>

namespace lowcore {

Sorted1D::Sorted1D(const WeightedPointSet& P) {
    if (P.dim() != 1) throw DimensionError("Sorted1D requires 1-d points");
    std::vector<std::size_t> order(P.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return P.point(a)[0] < P.point(b)[0]; });
    coords_.reserve(P.size());
    weights_.reserve(P.size());
    for (auto i : order) {
        coords_.push_back(P.point(i)[0]);
        weights_.push_back(P.weight(i));
    }
    build_prefix();
}

Sorted1D::Sorted1D(std::vector<double> xs, std::vector<double> ws)
    : Sorted1D(WeightedPointSet::from_1d(xs, ws)) {}

void Sorted1D::build_prefix() {
    prefix_w_.assign(coords_.size() + 1, 0.0L);
    prefix_wx_.assign(coords_.size() + 1, 0.0L);
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        prefix_w_[i + 1] = prefix_w_[i] + weights_[i];
        prefix_wx_[i + 1] = prefix_wx_[i] + (long double)weights_[i] * coords_[i];
    }
}

std::size_t Sorted1D::upper_index(double c, std::size_t lo, std::size_t hi) const {
    return std::size_t(std::upper_bound(coords_.begin() + lo, coords_.begin() + hi, c) - coords_.begin());
}

long double Sorted1D::abs_dev(std::size_t lo, std::size_t hi, double c, std::size_t split) const {
    split = std::clamp(split, lo, hi);
    long double cl = c;
    long double left = cl * weight_range(lo, split) - wx_range(lo, split);
    long double right = wx_range(split, hi) - cl * weight_range(split, hi);
    return std::max(left, 0.0L) + std::max(right, 0.0L);
}

double Sorted1D::cost2(double a, double b) const {
    if (a > b) std::swap(a, b);
    double mid = 0.5 * (a + b);
    std::size_t j = upper_index(mid);
    return double(abs_dev(0, j, a) + abs_dev(j, size(), b));
}

WeightedPointSet Sorted1D::to_point_set() const { return WeightedPointSet::from_1d(coords_, weights_); }

Sorted1D Sorted1D::compressed() const {
    Sorted1D out;
    for (std::size_t i = 0; i < size(); ++i) {
        if (!out.coords_.empty() && out.coords_.back() == coords_[i])
            out.weights_.back() += weights_[i];
        else {
            out.coords_.push_back(coords_[i]);
            out.weights_.push_back(weights_[i]);
        }
    }
    out.build_prefix();
    return out;
}

Bucket bucket_stats(const Sorted1D& S1, std::size_t lo, std::size_t hi) {
    if (lo > hi || hi >= S1.size()) throw std::out_of_range("bucket range empty or out of bounds");
    Bucket b;
    b.lo = lo;
    b.hi = hi;
    long double N = S1.weight_range(lo, hi + 1);
    b.N = double(N);
    b.L = S1.x(hi) - S1.x(lo);
    if (N <= 0.0L) {
        b.mu = S1.x(lo);
        return b;
    }
    b.mu = std::clamp(double(S1.wx_range(lo, hi + 1) / N), S1.x(lo), S1.x(hi));
    b.delta = double(S1.abs_dev(lo, hi + 1, b.mu));
    return b;
}

std::size_t weighted_median_index(const Sorted1D& S1) {
    if (S1.empty()) throw std::invalid_argument("weighted median of empty set");
    const auto& pw = S1.prefix_w();
    long double half = pw.back() / 2;
    auto it = std::lower_bound(pw.begin() + 1, pw.end(), half);
    return std::min(std::size_t(it - pw.begin()) - 1, S1.size() - 1);
}

double weighted_median(const Sorted1D& S1) { return S1.x(weighted_median_index(S1)); }

}  // namespace lowcore
