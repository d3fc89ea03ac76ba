#include "lowcore/core.hpp"

#include <cmath>

namespace lowcore {

namespace {

void check(const WeightedPointSet& P, const CenterSet& C) {
    if (C.empty()) throw std::invalid_argument("center set is empty");
    if (P.dim() != C.dim()) throw DimensionError("points and centers have different dimensions");
}

}  // namespace

double sq_dist(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

double dist_pow(double sq, double z) {
    if (z == 2.0) return sq;
    double d = std::sqrt(sq);
    if (z == 1.0) return d;
    return std::pow(d, z);
}

double cost(const WeightedPointSet& P, const CenterSet& C, CostParams params) {
    check(P, C);
    if (params.z < 1.0) throw std::invalid_argument("z must be >= 1");
    CompensatedSum total;
    const std::size_t k = C.size();
    for (std::size_t i = 0; i < P.size(); ++i) {
        auto p = P.point(i);
        double best = sq_dist(p, C.center(0));
        for (std::size_t j = 1; j < k; ++j) best = std::min(best, sq_dist(p, C.center(j)));
        total.add(P.weight(i) * dist_pow(best, params.z));
    }
    return total.value();
}

std::vector<std::size_t> assign(const WeightedPointSet& P, const CenterSet& C) {
    check(P, C);
    std::vector<std::size_t> out(P.size());
    for (std::size_t i = 0; i < P.size(); ++i) {
        auto p = P.point(i);
        double best = sq_dist(p, C.center(0));
        std::size_t arg = 0;
        for (std::size_t j = 1; j < C.size(); ++j) {
            double d = sq_dist(p, C.center(j));
            if (d < best) {
                best = d;
                arg = j;
            }
        }
        out[i] = arg;
    }
    return out;
}

double relative_error(double costP, double costS) {
    if (costP == 0.0) return costS == 0.0 ? 0.0 : kInfiniteError;
    return std::fabs(costP - costS) / costP;
}

}  // namespace lowcore
