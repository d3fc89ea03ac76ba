#include <cmath>
#include <random>

#include "lowcore/verify.hpp"

namespace lowcore {

std::vector<double> log_spaced(double lo, double hi, std::size_t count) {
    if (count == 0) return {};
    if (count == 1) return {lo};
    std::vector<double> out(count);
    double a = std::log(lo), b = std::log(hi);
    for (std::size_t i = 0; i < count; ++i) out[i] = std::exp(a + (b - a) * double(i) / double(count - 1));
    out.front() = lo;
    out.back() = hi;
    return out;
}

MixedCheckReport check_mixed_coreset(const WeightedPointSet& P, const WeightedPointSet& S, double eps, double z,
                                     const std::vector<double>& radii, std::size_t samples, std::uint64_t seed) {
    if (P.dim() != S.dim()) throw DimensionError("P and S have different dimensions");
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
    if (z < 1.0) throw std::invalid_argument("z must be >= 1");
    const std::size_t d = P.dim();
    for (std::size_t i = 0; i < P.size(); ++i) {
        double n2 = 0.0;
        for (double x : P.point(i)) n2 += x * x;
        if (n2 > 1.0 + 1e-12) throw std::invalid_argument("mixed coreset check requires P inside the unit ball");
    }

    MixedCheckReport rep;
    rep.radii = radii;
    rep.seed = seed;
    rep.worst_per_radius.assign(radii.size(), 0.0);
    if (radii.empty() || samples == 0) return rep;

    const double size_p = P.total_weight();
    const std::size_t per = (samples + radii.size() - 1) / radii.size();
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<double> c(d);
    for (std::size_t ri = 0; ri < radii.size(); ++ri) {
        const double r = radii[ri];
        for (std::size_t s = 0; s < per; ++s) {
            double n2 = 0.0;
            for (auto& x : c) {
                x = g(rng);
                n2 += x * x;
            }
            double f = n2 > 0.0 ? r / std::sqrt(n2) : 0.0;
            for (auto& x : c) x *= f;
            CenterSet C(d, c);
            double diff = std::fabs(cost(S, C, {z}) - cost(P, C, {z}));
            double ratio = diff / (eps * std::pow(std::max(1.0, r), z) * size_p);
            ++rep.evaluations;
            rep.worst_per_radius[ri] = std::max(rep.worst_per_radius[ri], ratio);
            if (ratio > rep.worst_ratio || rep.witness.empty()) {
                rep.worst_ratio = ratio;
                rep.witness = c;
                rep.witness_radius = r;
            }
        }
    }
    return rep;
}

}  // namespace lowcore
