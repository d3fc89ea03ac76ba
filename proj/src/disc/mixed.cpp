#include <algorithm>
#include <cmath>
#include <random>

#include "lowcore/disc.hpp"

namespace lowcore {

namespace {

std::uint64_t round_seed(std::uint64_t seed, int round) {
    std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * std::uint64_t(round + 1);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double max_norm(const WeightedPointSet& P) {
    double m = 0.0;
    for (std::size_t i = 0; i < P.size(); ++i) {
        double n2 = 0.0;
        for (double x : P.point(i)) n2 += x * x;
        m = std::max(m, n2);
    }
    return std::sqrt(m);
}

std::vector<double> weighted_sum(const WeightedPointSet& P) {
    std::vector<double> s(P.dim(), 0.0);
    for (std::size_t i = 0; i < P.size(); ++i) {
        auto p = P.point(i);
        for (std::size_t t = 0; t < s.size(); ++t) s[t] += P.weight(i) * p[t];
    }
    return s;
}

}  // namespace

std::size_t mixed_target_size(std::size_t d, double eps, double c_h) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0, 1)");
    return std::size_t(std::ceil(c_h * std::sqrt(double(d)) / eps - 1e-9));
}

MixedCoreset mixed_coreset(const WeightedPointSet& P, double eps, double z, std::uint64_t seed,
                           const MixedOptions& opts) {
    if (P.empty()) throw std::invalid_argument("mixed coreset of empty set");
    if (z < 1.0) throw std::invalid_argument("z must be >= 1");
    if (max_norm(P) > 1.0 + 1e-12) throw std::invalid_argument("mixed coreset requires P inside the unit ball");
    MixedCoreset out;
    out.eps = eps;
    out.z = z;
    out.target = std::max<std::size_t>(1, mixed_target_size(P.dim(), eps, opts.c_h));

    WeightedPointSet cur = P;
    std::vector<std::size_t> src(P.size());
    for (std::size_t i = 0; i < src.size(); ++i) src[i] = i;

    while (cur.size() > out.target && cur.size() > 1) {
        const std::uint64_t rs = round_seed(seed, out.rounds);
        double scale = max_norm(cur);
        if (!(scale > 0.0)) scale = 1.0;
        auto lifted = lift_all(cur, scale);
        SignColoring col = color(lifted, opts.order_cap, rs);

        HalvingRound h;
        h.size_before = cur.size();
        h.order1_norm = col.achieved_norms.at(1);
        h.potential = col.potential;
        h.random_potential = col.random_potential;
        if (opts.baseline_colorings > 0) {
            std::vector<double> norms;
            for (std::size_t b = 0; b < opts.baseline_colorings; ++b)
                norms.push_back(tensor_disc_estimate(lifted, random_balanced_coloring(lifted.size(), rs + 1 + b), 1));
            std::sort(norms.begin(), norms.end());
            std::size_t m = norms.size();
            h.random_median_order1 = m % 2 ? norms[m / 2] : 0.5 * (norms[m / 2 - 1] + norms[m / 2]);
        }

        auto before = weighted_sum(cur);
        double wmax = *std::max_element(cur.weights().begin(), cur.weights().end());
        HalveResult hr = halve(cur, col.signs);
        auto after = weighted_sum(hr.points);
        double drift2 = 0.0;
        for (std::size_t t = 0; t < before.size(); ++t) drift2 += (before[t] - after[t]) * (before[t] - after[t]);
        h.drift = std::sqrt(drift2);
        // The raw block of phi is p / (sqrt(2) scale).
        h.drift_bound = wmax * std::sqrt(2.0) * scale * h.order1_norm;
        h.size_after = hr.points.size();
        out.history.push_back(h);

        std::vector<std::size_t> next(hr.kept.size());
        for (std::size_t i = 0; i < hr.kept.size(); ++i) next[i] = src[hr.kept[i]];
        src = std::move(next);
        cur = std::move(hr.points);
        ++out.rounds;
    }
    out.subset = std::move(cur);
    out.source_index = std::move(src);
    if (out.rounds > 0 && opts.run_check && opts.check_samples > 0) {
        out.check = check_mixed_coreset(P, out.subset, eps, z, log_spaced(std::ldexp(1.0, -4), std::ldexp(1.0, 6), 11),
                                        opts.check_samples, seed);
        out.empirical_violation = out.check->worst_ratio;
    }
    return out;
}

double class_discrepancy_estimate(const WeightedPointSet& P, const std::vector<int>& sigma, double r, double z,
                                  std::size_t samples, std::uint64_t seed) {
    if (sigma.size() != P.size()) throw std::invalid_argument("one sign per point required");
    if (!(r > 0.0)) throw std::invalid_argument("radius must be positive");
    if (P.empty()) return 0.0;
    const std::size_t d = P.dim();
    const double n = double(P.size());
    auto D = [&](const std::vector<double>& c) {
        CompensatedSum s;
        for (std::size_t i = 0; i < P.size(); ++i) s.add(sigma[i] * dist_pow(sq_dist(P.point(i), c), z));
        return std::fabs(s.value()) / n;
    };
    auto project = [&](std::vector<double>& c) {
        double n2 = 0.0;
        for (double x : c) n2 += x * x;
        if (n2 > r * r) {
            double f = r / std::sqrt(n2);
            for (double& x : c) x *= f;
        }
    };

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<std::pair<double, std::vector<double>>> cand;
    cand.push_back({D(std::vector<double>(d, 0.0)), std::vector<double>(d, 0.0)});
    for (std::size_t s = 0; s < samples; ++s) {
        std::vector<double> c(d);
        double n2 = 0.0;
        for (double& x : c) {
            x = g(rng);
            n2 += x * x;
        }
        double rad = r * std::pow(u(rng), 1.0 / double(d));
        double f = n2 > 0.0 ? rad / std::sqrt(n2) : 0.0;
        for (double& x : c) x *= f;
        cand.push_back({D(c), c});
    }
    std::sort(cand.begin(), cand.end(), [](auto& a, auto& b) { return a.first > b.first; });
    double best = cand.front().first;
    for (std::size_t k = 0; k < std::min<std::size_t>(4, cand.size()); ++k) {
        std::vector<double> c = cand[k].second;
        double val = cand[k].first, step = 0.25 * r;
        int iters = 0;
        while (step > 1e-9 * r && iters++ < 5000) {
            bool moved = false;
            for (std::size_t t = 0; t < d && !moved; ++t)
                for (double sgn : {1.0, -1.0}) {
                    std::vector<double> c2 = c;
                    c2[t] += sgn * step;
                    project(c2);
                    double v = D(c2);
                    if (v > val) {
                        val = v;
                        c = std::move(c2);
                        moved = true;
                        break;
                    }
                }
            if (!moved) step *= 0.5;
        }
        best = std::max(best, val);
    }
    return best;
}

}  // namespace lowcore
