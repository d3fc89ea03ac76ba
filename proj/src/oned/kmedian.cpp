#include <algorithm>
#include <limits>

#include "lowcore/oned.hpp"

namespace lowcore {

namespace {

using Real = long double;

std::size_t range_median(const Sorted1D& C, std::size_t a, std::size_t b) {
    const auto& pw = C.prefix_w();
    Real target = pw[a] + (pw[b] - pw[a]) / 2;
    auto it = std::lower_bound(pw.begin() + a + 1, pw.begin() + b + 1, target);
    return std::min(std::size_t(it - pw.begin()) - 1, b - 1);
}

// 1-median cost of the distinct-coordinate range [a, b).
Real range_cost(const Sorted1D& C, std::size_t a, std::size_t b) {
    std::size_t m = range_median(C, a, b);
    return C.abs_dev(a, b, C.x(m), m + 1);
}

KMedianResult trivial_result(const Sorted1D& C, int k) {
    KMedianResult r;
    r.opt = 0.0;
    r.centers = CenterSet(1);
    for (std::size_t i = 0; i < C.size(); ++i) {
        r.centers.add(std::span<const double>(&C.coords()[i], 1));
        r.cluster_lo.push_back(C.x(i));
        r.cluster_hi.push_back(C.x(i));
    }
    while (r.centers.size() < std::size_t(k)) {
        double last = C.x(C.size() - 1);
        r.centers.add(std::span<const double>(&last, 1));
    }
    return r;
}

KMedianResult reconstruct(const Sorted1D& C, int k, Real opt, const std::vector<std::vector<std::size_t>>& arg) {
    KMedianResult r;
    r.opt = double(opt);
    r.centers = CenterSet(1);
    std::vector<std::pair<std::size_t, std::size_t>> ranges;
    std::size_t i = C.size();
    for (int j = k; j >= 1; --j) {
        std::size_t t = j == 1 ? 0 : arg[j][i];
        ranges.emplace_back(t, i);
        i = t;
    }
    std::reverse(ranges.begin(), ranges.end());
    for (auto [a, b] : ranges) {
        double c = C.x(range_median(C, a, b));
        r.centers.add(std::span<const double>(&c, 1));
        r.cluster_lo.push_back(C.x(a));
        r.cluster_hi.push_back(C.x(b - 1));
    }
    return r;
}

struct Layer {
    const Sorted1D& C;
    const std::vector<Real>& prev;
    std::vector<Real>& cur;
    std::vector<std::size_t>& arg;
    std::size_t min_t;

    void solve(std::size_t ilo, std::size_t ihi, std::size_t olo, std::size_t ohi) {
        if (ilo > ihi) return;
        std::size_t mid = ilo + (ihi - ilo) / 2;
        Real best = std::numeric_limits<Real>::infinity();
        std::size_t best_t = std::max(olo, min_t);
        std::size_t hi_t = std::min(ohi, mid - 1);
        for (std::size_t t = std::max(olo, min_t); t <= hi_t; ++t) {
            Real v = prev[t] + range_cost(C, t, mid);
            if (v < best) {
                best = v;
                best_t = t;
            }
        }
        cur[mid] = best;
        arg[mid] = best_t;
        if (mid > ilo) solve(ilo, mid - 1, olo, best_t);
        solve(mid + 1, ihi, best_t, ohi);
    }
};

KMedianResult solve_dp(const Sorted1D& S1, int k, bool monotone) {
    if (k <= 0) throw std::invalid_argument("k must be positive");
    if (S1.empty()) throw std::invalid_argument("k-median of empty set");
    Sorted1D C = S1.compressed();
    if (std::size_t(k) >= C.size()) return trivial_result(C, k);
    if (k == 1) {
        KMedianResult r;
        double m = weighted_median(S1);
        r.opt = S1.cost1(m);
        r.centers = CenterSet::from_1d({m});
        r.cluster_lo = {S1.x(0)};
        r.cluster_hi = {S1.x(S1.size() - 1)};
        return r;
    }

    const std::size_t D = C.size();
    std::vector<Real> prev(D + 1), cur(D + 1, std::numeric_limits<Real>::infinity());
    std::vector<std::vector<std::size_t>> arg(k + 1, std::vector<std::size_t>(D + 1, 0));
    for (std::size_t i = 1; i <= D; ++i) prev[i] = range_cost(C, 0, i);
    for (int j = 2; j <= k; ++j) {
        std::fill(cur.begin(), cur.end(), std::numeric_limits<Real>::infinity());
        if (monotone) {
            Layer layer{C, prev, cur, arg[j], std::size_t(j - 1)};
            layer.solve(std::size_t(j), D, std::size_t(j - 1), D - 1);
        } else {
            for (std::size_t i = j; i <= D; ++i) {
                for (std::size_t t = j - 1; t < i; ++t) {
                    Real v = prev[t] + range_cost(C, t, i);
                    if (v < cur[i]) {
                        cur[i] = v;
                        arg[j][i] = t;
                    }
                }
            }
        }
        std::swap(prev, cur);
    }
    return reconstruct(C, k, prev[D], arg);
}

}  // namespace

KMedianResult exact_kmedian_1d(const Sorted1D& S1, int k) { return solve_dp(S1, k, true); }

KMedianResult exact_kmedian_1d_quadratic(const Sorted1D& S1, int k) { return solve_dp(S1, k, false); }

}  // namespace lowcore
