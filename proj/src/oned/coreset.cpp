#include <algorithm>
#include <cmath>

#include "lowcore/oned.hpp"

namespace lowcore {

namespace {

void check_eps(double eps) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0, 1)");
}

void emit(WeightedPointSet& out, const Bucket& b) {
    if (b.N > 0.0) out.add(std::span<const double>(&b.mu, 1), b.N);
}

WeightedPointSet distinct_points(const Sorted1D& S1) {
    Sorted1D C = S1.compressed();
    WeightedPointSet out(1);
    for (std::size_t i = 0; i < C.size(); ++i)
        if (C.w(i) > 0.0) out.add(std::span<const double>(&C.coords()[i], 1), C.w(i));
    return out;
}

}  // namespace

int band_index(double value, double opt) {
    if (!(value >= 2.0 * opt)) return 0;
    int i = std::max(0, std::ilogb(value / opt));
    while (value >= std::ldexp(opt, i + 1)) ++i;
    while (i > 0 && value < std::ldexp(opt, i)) --i;
    return i;
}

std::pair<std::size_t, std::size_t> endpoint_ranges(const Sorted1D& S1, double eps) {
    const auto& pw = S1.prefix_w();
    const std::size_t n = S1.size();
    long double budget = std::floor((long double)eps * pw.back());
    if (budget <= 0.0L) return {0, n};
    std::size_t left = std::size_t(std::upper_bound(pw.begin(), pw.end(), budget) - pw.begin()) - 1;
    std::size_t right = std::size_t(std::lower_bound(pw.begin(), pw.end(), pw.back() - budget) - pw.begin());
    return {left, std::min(right, n)};
}

std::vector<Bucket> greedy_buckets(const Sorted1D& S1, std::size_t lo, std::size_t hi, double threshold,
                                   bool forward) {
    std::vector<Bucket> out;
    if (forward) {
        std::size_t start = lo;
        while (start <= hi) {
            Bucket b = bucket_stats(S1, start, start);
            while (b.hi < hi) {
                Bucket next = bucket_stats(S1, start, b.hi + 1);
                if (next.delta > threshold) break;
                b = next;
            }
            out.push_back(b);
            start = b.hi + 1;
        }
    } else {
        std::size_t end = hi + 1;
        while (end > lo) {
            Bucket b = bucket_stats(S1, end - 1, end - 1);
            while (b.lo > lo) {
                Bucket next = bucket_stats(S1, b.lo - 1, end - 1);
                if (next.delta > threshold) break;
                b = next;
            }
            out.push_back(b);
            end = b.lo;
        }
    }
    return out;
}

std::vector<Block> block_partition(const Sorted1D& S1, double opt, double eps) {
    std::vector<Block> blocks;
    const std::size_t n = S1.size();
    if (n == 0) return blocks;
    if (!(opt > 0.0)) {
        Block b;
        b.lo = 0;
        b.hi = n - 1;
        blocks.push_back(b);
        return blocks;
    }
    const std::size_t med = weighted_median_index(S1);
    auto [left, right] = endpoint_ranges(S1, eps);

    auto push = [&](int band, Side side, std::size_t i) {
        if (!blocks.empty() && blocks.back().side == side && blocks.back().index == band) {
            if (side == Side::left)
                blocks.back().hi = i;
            else
                blocks.back().lo = i;
            return;
        }
        Block b;
        b.index = band;
        b.side = side;
        b.lo = b.hi = i;
        b.band_lo = std::ldexp(opt, band);
        b.band_hi = std::ldexp(opt, band + 1);
        blocks.push_back(b);
    };
    for (std::size_t i = left; i <= med && i < right; ++i) push(band_index(S1.cost1(S1.x(i)), opt), Side::left, i);
    for (std::size_t i = right; i > med + 1 && i > left; --i)
        push(band_index(S1.cost1(S1.x(i - 1)), opt), Side::right, i - 1);
    return blocks;
}

Coreset1DTrace coreset_1d_1median_traced(const Sorted1D& S1, double eps, double calibration) {
    check_eps(eps);
    if (S1.empty()) throw std::invalid_argument("coreset of empty set");
    if (!(calibration >= 1.0)) throw std::invalid_argument("calibration must be >= 1");
    Coreset1DTrace t;
    t.eps = eps;
    t.eps_internal = eps / calibration;
    t.median = weighted_median_index(S1);
    t.opt = S1.cost1(S1.x(t.median));
    t.coreset = WeightedPointSet(1);
    const std::size_t n = S1.size();
    if (!(t.opt > 0.0)) {
        t.coreset = distinct_points(S1);
        t.left_count = 0;
        t.right_start = n;
        return t;
    }
    std::tie(t.left_count, t.right_start) = endpoint_ranges(S1, t.eps_internal);
    if (t.left_count > 0) t.left_end = bucket_stats(S1, 0, t.left_count - 1);
    if (t.right_start < n) t.right_end = bucket_stats(S1, t.right_start, n - 1);

    t.blocks = block_partition(S1, t.opt, t.eps_internal);
    for (auto& b : t.blocks)
        b.buckets = greedy_buckets(S1, b.lo, b.hi, t.eps_internal * std::ldexp(t.opt, b.index), b.side == Side::left);

    if (t.left_end) emit(t.coreset, *t.left_end);
    for (const auto& b : t.blocks)
        if (b.side == Side::left)
            for (const auto& bk : b.buckets) emit(t.coreset, bk);
    for (auto it = t.blocks.rbegin(); it != t.blocks.rend(); ++it)
        if (it->side == Side::right)
            for (auto bk = it->buckets.rbegin(); bk != it->buckets.rend(); ++bk) emit(t.coreset, *bk);
    if (t.right_end) emit(t.coreset, *t.right_end);
    return t;
}

WeightedPointSet coreset_1d_1median(const Sorted1D& S1, double eps, double calibration) {
    return coreset_1d_1median_traced(S1, eps, calibration).coreset;
}

std::vector<Bucket> baseline_buckets(const Sorted1D& S1, double threshold) {
    if (S1.empty()) return {};
    return greedy_buckets(S1, 0, S1.size() - 1, threshold, true);
}

WeightedPointSet baseline_coreset(const Sorted1D& S1, int k, double eps) {
    check_eps(eps);
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (S1.empty()) throw std::invalid_argument("coreset of empty set");
    double opt = exact_kmedian_1d(S1, k).opt;
    if (!(opt > 0.0)) return distinct_points(S1);
    WeightedPointSet out(1);
    for (const auto& b : baseline_buckets(S1, eps * opt / k)) emit(out, b);
    return out;
}

}  // namespace lowcore
