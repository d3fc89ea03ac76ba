#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "lowcore/datasets.hpp"
#include "lowcore/oned.hpp"
#include "lowcore/verify.hpp"

using namespace lowcore;

namespace {

double direct_delta(const Sorted1D& S1, std::size_t lo, std::size_t hi) {
    double N = 0, wx = 0;
    for (std::size_t i = lo; i <= hi; ++i) N += S1.w(i), wx += S1.w(i) * S1.x(i);
    double mu = wx / N, d = 0;
    for (std::size_t i = lo; i <= hi; ++i) d += S1.w(i) * std::fabs(S1.x(i) - mu);
    return d;
}

Sorted1D random_weighted(std::mt19937_64& rng, std::size_t n) {
    std::vector<double> xs(n), ws(n);
    for (auto& x : xs) x = std::uniform_real_distribution<double>(-10, 10)(rng);
    for (auto& w : ws) w = std::uniform_real_distribution<double>(0.1, 3)(rng);
    return Sorted1D(xs, ws);
}

double brute_opt(const Sorted1D& S1, int k) {
    std::size_t n = S1.size();
    std::vector<int> pick(n, 0);
    std::fill(pick.end() - std::min<std::size_t>(k, n), pick.end(), 1);
    double best = INFINITY;
    do {
        double c = 0;
        for (std::size_t i = 0; i < n; ++i) {
            double m = INFINITY;
            for (std::size_t j = 0; j < n; ++j)
                if (pick[j]) m = std::min(m, std::fabs(S1.x(i) - S1.x(j)));
            c += S1.w(i) * m;
        }
        best = std::min(best, c);
    } while (std::next_permutation(pick.begin(), pick.end()));
    return best;
}

double coord_sum(const WeightedPointSet& P) {
    double s = 0;
    for (std::size_t i = 0; i < P.size(); ++i) s += P.weight(i) * P.point(i)[0];
    return s;
}

}  // namespace

TEST(Sorted1D, PrefixConsistency) {
    std::mt19937_64 rng(1);
    auto S1 = random_weighted(rng, 500);
    long double w = 0, wx = 0;
    for (std::size_t i = 0; i < S1.size(); ++i) {
        if (i) EXPECT_LE(S1.x(i - 1), S1.x(i));
        w += S1.w(i), wx += S1.w(i) * S1.x(i);
        EXPECT_NEAR(double(S1.prefix_w()[i + 1]), double(w), 1e-12 * double(w));
        EXPECT_NEAR(double(S1.prefix_wx()[i + 1]), double(wx), 1e-12 * std::fabs(double(wx)) + 1e-12);
    }
}

TEST(BucketStats, Small) {
    auto b = bucket_stats(Sorted1D({0, 1}, {1, 1}), 0, 1);
    EXPECT_EQ(b.N, 2);
    EXPECT_EQ(b.L, 1);
    EXPECT_EQ(b.mu, 0.5);
    EXPECT_EQ(b.delta, 1);
    EXPECT_EQ(bucket_stats(Sorted1D({0, 0, 0}, {1, 1, 1}), 0, 2).delta, 0.0);
    EXPECT_THROW(bucket_stats(Sorted1D({0, 1}, {1, 1}), 1, 0), std::out_of_range);
}

TEST(BucketStats, MatchesDirectLoop) {
    std::mt19937_64 rng(2);
    auto S1 = Sorted1D(generate_1d(Dist1D::gaussian, 2000, 3));
    for (int t = 0; t < 50; ++t) {
        std::size_t lo = rng() % 1000, hi = lo + rng() % 1000;
        auto b = bucket_stats(S1, lo, hi);
        double want = direct_delta(S1, lo, hi);
        EXPECT_NEAR(b.delta, want, 1e-9 * std::max(1.0, want));
        EXPECT_GE(b.mu, S1.x(lo));
        EXPECT_LE(b.mu, S1.x(hi));
        EXPECT_LE(b.delta, b.N * b.L * (1 + 1e-12));
    }
}

TEST(WeightedMedian, Values) {
    Sorted1D a({0, 1, 2}, {1, 1, 1});
    EXPECT_EQ(weighted_median(a), 1.0);
    EXPECT_EQ(exact_kmedian_1d(a, 1).opt, 2.0);
    EXPECT_EQ(weighted_median(Sorted1D({0, 10}, {3, 1})), 0.0);
    EXPECT_THROW(weighted_median(Sorted1D()), std::invalid_argument);
}

TEST(WeightedMedian, MinimizesOverDataPoints) {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 50; ++t) {
        auto S1 = random_weighted(rng, 9);
        double best = INFINITY;
        for (std::size_t i = 0; i < S1.size(); ++i) best = std::min(best, S1.cost1(S1.x(i)));
        EXPECT_NEAR(S1.cost1(weighted_median(S1)), best, 1e-12 * best);
        EXPECT_EQ(S1.cost1(weighted_median(S1)), exact_kmedian_1d(S1, 1).opt);
    }
}

TEST(ExactKMedian, Trivial) {
    Sorted1D a({0, 1, 10, 11}, {1, 1, 1, 1});
    auto r = exact_kmedian_1d(a, 2);
    EXPECT_EQ(r.opt, 2.0);
    ASSERT_EQ(r.centers.size(), 2u);
    EXPECT_LE(r.centers.center(0)[0], 1.0);
    EXPECT_GE(r.centers.center(1)[0], 10.0);
    EXPECT_EQ(exact_kmedian_1d(a, 4).opt, 0.0);
    EXPECT_EQ(exact_kmedian_1d(a, 7).opt, 0.0);
    EXPECT_THROW(exact_kmedian_1d(a, 0), std::invalid_argument);
}

TEST(ExactKMedian, MatchesBruteForce) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
        auto S1 = random_weighted(rng, 1 + rng() % 10);
        int k = 1 + int(rng() % 3);
        double want = brute_opt(S1, k);
        auto r = exact_kmedian_1d(S1, k);
        EXPECT_NEAR(r.opt, want, 1e-12 * std::max(1.0, want));
        EXPECT_NEAR(cost(S1.to_point_set(), r.centers), r.opt, 1e-9 * std::max(1.0, want));
    }
}

TEST(ExactKMedian, MatchesQuadraticReference) {
    auto S1 = Sorted1D(generate_1d(Dist1D::clustered, 300, 6));
    for (int k = 1; k <= 6; ++k) {
        double a = exact_kmedian_1d(S1, k).opt, b = exact_kmedian_1d_quadratic(S1, k).opt;
        EXPECT_NEAR(a, b, 1e-9 * b);
    }
}

TEST(Baseline, AllEqual) {
    auto S = baseline_coreset(Sorted1D({2, 2, 2}, {1, 1, 1}), 1, 0.1);
    ASSERT_EQ(S.size(), 1u);
    EXPECT_EQ(S.weight(0), 3.0);
}

TEST(Baseline, BucketBoundsAndMass) {
    auto P = generate_1d(Dist1D::uniform, 10000, 7);
    Sorted1D S1(P);
    for (int k : {1, 2}) {
        double opt = exact_kmedian_1d(S1, k).opt;
        auto buckets = baseline_buckets(S1, 0.1 * opt / k);
        for (std::size_t b = 0; b < buckets.size(); ++b) {
            EXPECT_LE(buckets[b].delta, 0.1 * opt / k * (1 + 1e-12));
            if (b + 1 < buckets.size()) EXPECT_GT(bucket_stats(S1, buckets[b].lo, buckets[b].hi + 1).delta, 0.1 * opt / k);
        }
        auto S = baseline_coreset(S1, k, 0.1);
        EXPECT_NEAR(S.total_weight(), P.total_weight(), 1e-9);
        EXPECT_LE(double(S.size()), 4.0 * k / 0.1);
    }
}

TEST(Baseline, TwoCenterAudit) {
    auto P = generate_1d(Dist1D::uniform, 1500, 8);
    auto S = baseline_coreset(Sorted1D(P), 2, 0.1);
    EXPECT_LE(audit_1d_2median(P, S).max_rel_error, 0.1);
}

TEST(Alg1, SinglePoint) {
    auto S = coreset_1d_1median(Sorted1D({3.5}, {2.0}), 0.1);
    ASSERT_EQ(S.size(), 1u);
    EXPECT_EQ(S.point(0)[0], 3.5);
    EXPECT_EQ(S.weight(0), 2.0);
}

TEST(Alg1, AuditUniform) {
    auto P = generate_1d(Dist1D::uniform, 100000, 9);
    auto S = coreset_1d_1median(Sorted1D(P), 0.05);
    EXPECT_LE(audit_1d_1median(P, S).max_rel_error, 0.05);
}

TEST(Alg1, SizeLawConstant) {
    auto S1 = Sorted1D(generate_1d(Dist1D::gaussian, 100000, 10));
    for (double e : {0.1, 0.05, 0.02, 0.01}) {
        double s = double(coreset_1d_1median(S1, e).size());
        EXPECT_LE(s, 40.0 / std::sqrt(e) * std::log2(1 / e));
    }
}

TEST(Alg1, PreservesMassAndFirstMoment) {
    for (auto d : all_dists()) {
        auto P = generate_1d(d, 20000, 11);
        auto S = coreset_1d_1median(Sorted1D(P), 0.02);
        EXPECT_EQ(S.total_weight(), P.total_weight());
        EXPECT_NEAR(coord_sum(S), coord_sum(P), 1e-9 * std::max(1.0, std::fabs(coord_sum(P))));
    }
}

TEST(Alg1, BucketsGreedyAndWithinBands) {
    auto S1 = Sorted1D(generate_1d(Dist1D::exponential, 30000, 12));
    auto tr = coreset_1d_1median_traced(S1, 0.05);
    for (const auto& blk : tr.blocks) {
        double cap = tr.eps_internal * std::ldexp(tr.opt, blk.index);
        for (std::size_t b = 0; b < blk.buckets.size(); ++b) {
            const auto& B = blk.buckets[b];
            EXPECT_LE(B.delta, cap * (1 + 1e-12));
            bool last = b + 1 == blk.buckets.size();
            if (!last) {
                auto grown = blk.side == Side::left ? bucket_stats(S1, B.lo, B.hi + 1) : bucket_stats(S1, B.lo - 1, B.hi);
                EXPECT_GT(grown.delta, cap);
            }
        }
        EXPECT_LE(double(blk.buckets.size()), 8.0 / std::sqrt(tr.eps_internal));
        for (std::size_t i = blk.lo; i <= blk.hi; ++i) {
            double f = S1.cost1(S1.x(i));
            if (blk.index > 0) EXPECT_GE(f, std::ldexp(tr.opt, blk.index) * (1 - 1e-12));
            EXPECT_LT(f, std::ldexp(tr.opt, blk.index + 1) * (1 + 1e-12));
        }
    }
}

TEST(Alg1, BlockCount) {
    auto S1 = Sorted1D(generate_1d(Dist1D::uniform, 100000, 13));
    double opt = exact_kmedian_1d(S1, 1).opt;
    for (auto side : {Side::left, Side::right}) {
        std::size_t count = 0;
        for (const auto& b : block_partition(S1, opt, 0.01)) count += b.side == side;
        EXPECT_LE(double(count), std::ceil(std::log2(1 + 1 / 0.01)) + 1);
    }
    auto same = Sorted1D({4, 4, 4, 4}, {1, 1, 1, 1});
    EXPECT_EQ(coreset_1d_1median(same, 0.1).size(), 1u);
}

TEST(Alg1, EndpointRanges) {
    Sorted1D S1({0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, std::vector<double>(10, 1.0));
    auto [left, right] = endpoint_ranges(S1, 0.25);
    EXPECT_EQ(left, 2u);
    EXPECT_EQ(right, 8u);
    auto [l0, r0] = endpoint_ranges(S1, 0.05);
    EXPECT_EQ(l0, 0u);
    EXPECT_EQ(r0, 10u);
}
