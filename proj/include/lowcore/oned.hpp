#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lowcore/core.hpp"

namespace lowcore {

// Sorted 1-d weighted points with prefix sums. Prefix arrays are extended
// precision so that range statistics survive cancellation on large inputs.
class Sorted1D {
public:
    Sorted1D() = default;
    explicit Sorted1D(const WeightedPointSet& P);
    Sorted1D(std::vector<double> xs, std::vector<double> ws);

    std::size_t size() const { return coords_.size(); }
    bool empty() const { return coords_.empty(); }
    double x(std::size_t i) const { return coords_[i]; }
    double w(std::size_t i) const { return weights_[i]; }
    const std::vector<double>& coords() const { return coords_; }
    const std::vector<double>& weights() const { return weights_; }
    const std::vector<long double>& prefix_w() const { return prefix_w_; }
    const std::vector<long double>& prefix_wx() const { return prefix_wx_; }

    long double weight_range(std::size_t lo, std::size_t hi) const { return prefix_w_[hi] - prefix_w_[lo]; }
    long double wx_range(std::size_t lo, std::size_t hi) const { return prefix_wx_[hi] - prefix_wx_[lo]; }
    double total_weight() const { return double(prefix_w_.back()); }

    // First index in [lo, hi) whose coordinate is > c (hi if none).
    std::size_t upper_index(double c, std::size_t lo, std::size_t hi) const;
    std::size_t upper_index(double c) const { return upper_index(c, 0, size()); }

    // sum_{i in [lo,hi)} w_i |x_i - c|, with `split` = first index in range with x > c.
    long double abs_dev(std::size_t lo, std::size_t hi, double c, std::size_t split) const;
    long double abs_dev(std::size_t lo, std::size_t hi, double c) const {
        return abs_dev(lo, hi, c, upper_index(c, lo, hi));
    }

    // f(c) = cost(P, {c}) and cost(P, {a, b}) for z = 1.
    double cost1(double c) const { return double(abs_dev(0, size(), c)); }
    double cost2(double a, double b) const;

    WeightedPointSet to_point_set() const;
    // Merge equal coordinates (weights summed).
    Sorted1D compressed() const;

private:
    void build_prefix();

    std::vector<double> coords_;
    std::vector<double> weights_;
    std::vector<long double> prefix_w_{0.0L};
    std::vector<long double> prefix_wx_{0.0L};
};

struct Bucket {
    std::size_t lo = 0, hi = 0;  // inclusive
    double N = 0.0;
    double L = 0.0;
    double mu = 0.0;
    double delta = 0.0;
};

Bucket bucket_stats(const Sorted1D& S1, std::size_t lo, std::size_t hi);

// Index of the smallest coordinate whose cumulative weight reaches half the total.
std::size_t weighted_median_index(const Sorted1D& S1);
double weighted_median(const Sorted1D& S1);

struct KMedianResult {
    double opt = 0.0;
    CenterSet centers;
    // Coordinate span [cluster_lo[c], cluster_hi[c]] of each cluster.
    std::vector<double> cluster_lo, cluster_hi;
};

KMedianResult exact_kmedian_1d(const Sorted1D& S1, int k);
// Quadratic reference DP without the monotone split speedup.
KMedianResult exact_kmedian_1d_quadratic(const Sorted1D& S1, int k);

WeightedPointSet baseline_coreset(const Sorted1D& S1, int k, double eps);
std::vector<Bucket> baseline_buckets(const Sorted1D& S1, double threshold);

enum class Side { left, right };

struct Block {
    int index = 0;
    Side side = Side::left;
    std::size_t lo = 0, hi = 0;  // inclusive point range
    double band_lo = 0.0, band_hi = 0.0;
    std::vector<Bucket> buckets;
};

struct Coreset1DTrace {
    double eps = 0.0;
    double eps_internal = 0.0;
    double opt = 0.0;
    std::size_t median = 0;
    std::size_t left_count = 0;   // points in the left endpoint bucket
    std::size_t right_start = 0;  // first index of the right endpoint bucket
    std::optional<Bucket> left_end, right_end;
    std::vector<Block> blocks;
    WeightedPointSet coreset;
};

inline constexpr double kDefaultCalibration = 4.0;

// Band index i with 2^i * opt <= value < 2^{i+1} * opt, clipped below at 0.
int band_index(double value, double opt);

// Endpoint bucket sizes: prefix/suffix holding at most floor(eps * W) weight.
std::pair<std::size_t, std::size_t> endpoint_ranges(const Sorted1D& S1, double eps);

std::vector<Block> block_partition(const Sorted1D& S1, double opt, double eps);

// Greedy maximal buckets under delta <= threshold over [lo, hi]; forward scans
// left to right, otherwise right to left.
std::vector<Bucket> greedy_buckets(const Sorted1D& S1, std::size_t lo, std::size_t hi, double threshold,
                                   bool forward);

Coreset1DTrace coreset_1d_1median_traced(const Sorted1D& S1, double eps, double calibration = kDefaultCalibration);
WeightedPointSet coreset_1d_1median(const Sorted1D& S1, double eps, double calibration = kDefaultCalibration);

}  // namespace lowcore
