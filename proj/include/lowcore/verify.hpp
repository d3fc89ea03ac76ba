#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lowcore/core.hpp"
#include "lowcore/oned.hpp"

namespace lowcore {

// Continuous piecewise affine function of one variable given by its values at
// sorted breakpoints and the slopes of the two unbounded pieces.
class PiecewiseAffineCost {
public:
    PiecewiseAffineCost(std::vector<double> breakpoints, std::vector<double> values, double left_slope,
                        double right_slope);

    // f(c) = cost(P, {c}).
    static PiecewiseAffineCost kmedian1(const Sorted1D& S1);
    // g(c) = cost(P, {0, c}).
    static PiecewiseAffineCost fixed0(const Sorted1D& S1);

    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<double>& values() const { return values_; }
    double left_slope() const { return left_slope_; }
    double right_slope() const { return right_slope_; }

    double operator()(double c) const;
    // Slopes of all pieces, left unbounded piece first.
    std::vector<double> slopes() const;
    bool is_convex(double rel_tol = 1e-9) const;

private:
    std::vector<double> breakpoints_;
    std::vector<double> values_;
    double left_slope_, right_slope_;
};

enum class AuditMethod { exact_k1, exact_k2_fixed, exact_k2, stochastic };
std::string method_name(AuditMethod m);

struct AuditReport {
    double max_rel_error = 0.0;
    CenterSet witness_centers;
    AuditMethod method = AuditMethod::exact_k1;
    std::uint64_t evaluations = 0;
    std::uint64_t seed = 0;
    // The supremum is a limit with centers escaping to infinity; the witness
    // then holds signed infinities.
    bool at_infinity = false;
    // An exact audit was requested but the cap forced the stochastic method.
    bool fallback = false;
};

struct AuditCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultArrangementCap = 2000;

AuditReport audit_1d_1median(const WeightedPointSet& P, const WeightedPointSet& S);
AuditReport audit_1d_2median_fixed0(const WeightedPointSet& P, const WeightedPointSet& S);
AuditReport audit_1d_2median(const WeightedPointSet& P, const WeightedPointSet& S,
                             std::size_t cap = kDefaultArrangementCap);
// Exact maximum along the line c1 = a of the two-center arrangement.
AuditReport audit_1d_2median_on_line(const WeightedPointSet& P, const WeightedPointSet& S, double a);

struct StochasticOptions {
    std::size_t budget = 20000;
    std::uint64_t seed = 1;
    // Center sets evaluated first and used as local-search starts.
    std::vector<CenterSet> initial;
};

AuditReport audit_stochastic(const WeightedPointSet& P, const WeightedPointSet& S, int k, double z,
                             const StochasticOptions& opts);
inline AuditReport audit_stochastic(const WeightedPointSet& P, const WeightedPointSet& S, int k, double z,
                                    std::size_t budget, std::uint64_t seed) {
    return audit_stochastic(P, S, k, z, StochasticOptions{budget, seed, {}});
}

struct MixedCheckReport {
    double worst_ratio = 0.0;
    std::vector<double> witness;
    double witness_radius = 0.0;
    std::vector<double> radii;
    std::vector<double> worst_per_radius;
    std::uint64_t evaluations = 0;
    std::uint64_t seed = 0;
};

// radii log-spaced over [lo, hi] with `count` values.
std::vector<double> log_spaced(double lo, double hi, std::size_t count);

MixedCheckReport check_mixed_coreset(const WeightedPointSet& P, const WeightedPointSet& S, double eps, double z,
                                     const std::vector<double>& radii, std::size_t samples, std::uint64_t seed);

}  // namespace lowcore
