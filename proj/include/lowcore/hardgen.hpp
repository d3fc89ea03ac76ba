#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lowcore/core.hpp"

namespace lowcore {

// ---- 1-d interval instance --------------------------------------------------

struct Interval {
    double l = 0.0, r = 0.0, density = 0.0;
    double mass() const { return density * (r - l); }
};

struct Interval1DInstance {
    double eps_requested = 0.0;
    double eps_eff = 0.0;
    int m0 = 0;
    std::vector<Interval> intervals;
    WeightedPointSet points;  // m0 points per interval, ascending
};

Interval1DInstance gen_interval_instance(double eps, int m0 = 16);

// Mass of [a, b] under the piecewise-uniform measure.
double interval_measure(const std::vector<Interval>& iv, double a, double b);
// Integral of min_c |x - c| against the piecewise-uniform measure.
double continuous_cost(const std::vector<Interval>& iv, std::vector<double> centers);
// f(c) = continuous cost to {0, c} and its derivative mu([c/2, c]) - mu([c, inf)) for c > 0.
double continuous_cost_fixed0(const Interval1DInstance& inst, double c);
double continuous_derivative_fixed0(const Interval1DInstance& inst, double c);

struct FeatureReport {
    double bound = 0.0;  // 2 / eps_eff
    double max_discrete = 0.0;
    double max_continuous = 0.0;
    std::size_t grid_points = 0;
    std::size_t breakpoints = 0;
    bool bound_ok = false;

    std::vector<double> second_expected;   // (3/2) mu_i per interval
    std::vector<double> second_worst_rel;  // worst relative deviation per interval
    double second_max_rel = 0.0;
    bool second_ok = false;

    double first_max_abs = 0.0;  // |formula - finite difference|, worst over samples
    bool first_ok = false;
};

FeatureReport feature_audit(const Interval1DInstance& inst, std::size_t grid_points = 100000,
                            std::size_t samples_per_interval = 16);

double default_copy_separation(const Interval1DInstance& inst);
WeightedPointSet gen_k_copies(const Interval1DInstance& inst, int k, double L);

// chosen: (copy index, interval index), both 0-based. Chosen copies receive
// {l_{i,1}, l_{i,j} + t (r_{i,j} - l_{i,j}), r_{i,j}}, the others {l_{i,1}}.
CenterSet query_family_Q(const Interval1DInstance& inst, int k, double L, double t,
                         const std::vector<std::pair<int, int>>& chosen);

// ---- subspace instances ----------------------------------------------------

enum class SubspaceVariant { main, appendix };
std::string variant_name(SubspaceVariant v);

struct SubspaceInstance {
    int k = 0, d = 0;
    double z = 2.0;
    double L = 0.0;
    SubspaceVariant variant = SubspaceVariant::main;
    int groups = 0;     // k/2 (main) or k (appendix); group j (1-based) sits at j L e_0
    int per_group = 0;  // d/2 (main) or d (appendix)
    WeightedPointSet points;  // in R^{d+1}, coordinate 0 is e_0
};

double default_separation(int k, int d, double z);
SubspaceInstance gen_subspace_instance(int k, int d, SubspaceVariant variant, double z = 2.0);

struct HadamardBasis {
    int m = 0;
    int d = 0;
    std::vector<std::vector<int>> signs;       // m x m, entries +-1
    std::vector<std::vector<double>> vectors;  // m rows of length d, scaled by 1/sqrt(m)
};

HadamardBasis hadamard(int m);
// m = largest power of two <= d, rows zero-padded to d coordinates.
HadamardBasis hadamard_for_dim(int d);

struct SubspacePartition {
    std::vector<int> group_of;     // j_p (1-based) per coreset point
    std::vector<double> delta;     // p_0 - j_p L
    std::vector<std::vector<std::size_t>> members;  // index 0 unused
    std::vector<bool> in_I;                         // index 0 unused
    double threshold = 0.0;
    int size_I = 0;
};

// Threshold on |S_j| defining I: d/4 at z = 2, d/t^2 otherwise.
double partition_threshold(int d, double z);
double lb_threshold_t(double z);
SubspacePartition partition_coreset(const SubspaceInstance& inst, const WeightedPointSet& S);
SubspacePartition partition_coreset(const SubspaceInstance& inst, const WeightedPointSet& S, double threshold);

CenterSet centers_C1(const SubspaceInstance& inst, const WeightedPointSet& S, const SubspacePartition& part);

struct C2Result {
    CenterSet centers;
    // Per group in I: both sides of the small-set inequality.
    std::vector<int> groups;
    std::vector<double> lhs, rhs;
    bool validated = true;
};

C2Result centers_C2(const SubspaceInstance& inst, const WeightedPointSet& S, const SubspacePartition& part,
                    double z, std::uint64_t seed = 1);

// ell is 1-based in [1, m].
CenterSet centers_C3(const SubspaceInstance& inst, const WeightedPointSet& S, const SubspacePartition& part,
                     int ell);

struct AdversarialReport {
    CenterSet Q;
    CenterSet Q_anchor;
    std::vector<double> v_norms;  // per group, 0 for skipped groups
    double cost_P_Q = 0.0, cost_S_Q = 0.0;
    double gap = 0.0, gap_formula = 0.0;
    double cost_P_anchor = 0.0, cost_S_anchor = 0.0;
    double rel_error_Q = 0.0;
    bool gap_ok = false;
};

AdversarialReport adversarial_query_subset(const SubspaceInstance& inst, const WeightedPointSet& coreset);

// Sum over i <= d/2 of min_l ||e_i - c_l||^z for unit vectors c_l in R^d.
double cost_to_basis(int d, const std::vector<std::vector<double>>& centers, double z);
double cost_to_basis_bound(int d, int k, double z);

enum class Relation { eq, le, ge };

struct LedgerEntry {
    std::string name;
    double lhs = 0.0, rhs = 0.0;
    Relation rel = Relation::eq;
    bool holds = false;
};

struct LedgerReport {
    double z = 2.0, eps = 0.0;
    double t = 0.0;
    int m = 0;
    int size_I = 0;
    double kappa = 0.0;
    double weight_sum = 0.0;  // sum over the relevant groups of w (Delta^2 + |p~|^2 + 1)^{z/2}
    std::vector<double> deltas;
    std::vector<LedgerEntry> entries;

    bool all_equalities_hold() const;
    bool all_hold() const;
};

LedgerReport lb_inequality_ledger(const SubspaceInstance& inst, const WeightedPointSet& S, double z, double eps,
                                  std::uint64_t seed = 1);

}  // namespace lowcore
