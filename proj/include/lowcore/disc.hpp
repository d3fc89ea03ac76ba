#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "lowcore/core.hpp"
#include "lowcore/verify.hpp"

namespace lowcore {

struct LiftedPoint {
    std::vector<double> raw;
    std::vector<double> lifted;  // (|p|^2 / 2, p / sqrt(2), 1/2)
};

LiftedPoint lift_phi(std::span<const double> p);
// (1/(8 r^2), -c' / (sqrt(2) r), 2 |c'|^2); <phi(p), psi(c')> = |p/(4r) - c'|^2.
std::vector<double> lift_psi(std::span<const double> c_prime, double r);
std::vector<double> reconstruct_raw(const LiftedPoint& lp);
std::vector<LiftedPoint> lift_all(const WeightedPointSet& P, double scale = 1.0);

struct SignColoring {
    std::vector<int> signs;
    std::map<int, double> achieved_norms;  // tensor order -> estimated norm
    double potential = 0.0;
    double random_potential = 0.0;  // seeded random balanced coloring, same orders
    bool used_random = false;
};

// sum_l (1/l!) |sum_p sigma_p phi(p)^{(x) l}|_F^2 for l = 1..order_cap
double coloring_potential(const std::vector<LiftedPoint>& pts, const std::vector<int>& signs, int order_cap);
std::vector<int> random_balanced_coloring(std::size_t n, std::uint64_t seed);

SignColoring color(const std::vector<LiftedPoint>& pts, int order_cap = 3, std::uint64_t seed = 1);

// max over unit q of |sum_p sigma_p <phi(p), q>^l|; exact for l = 1, a lower
// bound from probes and shifted power iterations otherwise.
double tensor_disc_estimate(const std::vector<LiftedPoint>& pts, const std::vector<int>& signs, int l,
                            std::size_t probes = 64, std::uint64_t seed = 1);

struct HalveResult {
    WeightedPointSet points;
    std::vector<std::size_t> kept;  // indices into the input
};

HalveResult halve(const WeightedPointSet& P, const std::vector<int>& signs);

struct HalvingRound {
    std::size_t size_before = 0, size_after = 0;
    double order1_norm = 0.0;
    double random_median_order1 = 0.0;  // median over random balanced colorings; 0 if not computed
    double drift = 0.0;                 // |sum w p before - sum w p after|
    double drift_bound = 0.0;
    double potential = 0.0, random_potential = 0.0;
};

struct MixedOptions {
    double c_h = 8.0;
    int order_cap = 3;
    std::size_t check_samples = 10000;
    std::size_t baseline_colorings = 32;
    bool run_check = true;
};

struct MixedCoreset {
    WeightedPointSet subset;
    std::vector<std::size_t> source_index;  // survivor -> index in P
    double eps = 0.0, z = 1.0;
    int rounds = 0;
    std::size_t target = 0;
    double empirical_violation = 0.0;
    std::optional<MixedCheckReport> check;
    std::vector<HalvingRound> history;
};

std::size_t mixed_target_size(std::size_t d, double eps, double c_h = 8.0);
MixedCoreset mixed_coreset(const WeightedPointSet& P, double eps, double z, std::uint64_t seed,
                           const MixedOptions& opts = {});

// Lower-bound estimate of max_{c in B(0,r)} (1/n) |sum_p sigma_p |p - c|^z|.
double class_discrepancy_estimate(const WeightedPointSet& P, const std::vector<int>& sigma, double r, double z,
                                  std::size_t samples, std::uint64_t seed);

}  // namespace lowcore
