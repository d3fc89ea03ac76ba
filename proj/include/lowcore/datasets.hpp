#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lowcore/core.hpp"

namespace lowcore {

enum class Dist1D { uniform, gaussian, exponential, bimodal, clustered };

Dist1D parse_dist(const std::string& name);
std::string dist_name(Dist1D d);
std::vector<Dist1D> all_dists();

// Unit-weight 1-d sample, deterministic given seed.
WeightedPointSet generate_1d(Dist1D kind, std::size_t n, std::uint64_t seed);

// Uniform in the closed unit ball of R^d.
WeightedPointSet generate_unit_ball(std::size_t n, std::size_t d, std::uint64_t seed);

}  // namespace lowcore
