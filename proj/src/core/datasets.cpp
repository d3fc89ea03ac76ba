#include "lowcore/datasets.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace lowcore {

Dist1D parse_dist(const std::string& name) {
    for (auto d : all_dists())
        if (dist_name(d) == name) return d;
    throw std::invalid_argument("unknown distribution: " + name);
}

std::string dist_name(Dist1D d) {
    switch (d) {
        case Dist1D::uniform: return "uniform";
        case Dist1D::gaussian: return "gaussian";
        case Dist1D::exponential: return "exponential";
        case Dist1D::bimodal: return "bimodal";
        case Dist1D::clustered: return "clustered";
    }
    return "?";
}

std::vector<Dist1D> all_dists() {
    return {Dist1D::uniform, Dist1D::gaussian, Dist1D::exponential, Dist1D::bimodal, Dist1D::clustered};
}

WeightedPointSet generate_1d(Dist1D kind, std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<double> xs(n);
    switch (kind) {
        case Dist1D::uniform: {
            std::uniform_real_distribution<double> u(0.0, 1.0);
            for (auto& x : xs) x = u(rng);
            break;
        }
        case Dist1D::gaussian: {
            std::normal_distribution<double> g(0.0, 1.0);
            for (auto& x : xs) x = g(rng);
            break;
        }
        case Dist1D::exponential: {
            std::exponential_distribution<double> e(1.0);
            for (auto& x : xs) x = e(rng);
            break;
        }
        case Dist1D::bimodal: {
            std::normal_distribution<double> a(-2.0, 0.5), b(3.0, 1.0);
            std::bernoulli_distribution coin(0.4);
            for (auto& x : xs) x = coin(rng) ? a(rng) : b(rng);
            break;
        }
        case Dist1D::clustered: {
            std::uniform_real_distribution<double> u(0.0, 100.0);
            std::vector<double> centers(10);
            for (auto& c : centers) c = u(rng);
            std::uniform_int_distribution<std::size_t> pick(0, centers.size() - 1);
            std::normal_distribution<double> g(0.0, 0.3);
            for (auto& x : xs) x = centers[pick(rng)] + g(rng);
            break;
        }
    }
    return WeightedPointSet::from_1d(xs);
}

WeightedPointSet generate_unit_ball(std::size_t n, std::size_t d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    WeightedPointSet P(d);
    std::vector<double> p(d);
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (auto& x : p) {
            x = g(rng);
            s += x * x;
        }
        double r = std::pow(u(rng), 1.0 / double(d)) / std::sqrt(s);
        for (auto& x : p) x *= r;
        P.add(p);
    }
    return P;
}

}  // namespace lowcore
