#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "lowcore/disc.hpp"

namespace lowcore {

namespace {

double ipow(double x, int l) {
    double r = 1.0;
    for (int i = 0; i < l; ++i) r *= x;
    return r;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool normalize(std::vector<double>& v) {
    double n = std::sqrt(dot(v, v));
    if (!(n > 0.0)) return false;
    for (double& x : v) x /= n;
    return true;
}

}  // namespace

LiftedPoint lift_phi(std::span<const double> p) {
    double n2 = 0.0;
    for (double x : p) n2 += x * x;
    if (n2 > 1.0 + 1e-12) throw std::invalid_argument("lifted point must lie in the unit ball");
    LiftedPoint lp;
    lp.raw.assign(p.begin(), p.end());
    lp.lifted.reserve(p.size() + 2);
    lp.lifted.push_back(0.5 * n2);
    for (double x : p) lp.lifted.push_back(std::sqrt(2.0) / 2 * x);
    lp.lifted.push_back(0.5);
    return lp;
}

std::vector<double> lift_psi(std::span<const double> c_prime, double r) {
    if (!(r >= 1.0)) throw std::invalid_argument("radius must be at least 1");
    double n2 = 0.0;
    for (double x : c_prime) n2 += x * x;
    if (n2 > 1.0 / 16 + 1e-12) throw std::invalid_argument("c' must lie in B(0, 1/4)");
    std::vector<double> out;
    out.reserve(c_prime.size() + 2);
    out.push_back(1.0 / (8 * r * r));
    for (double x : c_prime) out.push_back(-std::sqrt(2.0) / (2 * r) * x);
    out.push_back(2.0 * n2);
    return out;
}

std::vector<double> reconstruct_raw(const LiftedPoint& lp) {
    if (lp.lifted.size() < 2) throw DimensionError("lifted vector too short");
    std::vector<double> raw(lp.lifted.begin() + 1, lp.lifted.end() - 1);
    for (double& x : raw) x *= std::sqrt(2.0);
    return raw;
}

std::vector<LiftedPoint> lift_all(const WeightedPointSet& P, double scale) {
    if (!(scale > 0.0)) throw std::invalid_argument("scale must be positive");
    std::vector<LiftedPoint> out;
    out.reserve(P.size());
    std::vector<double> q(P.dim());
    for (std::size_t i = 0; i < P.size(); ++i) {
        auto p = P.point(i);
        for (std::size_t t = 0; t < q.size(); ++t) q[t] = p[t] / scale;
        out.push_back(lift_phi(q));
    }
    return out;
}

double tensor_disc_estimate(const std::vector<LiftedPoint>& pts, const std::vector<int>& signs, int l,
                            std::size_t probes, std::uint64_t seed) {
    if (l < 1) throw std::invalid_argument("tensor order must be >= 1");
    if (signs.size() != pts.size()) throw std::invalid_argument("one sign per point required");
    if (pts.empty()) return 0.0;
    const std::size_t D = pts[0].lifted.size();

    if (l == 1) {
        std::vector<double> v(D, 0.0);
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t t = 0; t < D; ++t) v[t] += signs[i] * pts[i].lifted[t];
        return std::sqrt(dot(v, v));
    }

    auto F = [&](const std::vector<double>& q) {
        double s = 0.0;
        for (std::size_t i = 0; i < pts.size(); ++i) s += signs[i] * ipow(dot(pts[i].lifted, q), l);
        return s;
    };
    auto grad = [&](const std::vector<double>& q) {
        std::vector<double> g(D, 0.0);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            double c = signs[i] * l * ipow(dot(pts[i].lifted, q), l - 1);
            for (std::size_t t = 0; t < D; ++t) g[t] += c * pts[i].lifted[t];
        }
        return g;
    };

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g01(0.0, 1.0);
    std::vector<std::vector<double>> starts;
    for (std::size_t s = 0; s < probes; ++s) {
        std::vector<double> q(D);
        for (double& x : q) x = g01(rng);
        if (normalize(q)) starts.push_back(std::move(q));
    }
    std::vector<std::size_t> order(pts.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t s = 0; s < std::min<std::size_t>(64, order.size()); ++s) {
        std::vector<double> q = pts[order[s]].lifted;
        if (normalize(q)) starts.push_back(std::move(q));
    }
    if (starts.empty()) return 0.0;

    std::vector<std::pair<double, std::size_t>> ranked;
    for (std::size_t s = 0; s < starts.size(); ++s) ranked.emplace_back(std::fabs(F(starts[s])), s);
    std::sort(ranked.begin(), ranked.end(), [](auto& a, auto& b) { return a.first > b.first || (a.first == b.first && a.second < b.second); });

    double best = ranked.front().first;
    const double alpha = l * std::max(best, 1e-300);
    for (std::size_t r = 0; r < std::min<std::size_t>(8, ranked.size()); ++r) {
        std::vector<double> q = starts[ranked[r].second];
        for (int sgn : {1, -1}) {
            std::vector<double> x = q;
            double prev = sgn * F(x);
            for (int it = 0; it < 300; ++it) {
                auto g = grad(x);
                for (std::size_t t = 0; t < D; ++t) g[t] = sgn * g[t] + alpha * x[t];
                if (!normalize(g)) break;
                x = std::move(g);
                double cur = sgn * F(x);
                best = std::max(best, std::fabs(cur));
                if (std::fabs(cur - prev) <= 1e-14 * std::max(1.0, std::fabs(cur))) {
                    prev = cur;
                    break;
                }
                prev = cur;
            }
            best = std::max(best, std::fabs(prev));
        }
    }
    return best;
}

}  // namespace lowcore
