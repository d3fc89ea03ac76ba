#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "lowcore/disc.hpp"

namespace lowcore {

namespace {

constexpr std::size_t kExactPairingLimit = 8192;
constexpr std::size_t kPairingWindow = 64;
constexpr int kImprovePasses = 20;

// Flattened tensor powers a, a(x)a, ... up to order_cap.
struct TensorStack {
    std::size_t D = 0;
    int cap = 0;
    std::vector<std::vector<double>> V;  // V[l-1] has D^l entries
    std::vector<double> alpha;           // 1 / l!

    TensorStack(std::size_t dim, int order_cap) : D(dim), cap(order_cap) {
        if (order_cap < 1) throw std::invalid_argument("order_cap must be >= 1");
        double size = 1.0, fact = 1.0;
        for (int l = 1; l <= cap; ++l) {
            size *= double(D);
            fact *= l;
            if (size > 4e6) throw std::invalid_argument("tensor order too large for this dimension");
            V.emplace_back(std::size_t(size), 0.0);
            alpha.push_back(1.0 / fact);
        }
    }

    std::vector<std::vector<double>> powers(const std::vector<double>& a) const {
        std::vector<std::vector<double>> out;
        out.push_back(a);
        for (int l = 2; l <= cap; ++l) {
            const auto& prev = out.back();
            std::vector<double> next(prev.size() * D);
            for (std::size_t i = 0; i < prev.size(); ++i)
                for (std::size_t t = 0; t < D; ++t) next[i * D + t] = prev[i] * a[t];
            out.push_back(std::move(next));
        }
        return out;
    }

    // sum_l alpha_l <V_l, u_l>, u = pow(a) - pow(b) (b may be null).
    double field(const std::vector<std::vector<double>>& pa, const std::vector<std::vector<double>>* pb) const {
        double s = 0.0;
        for (int l = 0; l < cap; ++l) {
            double ip = 0.0;
            for (std::size_t i = 0; i < V[l].size(); ++i) ip += V[l][i] * (pa[l][i] - (pb ? (*pb)[l][i] : 0.0));
            s += alpha[l] * ip;
        }
        return s;
    }

    double self(const std::vector<std::vector<double>>& pa, const std::vector<std::vector<double>>* pb) const {
        double s = 0.0;
        for (int l = 0; l < cap; ++l) {
            double ip = 0.0;
            for (std::size_t i = 0; i < V[l].size(); ++i) {
                double u = pa[l][i] - (pb ? (*pb)[l][i] : 0.0);
                ip += u * u;
            }
            s += alpha[l] * ip;
        }
        return s;
    }

    void add(double s, const std::vector<std::vector<double>>& pa, const std::vector<std::vector<double>>* pb) {
        for (int l = 0; l < cap; ++l)
            for (std::size_t i = 0; i < V[l].size(); ++i) V[l][i] += s * (pa[l][i] - (pb ? (*pb)[l][i] : 0.0));
    }

    double potential() const {
        double s = 0.0;
        for (int l = 0; l < cap; ++l) {
            double ip = 0.0;
            for (double x : V[l]) ip += x * x;
            s += alpha[l] * ip;
        }
        return s;
    }
};

double sq(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return s;
}

// Greedy nearest-neighbour pairing in lifted space, visiting points in a seeded order.
std::vector<std::pair<std::size_t, std::size_t>> pair_points(const std::vector<LiftedPoint>& pts, std::mt19937_64& rng,
                                                             std::size_t& unpaired) {
    const std::size_t n = pts.size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<char> used(n, 0);
    unpaired = n;
    if (n <= kExactPairingLimit) {
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        for (std::size_t a : order) {
            if (used[a]) continue;
            std::size_t best = n;
            double bd = std::numeric_limits<double>::infinity();
            for (std::size_t b = 0; b < n; ++b) {
                if (used[b] || b == a) continue;
                double d = sq(pts[a].lifted, pts[b].lifted);
                if (d < bd) {
                    bd = d;
                    best = b;
                }
            }
            used[a] = 1;
            if (best == n) {
                unpaired = a;
                break;
            }
            used[best] = 1;
            pairs.emplace_back(a, best);
        }
        return pairs;
    }
    // Large inputs: sort along a random direction and pair within a sliding window.
    const std::size_t D = pts[0].lifted.size();
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<double> dir(D);
    for (double& x : dir) x = g(rng);
    std::vector<std::pair<double, std::size_t>> key(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t t = 0; t < D; ++t) s += dir[t] * pts[i].lifted[t];
        key[i] = {s, i};
    }
    std::sort(key.begin(), key.end());
    for (std::size_t pos = 0; pos < n; ++pos) {
        std::size_t a = key[pos].second;
        if (used[a]) continue;
        used[a] = 1;
        std::size_t best = n, seen = 0;
        double bd = std::numeric_limits<double>::infinity();
        for (std::size_t q = pos + 1; q < n && seen < kPairingWindow; ++q) {
            std::size_t b = key[q].second;
            if (used[b]) continue;
            ++seen;
            double d = sq(pts[a].lifted, pts[b].lifted);
            if (d < bd) {
                bd = d;
                best = b;
            }
        }
        if (best == n) {
            unpaired = a;
            break;
        }
        used[best] = 1;
        pairs.emplace_back(a, best);
    }
    return pairs;
}

}  // namespace

double coloring_potential(const std::vector<LiftedPoint>& pts, const std::vector<int>& signs, int order_cap) {
    if (signs.size() != pts.size()) throw std::invalid_argument("one sign per point required");
    if (pts.empty()) return 0.0;
    TensorStack T(pts[0].lifted.size(), order_cap);
    for (std::size_t i = 0; i < pts.size(); ++i) T.add(signs[i], T.powers(pts[i].lifted), nullptr);
    return T.potential();
}

std::vector<int> random_balanced_coloring(std::size_t n, std::uint64_t seed) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> s(n, -1);
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) s[order[i]] = 1;
    return s;
}

SignColoring color(const std::vector<LiftedPoint>& pts, int order_cap, std::uint64_t seed) {
    SignColoring out;
    const std::size_t n = pts.size();
    if (n == 0) return out;
    std::mt19937_64 rng(seed);
    std::size_t unpaired = n;
    auto pairs = pair_points(pts, rng, unpaired);

    TensorStack T(pts[0].lifted.size(), order_cap);

    std::vector<int> s(pairs.size(), 1);
    std::vector<std::size_t> visit(pairs.size());
    std::iota(visit.begin(), visit.end(), 0);
    std::shuffle(visit.begin(), visit.end(), rng);
    for (std::size_t k : visit) {
        auto pa = T.powers(pts[pairs[k].first].lifted), pb = T.powers(pts[pairs[k].second].lifted);
        s[k] = T.field(pa, &pb) > 0.0 ? -1 : 1;
        T.add(s[k], pa, &pb);
    }
    for (int pass = 0; pass < kImprovePasses; ++pass) {
        bool improved = false;
        for (std::size_t k : visit) {
            auto pa = T.powers(pts[pairs[k].first].lifted), pb = T.powers(pts[pairs[k].second].lifted);
            if (s[k] * T.field(pa, &pb) > T.self(pa, &pb) * (1.0 + 1e-12)) {
                T.add(-2.0 * s[k], pa, &pb);
                s[k] = -s[k];
                improved = true;
            }
        }
        if (!improved) break;
    }

    out.signs.assign(n, 0);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        out.signs[pairs[k].first] = s[k];
        out.signs[pairs[k].second] = -s[k];
    }
    if (unpaired < n) out.signs[unpaired] = T.field(T.powers(pts[unpaired].lifted), nullptr) > 0.0 ? -1 : 1;

    out.potential = coloring_potential(pts, out.signs, order_cap);
    auto rnd = random_balanced_coloring(n, seed ^ 0x9e3779b97f4a7c15ULL);
    out.random_potential = coloring_potential(pts, rnd, order_cap);
    if (out.random_potential < out.potential) {
        out.signs = rnd;
        out.potential = out.random_potential;
        out.used_random = true;
    }
    for (int l = 1; l <= order_cap; ++l) out.achieved_norms[l] = tensor_disc_estimate(pts, out.signs, l, 64, seed + l);
    return out;
}

HalveResult halve(const WeightedPointSet& P, const std::vector<int>& signs) {
    const std::size_t n = P.size();
    if (n <= 1) throw std::invalid_argument("cannot halve fewer than two points");
    if (signs.size() != n) throw std::invalid_argument("one sign per point required");
    std::size_t plus = 0;
    for (int s : signs) {
        if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");
        plus += s == 1;
    }
    std::size_t minus = n - plus;
    if ((plus > minus ? plus - minus : minus - plus) > 1) throw std::invalid_argument("coloring is not balanced");
    const int keep = plus == n / 2 ? 1 : -1;

    HalveResult r;
    r.points = WeightedPointSet(P.dim());
    double w_before = P.total_weight(), w_kept = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        if (signs[i] == keep) {
            r.kept.push_back(i);
            w_kept += P.weight(i);
        }
    const double factor = n % 2 == 0 ? 2.0 : w_before / w_kept;
    for (std::size_t i : r.kept) r.points.add(P.point(i), P.weight(i) * factor);
    return r;
}

}  // namespace lowcore
