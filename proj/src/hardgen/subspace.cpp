#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <random>

#include "lowcore/hardgen.hpp"

namespace lowcore {

namespace {

bool is_z2(double z) { return std::fabs(z - 2.0) < 1e-12; }

void require_main(const SubspaceInstance& inst) {
    if (inst.variant != SubspaceVariant::main)
        throw std::invalid_argument("center families are defined for the main subspace variant");
}

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

std::vector<double> anchored(const SubspaceInstance& inst, int j, std::span<const double> tail) {
    std::vector<double> c(inst.d + 1, 0.0);
    c[0] = j * inst.L;
    std::copy(tail.begin(), tail.end(), c.begin() + 1);
    return c;
}

std::vector<double> basis_tail(int d, int i) {
    std::vector<double> e(d, 0.0);
    e[i - 1] = 1.0;
    return e;
}

void add_pair(CenterSet& C, const std::vector<double>& a, const std::vector<double>& b) {
    C.add(a);
    C.add(b);
}

}  // namespace

std::string variant_name(SubspaceVariant v) { return v == SubspaceVariant::main ? "main" : "appendix"; }

double default_separation(int k, int d, double z) { return 1e6 * k * d * std::max(1.0, std::pow(2.0, z)); }

SubspaceInstance gen_subspace_instance(int k, int d, SubspaceVariant variant, double z) {
    if (!(z >= 1.0)) throw std::invalid_argument("z must be at least 1");
    if (k < 1 || d < 1) throw std::invalid_argument("k and d must be positive");
    if (variant == SubspaceVariant::main && (k % 2 != 0 || d % 2 != 0))
        throw std::invalid_argument("main variant needs even k and even d");
    SubspaceInstance inst;
    inst.k = k;
    inst.d = d;
    inst.z = z;
    inst.variant = variant;
    inst.L = default_separation(k, d, z);
    inst.groups = variant == SubspaceVariant::main ? k / 2 : k;
    inst.per_group = variant == SubspaceVariant::main ? d / 2 : d;
    inst.points = WeightedPointSet(d + 1);
    std::vector<double> p(d + 1);
    for (int j = 1; j <= inst.groups; ++j)
        for (int i = 1; i <= inst.per_group; ++i) {
            std::fill(p.begin(), p.end(), 0.0);
            p[0] = j * inst.L;
            p[i] = 1.0;
            inst.points.add(p, 1.0);
        }
    return inst;
}

HadamardBasis hadamard(int m) {
    if (m < 1 || !std::has_single_bit(unsigned(m))) throw std::invalid_argument("hadamard order must be a power of two");
    HadamardBasis H;
    H.m = m;
    H.d = m;
    const double s = 1.0 / std::sqrt(double(m));
    H.signs.assign(m, std::vector<int>(m));
    H.vectors.assign(m, std::vector<double>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            H.signs[a][b] = std::popcount(unsigned(a & b)) % 2 ? -1 : 1;
            H.vectors[a][b] = H.signs[a][b] * s;
        }
    return H;
}

HadamardBasis hadamard_for_dim(int d) {
    if (d < 1) throw std::invalid_argument("dimension must be positive");
    HadamardBasis H = hadamard(int(std::bit_floor(unsigned(d))));
    H.d = d;
    for (auto& v : H.vectors) v.resize(d, 0.0);
    return H;
}

double lb_threshold_t(double z) {
    double h = (z / 2) * (z / 2);
    return 4.0 * std::max(1.0, h) / std::min(1.0, h);
}

double partition_threshold(int d, double z) {
    if (is_z2(z)) return d / 4.0;
    double t = lb_threshold_t(z);
    return d / (t * t);
}

SubspacePartition partition_coreset(const SubspaceInstance& inst, const WeightedPointSet& S) {
    return partition_coreset(inst, S, partition_threshold(inst.d, inst.z));
}

SubspacePartition partition_coreset(const SubspaceInstance& inst, const WeightedPointSet& S, double threshold) {
    if (S.dim() != std::size_t(inst.d + 1)) throw DimensionError("coreset dimension does not match instance");
    SubspacePartition part;
    part.threshold = threshold;
    part.members.assign(inst.groups + 1, {});
    for (std::size_t i = 0; i < S.size(); ++i) {
        double p0 = S.point(i)[0];
        int j = int(std::clamp(std::floor(p0 / inst.L), 1.0, double(inst.groups)));
        if (j < inst.groups && std::fabs(p0 - (j + 1) * inst.L) < std::fabs(p0 - j * inst.L)) ++j;
        part.group_of.push_back(j);
        part.delta.push_back(p0 - j * inst.L);
        part.members[j].push_back(i);
    }
    part.in_I.assign(inst.groups + 1, false);
    for (int j = 1; j <= inst.groups; ++j)
        if (double(part.members[j].size()) <= threshold) {
            part.in_I[j] = true;
            ++part.size_I;
        }
    return part;
}

CenterSet centers_C1(const SubspaceInstance& inst, const WeightedPointSet& S, const SubspacePartition& part) {
    require_main(inst);
    const int d = inst.d, h = d / 2;
    CenterSet C(d + 1);
    for (int j = 1; j <= inst.groups; ++j) {
        std::vector<double> tail = basis_tail(d, h + 1);
        if (part.in_I[j]) {
            // Orthonormal basis of the S_j tails on coordinates h+1..d.
            std::vector<std::vector<double>> Q;
            auto reduce = [&Q](std::vector<double>& v) {
                for (int pass = 0; pass < 2; ++pass)
                    for (const auto& q : Q) {
                        double a = dot(v, q);
                        for (std::size_t t = 0; t < v.size(); ++t) v[t] -= a * q[t];
                    }
            };
            for (std::size_t idx : part.members[j]) {
                auto p = S.point(idx);
                std::vector<double> v(p.begin() + 1 + h, p.end());
                double n0 = norm(v);
                reduce(v);
                double n = norm(v);
                if (n > 1e-10 * std::max(1.0, n0)) {
                    for (double& x : v) x /= n;
                    Q.push_back(std::move(v));
                }
            }
            bool found = false;
            for (int c = 0; c < d - h && !found; ++c) {
                std::vector<double> v(d - h, 0.0);
                v[c] = 1.0;
                reduce(v);
                double n = norm(v);
                if (n > 1e-8) {
                    std::fill(tail.begin(), tail.end(), 0.0);
                    for (int t = 0; t < d - h; ++t) tail[h + t] = v[t] / n;
                    found = true;
                }
            }
            if (!found) throw std::runtime_error("no unit direction orthogonal to the group's coreset points");
        }
        auto c = anchored(inst, j, tail);
        add_pair(C, c, c);
    }
    return C;
}

C2Result centers_C2(const SubspaceInstance& inst, const WeightedPointSet& S, const SubspacePartition& part, double z,
                    std::uint64_t seed) {
    require_main(inst);
    const int d = inst.d;
    C2Result res;
    res.centers = CenterSet(d + 1);
    const CenterSet C1 = centers_C1(inst, S, part);
    std::mt19937_64 rng(seed);

    for (int j = 1; j <= inst.groups; ++j) {
        if (!part.in_I[j]) {
            add_pair(res.centers, std::vector<double>(C1.center(2 * (j - 1)).begin(), C1.center(2 * (j - 1)).end()),
                     std::vector<double>(C1.center(2 * (j - 1)).begin(), C1.center(2 * (j - 1)).end()));
            continue;
        }
        const auto& mem = part.members[j];
        const std::size_t t = mem.size();
        std::vector<std::vector<double>> pt(t);
        std::vector<double> w(t), A(t), a(t), dsq(t);
        double rhs = 0.0, lin = 0.0;
        for (std::size_t q = 0; q < t; ++q) {
            auto p = S.point(mem[q]);
            pt[q].assign(p.begin() + 1, p.end());
            w[q] = S.weight(mem[q]);
            double del = part.delta[mem[q]];
            dsq[q] = del * del;
            A[q] = dot(pt[q], pt[q]) + 1.0 + dsq[q];
            a[q] = std::pow(A[q], z / 2 - 1);
            rhs += w[q] * std::pow(A[q], z / 2);
            lin += w[q] * a[q] * norm(pt[q]);
        }
        if (t > 0) rhs -= std::min(1.0, z / 2) * 2.0 * lin / std::sqrt(double(t));

        auto lhs_of = [&](const std::vector<double>& v) {
            double s = 0.0;
            for (std::size_t q = 0; q < t; ++q) {
                double ip = dot(pt[q], v);
                double nq = dot(pt[q], pt[q]);
                double best = std::min(nq + 1.0 - 2.0 * ip, nq + 1.0 + 2.0 * ip);
                s += w[q] * std::pow(std::max(0.0, best) + dsq[q], z / 2);
            }
            return s;
        };
        auto from_signs = [&](const std::vector<int>& sg, std::vector<double>& v) {
            v.assign(d, 0.0);
            for (std::size_t q = 0; q < t; ++q)
                for (int c = 0; c < d; ++c) v[c] += sg[q] * w[q] * a[q] * pt[q][c];
            double n = norm(v);
            if (!(n > 0.0)) return false;
            for (double& x : v) x /= n;
            return true;
        };

        std::vector<double> best_v = basis_tail(d, 1);
        double best = lhs_of(best_v);
        auto consider = [&](const std::vector<double>& v) {
            double l = lhs_of(v);
            if (l < best) {
                best = l;
                best_v = v;
            }
        };
        std::vector<double> v;
        if (t > 0 && t <= 16) {
            std::vector<int> sg(t, 1);
            for (std::uint32_t mask = 0; mask < (1u << (t - 1)); ++mask) {
                for (std::size_t q = 1; q < t; ++q) sg[q] = (mask >> (q - 1)) & 1 ? -1 : 1;
                if (from_signs(sg, v)) consider(v);
            }
        } else if (t > 16) {
            std::vector<int> sg(t);
            for (int restart = 0; restart < 64; ++restart) {
                for (auto& s : sg) s = rng() & 1 ? 1 : -1;
                for (int it = 0; it < 100; ++it) {
                    if (!from_signs(sg, v)) break;
                    bool changed = false;
                    for (std::size_t q = 0; q < t; ++q) {
                        int s = dot(pt[q], v) >= 0 ? 1 : -1;
                        if (s != sg[q]) {
                            sg[q] = s;
                            changed = true;
                        }
                    }
                    consider(v);
                    if (!changed) break;
                }
            }
        }
        res.groups.push_back(j);
        res.lhs.push_back(best);
        res.rhs.push_back(rhs);
        if (best > rhs + 1e-9 * std::max(1.0, std::fabs(rhs)))
            throw std::runtime_error("small-set inequality could not be validated for group " + std::to_string(j));
        std::vector<double> neg(best_v);
        for (double& x : neg) x = -x;
        add_pair(res.centers, anchored(inst, j, best_v), anchored(inst, j, neg));
    }
    return res;
}

CenterSet centers_C3(const SubspaceInstance& inst, const WeightedPointSet& S, const SubspacePartition& part,
                     int ell) {
    require_main(inst);
    (void)S;
    HadamardBasis H = hadamard_for_dim(inst.d);
    if (ell < 1 || ell > H.m) throw std::out_of_range("Hadamard index out of range");
    CenterSet C(inst.d + 1);
    for (int j = 1; j <= inst.groups; ++j) {
        if (part.in_I[j]) {
            std::vector<double> neg(H.vectors[ell - 1]);
            for (double& x : neg) x = -x;
            add_pair(C, anchored(inst, j, H.vectors[ell - 1]), anchored(inst, j, neg));
        } else {
            auto c = anchored(inst, j, basis_tail(inst.d, inst.d / 2 + 1));
            add_pair(C, c, c);
        }
    }
    return C;
}

AdversarialReport adversarial_query_subset(const SubspaceInstance& inst, const WeightedPointSet& coreset) {
    if (inst.variant != SubspaceVariant::appendix)
        throw std::invalid_argument("adversarial subset query needs the appendix variant");
    const int d = inst.d, k = inst.groups;
    if (coreset.dim() != std::size_t(d + 1)) throw DimensionError("coreset dimension does not match instance");

    // Per group, the coreset weight of each basis point.
    std::vector<std::vector<double>> wt(k + 1, std::vector<double>(d + 1, 0.0));
    for (std::size_t q = 0; q < coreset.size(); ++q) {
        auto p = coreset.point(q);
        int j = int(std::lround(p[0] / inst.L));
        int idx = 0;
        bool ok = j >= 1 && j <= k && std::fabs(p[0] - j * inst.L) <= 1e-9 * inst.L;
        for (int i = 1; i <= d && ok; ++i) {
            if (std::fabs(p[i] - 1.0) <= 1e-9 && idx == 0)
                idx = i;
            else if (std::fabs(p[i]) > 1e-9)
                ok = false;
        }
        if (!ok || idx == 0) throw std::invalid_argument("coreset point is not a point of the instance");
        wt[j][idx] += coreset.weight(q);
    }

    AdversarialReport rep;
    rep.Q = CenterSet(d + 1);
    rep.Q_anchor = CenterSet(d + 1);
    double total_w = 0.0, sum_norm = 0.0;
    for (int j = 1; j <= k; ++j) {
        std::vector<double> v(d);
        for (int i = 1; i <= d; ++i) {
            v[i - 1] = wt[j][i] - 1.0;
            total_w += wt[j][i];
        }
        double n = norm(v);
        rep.v_norms.push_back(n);
        sum_norm += n;
        std::vector<double> tail = n > 0.0 ? v : basis_tail(d, 1);
        if (n > 0.0)
            for (double& x : tail) x /= n;
        rep.Q.add(anchored(inst, j, tail));
        rep.Q_anchor.add(anchored(inst, j, std::vector<double>(d, 0.0)));
    }
    CostParams z2{2.0};
    rep.cost_P_Q = cost(inst.points, rep.Q, z2);
    rep.cost_S_Q = cost(coreset, rep.Q, z2);
    rep.gap = rep.cost_P_Q - rep.cost_S_Q;
    rep.gap_formula = 2.0 * k * d - 2.0 * total_w + 2.0 * sum_norm;
    rep.cost_P_anchor = cost(inst.points, rep.Q_anchor, z2);
    rep.cost_S_anchor = cost(coreset, rep.Q_anchor, z2);
    rep.rel_error_Q = relative_error(rep.cost_P_Q, rep.cost_S_Q);
    rep.gap_ok = std::fabs(rep.gap - rep.gap_formula) <= 1e-9 * std::max(1.0, rep.cost_P_Q);
    return rep;
}

double cost_to_basis(int d, const std::vector<std::vector<double>>& centers, double z) {
    if (centers.empty()) throw std::invalid_argument("center set is empty");
    CompensatedSum s;
    for (int i = 0; i < d / 2; ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& c : centers) {
            if (c.size() != std::size_t(d)) throw DimensionError("center dimension does not match");
            double sq = 0.0;
            for (int t = 0; t < d; ++t) {
                double u = (t == i ? 1.0 : 0.0) - c[t];
                sq += u * u;
            }
            best = std::min(best, sq);
        }
        s.add(dist_pow(best, z));
    }
    return s.value();
}

double cost_to_basis_bound(int d, int k, double z) {
    return std::pow(2.0, z / 2 - 1) * d - std::pow(2.0, z / 2) * std::max(1.0, z / 2) * std::sqrt(k * d / 2.0);
}

}  // namespace lowcore
