#include <algorithm>
#include <cmath>
#include <optional>

#include "lowcore/hardgen.hpp"

namespace lowcore {

namespace {

constexpr double kTol = 1e-9;

LedgerEntry entry(std::string name, double lhs, double rhs, Relation rel) {
    LedgerEntry e{std::move(name), lhs, rhs, rel, false};
    double tol = kTol * std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
    switch (rel) {
        case Relation::eq: e.holds = std::fabs(lhs - rhs) <= tol; break;
        case Relation::le: e.holds = lhs <= rhs + tol; break;
        case Relation::ge: e.holds = lhs + tol >= rhs; break;
    }
    return e;
}

// Keeps the entry with the least slack (largest deviation for equalities).
void keep_worst(std::optional<LedgerEntry>& worst, LedgerEntry e) {
    auto slack = [](const LedgerEntry& x) {
        switch (x.rel) {
            case Relation::eq: return -std::fabs(x.lhs - x.rhs);
            case Relation::le: return x.rhs - x.lhs;
            case Relation::ge: return x.lhs - x.rhs;
        }
        return 0.0;
    };
    if (!worst || slack(e) < slack(*worst)) worst = std::move(e);
}

}  // namespace

bool LedgerReport::all_equalities_hold() const {
    return std::all_of(entries.begin(), entries.end(), [](const LedgerEntry& e) { return e.rel != Relation::eq || e.holds; });
}

bool LedgerReport::all_hold() const {
    return std::all_of(entries.begin(), entries.end(), [](const LedgerEntry& e) { return e.holds; });
}

LedgerReport lb_inequality_ledger(const SubspaceInstance& inst, const WeightedPointSet& S, double z, double eps,
                                  std::uint64_t seed) {
    if (inst.variant != SubspaceVariant::main) throw std::invalid_argument("ledger is defined for the main variant");
    if (!(z >= 1.0)) throw std::invalid_argument("z must be at least 1");
    if (!(eps >= 0.0)) throw std::invalid_argument("eps must be non-negative");
    const double k = inst.k, d = inst.d;
    const bool z2 = std::fabs(z - 2.0) < 1e-12;
    const double zmin = std::min(1.0, z / 2), zmax = std::max(1.0, z / 2), pz = std::pow(2.0, z / 2);

    LedgerReport rep;
    rep.z = z;
    rep.eps = eps;
    rep.t = lb_threshold_t(z);
    SubspacePartition part = partition_coreset(inst, S, partition_threshold(inst.d, z));
    rep.size_I = part.size_I;
    rep.deltas = part.delta;
    const double nI = part.size_I;
    HadamardBasis H = hadamard_for_dim(inst.d);
    rep.m = H.m;

    CenterSet C1 = centers_C1(inst, S, part);
    C2Result C2 = centers_C2(inst, S, part, z, seed);
    const CostParams cz{z};

    // Per-point quantities.
    double W_all = 0.0, W_I = 0.0, kappa2 = 0.0, kappaz = 0.0;
    double norm_I = 0.0, anorm_I = 0.0, small_set = 0.0;
    for (int j = 1; j <= inst.groups; ++j) {
        auto cj = C1.center(2 * (j - 1));
        double grp_lin = 0.0;
        for (std::size_t idx : part.members[j]) {
            auto p = S.point(idx);
            const double w = S.weight(idx), del = part.delta[idx];
            double nt2 = 0.0;
            for (int i = 1; i <= inst.d; ++i) nt2 += p[i] * p[i];
            const double A = del * del + nt2 + 1.0;
            W_all += w * A;
            if (part.in_I[j]) {
                W_I += w * std::pow(A, z / 2);
                norm_I += w * std::sqrt(nt2);
                anorm_I += w * std::pow(A, z / 2 - 1) * std::sqrt(nt2);
                grp_lin += w * std::pow(A, z / 2 - 1) * std::sqrt(nt2);
            } else {
                // <p - jL e0, jL e0 - c_j> with the anchor's 0th coordinate cancelling.
                double ip = 0.0;
                for (int i = 1; i <= inst.d; ++i) ip += p[i] * (-cj[i]);
                ip += del * (j * inst.L - cj[0]);
                kappa2 += 2.0 * w * ip;
                kappaz += w * dist_pow(sq_dist(p, cj), z);
            }
        }
        if (part.in_I[j] && !part.members[j].empty())
            small_set += 2.0 * grp_lin / std::sqrt(double(part.members[j].size()));
    }
    rep.kappa = z2 ? kappa2 : kappaz;
    rep.weight_sum = z2 ? W_all : W_I;

    const double cP1 = cost(inst.points, C1, cz), cS1 = cost(S, C1, cz);
    const double cP2 = cost(inst.points, C2.centers, cz), cS2 = cost(S, C2.centers, cz);

    auto& E = rep.entries;
    if (z2) {
        E.push_back(entry("cost(P,C1) = kd/2", cP1, k * d / 2, Relation::eq));
        E.push_back(entry("cost(S,C1) = sum w(D^2+|p~|^2+1) + kappa", cS1, W_all + kappa2, Relation::eq));
        E.push_back(entry("weight constraint, lower", W_all + kappa2, k * d / 2 - eps * k * d / 2, Relation::ge));
        E.push_back(entry("weight constraint, upper", W_all + kappa2, k * d / 2 + eps * k * d / 2, Relation::le));
        E.push_back(entry("cost(P,C2) >= kd/2 - sqrt(d)|I|", cP2, k * d / 2 - std::sqrt(d) * nI, Relation::ge));
        E.push_back(entry("cost(S,C2) upper bound", cS2, W_all - small_set + kappa2, Relation::le));
    } else {
        E.push_back(entry("cost(P,C1) = (kd/4) 2^(z/2)", cP1, k * d / 4 * pz, Relation::eq));
        E.push_back(entry("cost(S,C1) = sum_I w A^(z/2) + kappa", cS1, W_I + kappaz, Relation::eq));
        E.push_back(entry("weight constraint, lower", W_I + kappaz, (k * d / 4) * pz * (1 - eps), Relation::ge));
        E.push_back(entry("weight constraint, upper", W_I + kappaz, (k * d / 4) * pz * (1 + eps), Relation::le));
        E.push_back(entry("cost(P,C2) lower bound", cP2, pz * (k * d / 4 - zmax * std::sqrt(d) * nI), Relation::ge));
        E.push_back(entry("cost(S,C2) upper bound", cS2, W_I - zmin * small_set + kappaz, Relation::le));
    }
    for (std::size_t g = 0; g < C2.groups.size(); ++g)
        E.push_back(entry("small-set inequality, group " + std::to_string(C2.groups[g]), C2.lhs[g], C2.rhs[g],
                          Relation::le));

    std::optional<LedgerEntry> p3, s3, p3b;
    for (int ell = 1; ell <= H.m; ++ell) {
        CenterSet C3 = centers_C3(inst, S, part, ell);
        const double cP3 = cost(inst.points, C3, cz), cS3 = cost(S, C3, cz);
        double lin = 0.0;  // sum_I w <p~, h^p> A^(z/2-1)
        for (int j = 1; j <= inst.groups; ++j) {
            if (!part.in_I[j]) continue;
            for (std::size_t idx : part.members[j]) {
                auto p = S.point(idx);
                double ip = 0.0, nt2 = 0.0;
                for (int i = 1; i <= inst.d; ++i) {
                    ip += p[i] * H.vectors[ell - 1][i - 1];
                    nt2 += p[i] * p[i];
                }
                const double del = part.delta[idx];
                lin += S.weight(idx) * std::fabs(ip) * std::pow(del * del + nt2 + 1.0, z / 2 - 1);
            }
        }
        const std::string tag = " [worst l]";
        if (z2) {
            keep_worst(p3, entry("cost(P,C3) = kd/2 - d|I|/sqrt(m)" + tag, cP3, k * d / 2 - d * nI / std::sqrt(double(H.m)),
                                 Relation::eq));
            keep_worst(s3, entry("cost(S,C3) = sum w(D^2+|p~|^2+1) - 2 sum_I <w p~, h^p> + kappa" + tag, cS3,
                                 W_all - 2.0 * lin + kappa2, Relation::eq));
        } else {
            double exact = (d / 2) * std::pow(2.0 - 2.0 / std::sqrt(double(H.m)), z / 2) * nI + (k / 2 - nI) * (d / 2) * pz;
            keep_worst(p3, entry("cost(P,C3) closed form" + tag, cP3, exact, Relation::eq));
            keep_worst(p3b, entry("cost(P,C3) upper bound" + tag, cP3,
                                  pz * (k * d / 4 - (d * nI / 2) * zmin / std::sqrt(double(H.m))), Relation::le));
            keep_worst(s3, entry("cost(S,C3) lower bound" + tag, cS3, W_I - 2.0 * zmax * lin + kappaz, Relation::ge));
        }
    }
    E.push_back(*p3);
    if (p3b) E.push_back(*p3b);
    E.push_back(*s3);

    if (z2) {
        E.push_back(entry("corollary: sum_I w|p~| lower bound", norm_I, (d * nI - eps * k * d * std::sqrt(d)) / 2,
                          Relation::ge));
        E.push_back(entry("size constraint", norm_I / std::sqrt(d), (nI * std::sqrt(d) + eps * k * d) / 4, Relation::le));
        E.push_back(entry("|I| <= 3 eps k sqrt(d)", nI, 3 * eps * k * std::sqrt(d), Relation::le));
    } else {
        E.push_back(entry("corollary: weighted sum_I lower bound", 2 * zmax * anorm_I,
                          pz * (d * nI / 2 * zmin - eps * k * d * std::sqrt(d) / 2), Relation::ge));
        E.push_back(entry("size constraint", zmin * anorm_I / std::sqrt(d),
                          (zmax * nI * std::sqrt(d) * pz + eps * k * d / 2 * pz) / (2 * rep.t), Relation::le));
        E.push_back(entry("|I| <= 4 eps k sqrt(d) / min(1, z/2)", nI, 4 * eps * k * std::sqrt(d) / zmin, Relation::le));
    }
    return rep;
}

}  // namespace lowcore
