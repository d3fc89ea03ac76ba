#include <algorithm>
#include <cmath>
#include <limits>

#include "lowcore/verify.hpp"

namespace lowcore {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Best {
    double err = -1.0;
    double c1 = 0.0, c2 = 0.0;

    void offer(double e, double a, double b) {
        if (e > err || (e == err && std::pair(a, b) < std::pair(c1, c2))) {
            err = e;
            c1 = a;
            c2 = b;
        }
    }
};

void require_1d(const WeightedPointSet& P, const WeightedPointSet& S) {
    if (P.dim() != 1 || S.dim() != 1) throw DimensionError("1-d audit needs 1-d point sets");
}

std::vector<double> merged_coords(const Sorted1D& a, const Sorted1D& b) {
    std::vector<double> u;
    u.reserve(a.size() + b.size());
    std::merge(a.coords().begin(), a.coords().end(), b.coords().begin(), b.coords().end(), std::back_inserter(u));
    u.erase(std::unique(u.begin(), u.end()), u.end());
    return u;
}

// Total weight zero on the P side: the relative error is either 0 or undefined.
bool degenerate(const Sorted1D& SP, const Sorted1D& SS) {
    if (SP.total_weight() > 0.0) return false;
    if (SS.total_weight() > 0.0) throw std::invalid_argument("cost of P vanishes identically while cost of S does not");
    return true;
}

// Two-center cost along c1 = a, evaluated for nondecreasing c2 with
// monotone cursors so each line costs O(n + breakpoints).
class LineCursor {
public:
    LineCursor(const Sorted1D& s, double a) : s_(s), a_(a), ia_(s.upper_index(a)) {}

    double operator()(double c2) {
        const auto& x = s_.coords();
        const std::size_t n = x.size();
        while (ic_ < n && x[ic_] <= c2) ++ic_;
        double mid = 0.5 * (a_ + c2);
        while (im_ < n && x[im_] <= mid) ++im_;
        double lo = std::min(a_, c2), hi = std::max(a_, c2);
        std::size_t slo = c2 <= a_ ? ic_ : ia_;
        std::size_t shi = c2 <= a_ ? ia_ : ic_;
        return double(s_.abs_dev(0, im_, lo, slo) + s_.abs_dev(im_, n, hi, shi));
    }

private:
    const Sorted1D& s_;
    double a_;
    std::size_t ia_;
    std::size_t ic_ = 0, im_ = 0;
};

void sweep_line(const Sorted1D& SP, const Sorted1D& SS, const std::vector<double>& U, double a,
                std::vector<double>& buf, std::vector<double>& twice, Best& best, std::uint64_t& evals) {
    twice.resize(U.size());
    for (std::size_t i = 0; i < U.size(); ++i) twice[i] = 2.0 * U[i] - a;
    buf.clear();
    std::merge(U.begin(), U.end(), twice.begin(), twice.end(), std::back_inserter(buf));
    buf.erase(std::unique(buf.begin(), buf.end()), buf.end());
    LineCursor fp(SP, a), fs(SS, a);
    for (double c2 : buf) {
        double e = relative_error(fp(c2), fs(c2));
        best.offer(e, std::min(a, c2), std::max(a, c2));
    }
    evals += buf.size();
}

void offer_infinity(AuditReport& r, const Sorted1D& SP, const Sorted1D& SS, std::size_t k) {
    double lim = std::fabs(SP.total_weight() - SS.total_weight()) / SP.total_weight();
    if (lim > r.max_rel_error) {
        r.max_rel_error = lim;
        r.at_infinity = true;
        std::vector<double> w(k, -kInf);
        if (k == 2) w[1] = kInf;
        r.witness_centers = CenterSet(1, w);
    }
}

}  // namespace

AuditReport audit_1d_1median(const WeightedPointSet& P, const WeightedPointSet& S) {
    require_1d(P, S);
    Sorted1D SP(P), SS(S);
    AuditReport r;
    r.method = AuditMethod::exact_k1;
    if (degenerate(SP, SS)) {
        r.witness_centers = CenterSet::from_1d({0.0});
        return r;
    }
    Best best;
    for (double c : merged_coords(SP, SS)) {
        best.offer(relative_error(SP.cost1(c), SS.cost1(c)), c, c);
        ++r.evaluations;
    }
    r.max_rel_error = best.err;
    r.witness_centers = CenterSet::from_1d({best.c1});
    offer_infinity(r, SP, SS, 1);
    return r;
}

AuditReport audit_1d_2median_fixed0(const WeightedPointSet& P, const WeightedPointSet& S) {
    require_1d(P, S);
    Sorted1D SP(P), SS(S);
    AuditReport r;
    r.method = AuditMethod::exact_k2_fixed;
    if (degenerate(SP, SS)) {
        r.witness_centers = CenterSet::from_1d({0.0, 0.0});
        return r;
    }
    std::vector<double> cand{0.0};
    for (const auto* s : {&SP, &SS})
        for (double x : s->coords()) {
            cand.push_back(x);
            cand.push_back(2.0 * x);
        }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    Best best;
    bool p_positive = false;
    for (double c : cand) {
        double fp = SP.cost2(0.0, c), fs = SS.cost2(0.0, c);
        p_positive = p_positive || fp > 0.0;
        best.offer(relative_error(fp, fs), 0.0, c);
        ++r.evaluations;
    }
    if (!p_positive && best.err > 0.0)
        throw std::invalid_argument("cost of P vanishes identically while cost of S does not");
    r.max_rel_error = best.err;
    r.witness_centers = CenterSet::from_1d({0.0, best.c2});
    return r;
}

AuditReport audit_1d_2median_on_line(const WeightedPointSet& P, const WeightedPointSet& S, double a) {
    require_1d(P, S);
    Sorted1D SP(P), SS(S);
    AuditReport r;
    r.method = AuditMethod::exact_k2;
    if (degenerate(SP, SS)) {
        r.witness_centers = CenterSet::from_1d({a, a});
        return r;
    }
    Best best;
    std::vector<double> buf, twice;
    sweep_line(SP, SS, merged_coords(SP, SS), a, buf, twice, best, r.evaluations);
    r.max_rel_error = best.err;
    r.witness_centers = CenterSet::from_1d({best.c1, best.c2});
    return r;
}

AuditReport audit_1d_2median(const WeightedPointSet& P, const WeightedPointSet& S, std::size_t cap) {
    require_1d(P, S);
    if (P.size() + S.size() > cap)
        throw AuditCapExceeded("|P|+|S| = " + std::to_string(P.size() + S.size()) + " exceeds the arrangement cap " +
                               std::to_string(cap) + "; use the stochastic audit");
    Sorted1D SP(P), SS(S);
    AuditReport r;
    r.method = AuditMethod::exact_k2;
    if (degenerate(SP, SS)) {
        r.witness_centers = CenterSet::from_1d({0.0, 0.0});
        return r;
    }
    auto U = merged_coords(SP, SS);
    Best best;
    std::vector<double> buf, twice;
    for (double a : U) sweep_line(SP, SS, U, a, buf, twice, best, r.evaluations);
    r.max_rel_error = best.err;
    r.witness_centers = CenterSet::from_1d({best.c1, best.c2});
    offer_infinity(r, SP, SS, 2);
    return r;
}

}  // namespace lowcore
