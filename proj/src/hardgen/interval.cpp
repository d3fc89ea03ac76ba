#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "lowcore/hardgen.hpp"
#include "lowcore/oned.hpp"

namespace lowcore {

namespace {

// Antiderivative of |x - c|.
double abs_antideriv(double x, double c) {
    double u = x - c;
    return u >= 0 ? 0.5 * u * u : -0.5 * u * u;
}

}  // namespace

Interval1DInstance gen_interval_instance(double eps, int m0) {
    if (!(eps > 0.0) || eps > 1.0) throw std::invalid_argument("interval instance needs eps in (0, 1]");
    if (m0 < 4) throw std::invalid_argument("need at least 4 points per interval");
    double inv = 1.0 / eps;
    double rounded = std::round(inv);
    int count = std::fabs(inv - rounded) <= 1e-9 * inv ? int(rounded) : int(std::ceil(inv));
    if (count > 200) throw std::invalid_argument("eps too small: more than 200 intervals");

    Interval1DInstance inst;
    inst.eps_requested = eps;
    inst.eps_eff = 1.0 / count;
    inst.m0 = m0;
    inst.points = WeightedPointSet(1);
    double l = 0.0;
    for (int i = 0; i < count; ++i) {
        double len = std::ldexp(1.0, 2 * i);
        Interval iv{l, l + len, std::ldexp(1.0, -4 * i)};
        inst.intervals.push_back(iv);
        double w = iv.mass() / m0;
        for (int j = 0; j < m0; ++j) {
            double x = l + (j + 0.5) * len / m0;
            inst.points.add(std::span<const double>(&x, 1), w);
        }
        l = iv.r;
    }
    return inst;
}

double interval_measure(const std::vector<Interval>& iv, double a, double b) {
    double m = 0.0;
    for (const auto& I : iv) {
        double lo = std::max(a, I.l), hi = std::min(b, I.r);
        if (hi > lo) m += I.density * (hi - lo);
    }
    return m;
}

double continuous_cost(const std::vector<Interval>& iv, std::vector<double> centers) {
    if (centers.empty()) throw std::invalid_argument("center set is empty");
    std::sort(centers.begin(), centers.end());
    const double inf = std::numeric_limits<double>::infinity();
    CompensatedSum total;
    for (const auto& I : iv) {
        for (std::size_t j = 0; j < centers.size(); ++j) {
            double lo = j == 0 ? -inf : 0.5 * (centers[j - 1] + centers[j]);
            double hi = j + 1 == centers.size() ? inf : 0.5 * (centers[j] + centers[j + 1]);
            lo = std::max(lo, I.l);
            hi = std::min(hi, I.r);
            if (hi <= lo) continue;
            total.add(I.density * (abs_antideriv(hi, centers[j]) - abs_antideriv(lo, centers[j])));
        }
    }
    return total.value();
}

double continuous_cost_fixed0(const Interval1DInstance& inst, double c) {
    return continuous_cost(inst.intervals, {0.0, c});
}

double continuous_derivative_fixed0(const Interval1DInstance& inst, double c) {
    if (c <= 0.0) return 0.0;
    const double inf = std::numeric_limits<double>::infinity();
    return interval_measure(inst.intervals, c / 2, c) - interval_measure(inst.intervals, c, inf);
}

FeatureReport feature_audit(const Interval1DInstance& inst, std::size_t grid_points, std::size_t samples_per_interval) {
    FeatureReport rep;
    rep.bound = 2.0 / inst.eps_eff;
    Sorted1D S1(inst.points);
    const double R = inst.intervals.back().r;

    const double lo = -0.5 * R, hi = 2.5 * R;
    for (std::size_t g = 0; g < grid_points; ++g) {
        double c = grid_points == 1 ? lo : lo + (hi - lo) * double(g) / double(grid_points - 1);
        rep.max_discrete = std::max(rep.max_discrete, S1.cost2(0.0, c));
        rep.max_continuous = std::max(rep.max_continuous, continuous_cost_fixed0(inst, c));
    }
    rep.grid_points = grid_points;
    std::set<double> bps{0.0};
    for (double x : S1.coords()) {
        bps.insert(x);
        bps.insert(2.0 * x);
    }
    for (const auto& I : inst.intervals) {
        bps.insert(I.l);
        bps.insert(I.r);
        bps.insert(2.0 * I.r);
    }
    for (double c : bps) {
        rep.max_discrete = std::max(rep.max_discrete, S1.cost2(0.0, c));
        rep.max_continuous = std::max(rep.max_continuous, continuous_cost_fixed0(inst, c));
    }
    rep.breakpoints = bps.size();
    rep.bound_ok = rep.max_discrete <= rep.bound && rep.max_continuous <= rep.bound;

    const std::size_t ns = std::max<std::size_t>(samples_per_interval, 1);
    rep.second_ok = true;
    for (const auto& I : inst.intervals) {
        const double len = I.r - I.l;
        const double h = 1e-3 * len;
        const double a = I.l + len / 3 + h, b = I.r - h;
        const double expected = 1.5 * I.density;
        double worst = 0.0;
        for (std::size_t s = 0; s < ns; ++s) {
            double c = ns == 1 ? 0.5 * (a + b) : a + (b - a) * double(s) / double(ns - 1);
            double f2 = (continuous_cost_fixed0(inst, c + h) - 2.0 * continuous_cost_fixed0(inst, c) +
                         continuous_cost_fixed0(inst, c - h)) /
                        (h * h);
            worst = std::max(worst, std::fabs(f2 - expected) / expected);
        }
        rep.second_expected.push_back(expected);
        rep.second_worst_rel.push_back(worst);
        rep.second_max_rel = std::max(rep.second_max_rel, worst);
        if (worst > 0.01) rep.second_ok = false;

        const double h1 = 1e-7 * len;
        std::vector<double> cs{I.r};
        for (std::size_t s = 0; s < ns; ++s) cs.push_back(I.l + len * (double(s) + 0.5) / double(ns));
        for (double c : cs) {
            double fd = (continuous_cost_fixed0(inst, c + h1) - continuous_cost_fixed0(inst, c - h1)) / (2 * h1);
            rep.first_max_abs = std::max(rep.first_max_abs, std::fabs(fd - continuous_derivative_fixed0(inst, c)));
        }
    }
    rep.first_ok = rep.first_max_abs <= 1e-6;
    return rep;
}

double default_copy_separation(const Interval1DInstance& inst) { return 4.0 * (inst.intervals.back().r + 1.0); }

WeightedPointSet gen_k_copies(const Interval1DInstance& inst, int k, double L) {
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("k must be even and positive");
    if (!(L > 0.0)) L = default_copy_separation(inst);
    WeightedPointSet out(1);
    for (int i = 0; i < k / 2; ++i)
        for (std::size_t p = 0; p < inst.points.size(); ++p) {
            double x = inst.points.point(p)[0] + i * L;
            out.add(std::span<const double>(&x, 1), inst.points.weight(p));
        }
    return out;
}

CenterSet query_family_Q(const Interval1DInstance& inst, int k, double L, double t,
                         const std::vector<std::pair<int, int>>& chosen) {
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("k must be even and positive");
    if (!(t >= 1.0 / 3 - 1e-12 && t <= 1.0 + 1e-12)) throw std::invalid_argument("t must lie in [1/3, 1]");
    if (!(L > 0.0)) L = default_copy_separation(inst);
    const int copies = k / 2;
    std::vector<int> pick(copies, -1);
    for (auto [i, j] : chosen) {
        if (i < 0 || i >= copies || j < 0 || j >= int(inst.intervals.size()))
            throw std::out_of_range("chosen copy or interval index out of range");
        if (pick[i] >= 0) throw std::invalid_argument("copy chosen twice");
        pick[i] = j;
    }
    std::vector<double> cs;
    for (int i = 0; i < copies; ++i) {
        double base = i * L;
        cs.push_back(base + inst.intervals[0].l);
        if (pick[i] >= 0) {
            const auto& I = inst.intervals[pick[i]];
            cs.push_back(base + I.l + t * (I.r - I.l));
            cs.push_back(base + I.r);
        }
    }
    return CenterSet::from_1d(cs);
}

}  // namespace lowcore
