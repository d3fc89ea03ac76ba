#include <algorithm>
#include <cmath>

#include "lowcore/verify.hpp"

namespace lowcore {

PiecewiseAffineCost::PiecewiseAffineCost(std::vector<double> breakpoints, std::vector<double> values,
                                         double left_slope, double right_slope)
    : breakpoints_(std::move(breakpoints)),
      values_(std::move(values)),
      left_slope_(left_slope),
      right_slope_(right_slope) {
    if (breakpoints_.empty() || breakpoints_.size() != values_.size())
        throw std::invalid_argument("breakpoints and values must be nonempty and of equal length");
    if (!std::is_sorted(breakpoints_.begin(), breakpoints_.end()))
        throw std::invalid_argument("breakpoints must be sorted");
}

PiecewiseAffineCost PiecewiseAffineCost::kmedian1(const Sorted1D& S1) {
    if (S1.empty()) throw std::invalid_argument("empty point set");
    Sorted1D C = S1.compressed();
    std::vector<double> v(C.size());
    for (std::size_t i = 0; i < C.size(); ++i) v[i] = S1.cost1(C.x(i));
    double W = S1.total_weight();
    return PiecewiseAffineCost(C.coords(), std::move(v), -W, W);
}

PiecewiseAffineCost PiecewiseAffineCost::fixed0(const Sorted1D& S1) {
    std::vector<double> b{0.0};
    for (double x : S1.coords()) {
        b.push_back(x);
        b.push_back(2.0 * x);
    }
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    std::vector<double> v(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) v[i] = S1.cost2(0.0, b[i]);
    return PiecewiseAffineCost(std::move(b), std::move(v), 0.0, 0.0);
}

double PiecewiseAffineCost::operator()(double c) const {
    if (c <= breakpoints_.front()) return values_.front() + left_slope_ * (c - breakpoints_.front());
    if (c >= breakpoints_.back()) return values_.back() + right_slope_ * (c - breakpoints_.back());
    std::size_t i = std::size_t(std::upper_bound(breakpoints_.begin(), breakpoints_.end(), c) - breakpoints_.begin());
    double b0 = breakpoints_[i - 1], b1 = breakpoints_[i];
    double t = (c - b0) / (b1 - b0);
    return values_[i - 1] + t * (values_[i] - values_[i - 1]);
}

std::vector<double> PiecewiseAffineCost::slopes() const {
    std::vector<double> s{left_slope_};
    for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i)
        s.push_back((values_[i + 1] - values_[i]) / (breakpoints_[i + 1] - breakpoints_[i]));
    s.push_back(right_slope_);
    return s;
}

bool PiecewiseAffineCost::is_convex(double rel_tol) const {
    auto s = slopes();
    double scale = 0.0;
    for (double x : s) scale = std::max(scale, std::fabs(x));
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i + 1] < s[i] - rel_tol * std::max(scale, 1.0)) return false;
    return true;
}

std::string method_name(AuditMethod m) {
    switch (m) {
        case AuditMethod::exact_k1: return "exact-k1";
        case AuditMethod::exact_k2_fixed: return "exact-k2-fixed";
        case AuditMethod::exact_k2: return "exact-k2";
        case AuditMethod::stochastic: return "stochastic";
    }
    return "?";
}

}  // namespace lowcore
