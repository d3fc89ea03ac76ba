#include <algorithm>
#include <cmath>
#include <optional>
#include <random>

#include "lowcore/verify.hpp"

namespace lowcore {

namespace {

class Evaluator {
public:
    Evaluator(const WeightedPointSet& P, const WeightedPointSet& S, int k, double z) : P_(P), S_(S), z_(z) {
        if (P.dim() == 1 && z == 1.0 && k <= 2) {
            sp_.emplace(P);
            ss_.emplace(S);
        }
    }

    double operator()(const std::vector<double>& c, std::size_t dim) {
        ++count;
        if (sp_) {
            double a = c[0], b = c.size() > 1 ? c[1] : c[0];
            return relative_error(sp_->cost2(a, b), ss_->cost2(a, b));
        }
        CenterSet C(dim, c);
        return relative_error(cost(P_, C, {z_}), cost(S_, C, {z_}));
    }

    std::uint64_t count = 0;

private:
    const WeightedPointSet& P_;
    const WeightedPointSet& S_;
    double z_;
    std::optional<Sorted1D> sp_, ss_;
};

}  // namespace

AuditReport audit_stochastic(const WeightedPointSet& P, const WeightedPointSet& S, int k, double z,
                             const StochasticOptions& opts) {
    if (P.dim() != S.dim()) throw DimensionError("P and S have different dimensions");
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (z < 1.0) throw std::invalid_argument("z must be >= 1");
    const std::size_t d = P.dim();
    const std::size_t kk = std::size_t(k);

    std::vector<double> lo(d, std::numeric_limits<double>::infinity()), hi(d, -std::numeric_limits<double>::infinity());
    for (const auto* X : {&P, &S})
        for (std::size_t i = 0; i < X->size(); ++i)
            for (std::size_t t = 0; t < d; ++t) {
                lo[t] = std::min(lo[t], X->point(i)[t]);
                hi[t] = std::max(hi[t], X->point(i)[t]);
            }
    double scale = 0.0;
    for (std::size_t t = 0; t < d; ++t) {
        if (!std::isfinite(lo[t])) lo[t] = hi[t] = 0.0;
        scale = std::max(scale, hi[t] - lo[t]);
    }
    if (!(scale > 0.0)) scale = 1.0;

    Evaluator eval(P, S, k, z);
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    AuditReport r;
    r.method = AuditMethod::stochastic;
    r.seed = opts.seed;
    r.max_rel_error = -1.0;
    std::vector<double> best_c;

    auto offer = [&](double e, const std::vector<double>& c) {
        if (e > r.max_rel_error || (e == r.max_rel_error && c < best_c)) {
            r.max_rel_error = e;
            best_c = c;
        }
    };

    auto local_search = [&](std::vector<double> c) {
        double e = eval(c, d);
        offer(e, c);
        double step = 0.25 * scale;
        const double min_step = 1e-13 * scale;
        while (step > min_step && eval.count < opts.budget) {
            bool improved = false;
            for (std::size_t j = 0; j < c.size() && eval.count < opts.budget; ++j) {
                for (double dir : {1.0, -1.0}) {
                    double old = c[j];
                    c[j] = old + dir * step;
                    double e2 = eval(c, d);
                    if (e2 > e) {
                        e = e2;
                        improved = true;
                        offer(e, c);
                        break;
                    }
                    c[j] = old;
                }
            }
            if (!improved) step *= 0.5;
        }
    };

    for (const auto& C : opts.initial) {
        if (C.dim() != d || C.size() != kk) throw DimensionError("initial center set has wrong shape");
        if (eval.count >= opts.budget) break;
        local_search(C.coords());
    }

    std::size_t round = 0;
    while (eval.count < opts.budget) {
        std::vector<double> c(kk * d);
        for (std::size_t j = 0; j < kk; ++j) {
            std::size_t kind = (round + j) % 3;
            const WeightedPointSet* src = kind == 0 ? &P : kind == 1 ? &S : nullptr;
            if (src && src->size() > 0) {
                std::size_t idx = std::size_t(unit(rng) * double(src->size())) % src->size();
                for (std::size_t t = 0; t < d; ++t) c[j * d + t] = src->point(idx)[t];
            } else {
                for (std::size_t t = 0; t < d; ++t) {
                    double span = hi[t] - lo[t];
                    c[j * d + t] = lo[t] - 0.1 * span + unit(rng) * 1.2 * span;
                }
            }
        }
        local_search(std::move(c));
        ++round;
    }
    if (best_c.empty()) best_c.assign(kk * d, 0.0);
    r.max_rel_error = std::max(r.max_rel_error, 0.0);
    r.witness_centers = CenterSet(d, best_c);
    r.evaluations = eval.count;
    return r;
}

}  // namespace lowcore
