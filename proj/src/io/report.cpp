#include "lowcore/report.hpp"

#include <cmath>

namespace lowcore {

namespace {

const char* relation_name(Relation r) {
    switch (r) {
        case Relation::eq: return "eq";
        case Relation::le: return "le";
        case Relation::ge: return "ge";
    }
    return "?";
}

Json numbers(const std::vector<double>& xs) {
    Json a = Json::array();
    for (double x : xs) a.push_back(number(x));
    return a;
}

}  // namespace

Json number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    return x;
}

Json to_json(const CenterSet& C) {
    Json a = Json::array();
    for (std::size_t i = 0; i < C.size(); ++i) {
        auto c = C.center(i);
        a.push_back(numbers(std::vector<double>(c.begin(), c.end())));
    }
    return a;
}

Json to_json(const AuditReport& r) {
    Json j;
    j["method"] = method_name(r.method);
    j["max_rel_error"] = number(r.max_rel_error);
    j["witness_centers"] = to_json(r.witness_centers);
    j["evaluations"] = r.evaluations;
    j["seed"] = r.seed;
    j["at_infinity"] = r.at_infinity;
    j["fallback"] = r.fallback;
    return j;
}

Json to_json(const KMedianResult& r) {
    Json j;
    j["opt"] = number(r.opt);
    j["centers"] = to_json(r.centers);
    Json cl = Json::array();
    for (std::size_t i = 0; i < r.cluster_lo.size(); ++i) cl.push_back({number(r.cluster_lo[i]), number(r.cluster_hi[i])});
    j["clusters"] = cl;
    return j;
}

Json to_json(const FeatureReport& r) {
    Json j;
    j["bound"] = number(r.bound);
    j["max_discrete"] = number(r.max_discrete);
    j["max_continuous"] = number(r.max_continuous);
    j["grid_points"] = r.grid_points;
    j["breakpoints"] = r.breakpoints;
    j["bound_ok"] = r.bound_ok;
    j["second_expected"] = numbers(r.second_expected);
    j["second_worst_rel"] = numbers(r.second_worst_rel);
    j["second_max_rel"] = number(r.second_max_rel);
    j["second_ok"] = r.second_ok;
    j["first_max_abs"] = number(r.first_max_abs);
    j["first_ok"] = r.first_ok;
    return j;
}

Json to_json(const LedgerReport& r) {
    Json j;
    j["z"] = number(r.z);
    j["eps"] = number(r.eps);
    j["t"] = number(r.t);
    j["m"] = r.m;
    j["size_I"] = r.size_I;
    j["kappa"] = number(r.kappa);
    j["weight_sum"] = number(r.weight_sum);
    Json e = Json::array();
    for (const auto& x : r.entries)
        e.push_back({{"name", x.name}, {"lhs", number(x.lhs)}, {"rhs", number(x.rhs)}, {"relation", relation_name(x.rel)},
                     {"holds", x.holds}});
    j["entries"] = e;
    j["all_equalities_hold"] = r.all_equalities_hold();
    j["all_hold"] = r.all_hold();
    return j;
}

Json to_json(const AdversarialReport& r) {
    Json j;
    j["Q"] = to_json(r.Q);
    j["v_norms"] = numbers(r.v_norms);
    j["cost_P_Q"] = number(r.cost_P_Q);
    j["cost_S_Q"] = number(r.cost_S_Q);
    j["gap"] = number(r.gap);
    j["gap_formula"] = number(r.gap_formula);
    j["cost_P_anchor"] = number(r.cost_P_anchor);
    j["cost_S_anchor"] = number(r.cost_S_anchor);
    j["rel_error_Q"] = number(r.rel_error_Q);
    j["gap_ok"] = r.gap_ok;
    return j;
}

Json to_json(const MixedCheckReport& r) {
    Json j;
    j["worst_ratio"] = number(r.worst_ratio);
    j["witness"] = numbers(r.witness);
    j["witness_radius"] = number(r.witness_radius);
    j["radii"] = numbers(r.radii);
    j["worst_per_radius"] = numbers(r.worst_per_radius);
    j["evaluations"] = r.evaluations;
    j["seed"] = r.seed;
    return j;
}

Json to_json(const MixedCoreset& m) {
    Json j;
    j["eps"] = number(m.eps);
    j["z"] = number(m.z);
    j["rounds"] = m.rounds;
    j["target"] = m.target;
    j["size"] = m.subset.size();
    j["empirical_violation"] = number(m.empirical_violation);
    Json h = Json::array();
    for (const auto& r : m.history)
        h.push_back({{"size_before", r.size_before},
                     {"size_after", r.size_after},
                     {"order1_norm", number(r.order1_norm)},
                     {"random_median_order1", number(r.random_median_order1)},
                     {"drift", number(r.drift)},
                     {"drift_bound", number(r.drift_bound)},
                     {"potential", number(r.potential)},
                     {"random_potential", number(r.random_potential)}});
    j["history"] = h;
    j["check"] = m.check ? to_json(*m.check) : Json();
    return j;
}

Json interval_certificate(const Interval1DInstance& inst) {
    Json j;
    j["variant"] = "interval";
    Json iv = Json::array();
    for (const auto& I : inst.intervals) iv.push_back({number(I.l), number(I.r), number(I.density)});
    j["params"] = {{"eps_requested", number(inst.eps_requested)},
                   {"eps_eff", number(inst.eps_eff)},
                   {"m0", inst.m0},
                   {"intervals", iv}};
    Json masses = Json::array(), second = Json::array();
    double total = 0.0;
    for (const auto& I : inst.intervals) {
        masses.push_back(number(I.mass()));
        second.push_back(number(1.5 * I.density));
        total += I.mass();
    }
    j["expected_costs"] = {{"max_fixed0_cost_bound", number(2.0 / inst.eps_eff)},
                           {"interval_weights", masses},
                           {"total_weight", number(total)},
                           {"second_derivative", second}};
    j["expected_gaps"] = Json::object();
    return j;
}

Json subspace_certificate(const SubspaceInstance& inst) {
    Json j;
    const double k = inst.k, d = inst.d;
    j["variant"] = "subspace-" + variant_name(inst.variant);
    j["params"] = {{"k", inst.k},           {"d", inst.d},
                   {"z", number(inst.z)},   {"L", number(inst.L)},
                   {"groups", inst.groups}, {"per_group", inst.per_group},
                   {"points", inst.points.size()}};
    if (inst.variant == SubspaceVariant::main) {
        const double c1 = k * d / 4 * std::pow(2.0, inst.z / 2);
        j["expected_costs"] = {{"cost_P_C1", number(c1)},
                               {"cost_P_C3_empty_I", number(c1)},
                               {"cost_P_anchor", number(double(inst.points.size()))}};
        j["expected_gaps"] = {{"S_equals_P", 0.0}};
    } else {
        j["expected_costs"] = {{"cost_P_anchor", number(k * d)}};
        Json gaps = {{"S_equals_P", 0.0}};
        if (inst.per_group % 5 == 0) {
            gaps["keep80_weight1.25"] = number(k * std::sqrt(d));
            gaps["keep80_weight1.25_rel_error"] = number(1.0 / (2.0 * std::sqrt(d)));
        }
        j["expected_gaps"] = gaps;
    }
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace lowcore
