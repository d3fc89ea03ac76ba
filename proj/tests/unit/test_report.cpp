#include <gtest/gtest.h>

#include <cmath>

#include "lowcore/datasets.hpp"
#include "lowcore/report.hpp"

using namespace lowcore;

TEST(Report, NonFiniteNumbers) {
    EXPECT_EQ(number(INFINITY), "inf");
    EXPECT_EQ(number(-INFINITY), "-inf");
    EXPECT_EQ(number(NAN), "nan");
    EXPECT_EQ(number(0.1).get<double>(), 0.1);
}

TEST(Report, RoundTripsDoubles) {
    for (double x : {0.1, 1.0 / 3, 2.0 / 3 * 1e-300, 123456789.123456789}) {
        Json j = {{"x", number(x)}};
        EXPECT_EQ(Json::parse(dump(j))["x"].get<double>(), x);
    }
}

TEST(Report, AuditFields) {
    auto P = generate_1d(Dist1D::uniform, 100, 1);
    auto j = to_json(audit_1d_1median(P, P));
    for (const char* key : {"method", "max_rel_error", "witness_centers", "evaluations", "seed"})
        EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_EQ(j["method"], "exact-k1");
}

TEST(Report, IntervalCertificate) {
    auto c = interval_certificate(gen_interval_instance(0.3));
    EXPECT_EQ(c["variant"], "interval");
    EXPECT_EQ(c["params"]["eps_eff"].get<double>(), 0.25);
    EXPECT_EQ(c["params"]["eps_requested"].get<double>(), 0.3);
    EXPECT_EQ(c["params"]["intervals"].size(), 4u);
    EXPECT_EQ(c["expected_costs"]["max_fixed0_cost_bound"].get<double>(), 8.0);
    for (const char* key : {"variant", "params", "expected_costs", "expected_gaps"}) EXPECT_TRUE(c.contains(key));
}

TEST(Report, SubspaceCertificates) {
    auto m = subspace_certificate(gen_subspace_instance(4, 8, SubspaceVariant::main, 2.0));
    EXPECT_EQ(m["variant"], "subspace-main");
    EXPECT_EQ(m["expected_costs"]["cost_P_C1"].get<double>(), 16.0);
    auto a = subspace_certificate(gen_subspace_instance(2, 10, SubspaceVariant::appendix, 2.0));
    EXPECT_EQ(a["expected_costs"]["cost_P_anchor"].get<double>(), 20.0);
    EXPECT_NEAR(a["expected_gaps"]["keep80_weight1.25_rel_error"].get<double>(), 1 / (2 * std::sqrt(10.0)), 1e-15);
}

TEST(Report, Deterministic) {
    auto P = generate_unit_ball(600, 2, 2);
    MixedOptions o;
    o.check_samples = 500;
    auto a = dump(to_json(mixed_coreset(P, 0.2, 1.0, 3, o)));
    auto b = dump(to_json(mixed_coreset(P, 0.2, 1.0, 3, o)));
    EXPECT_EQ(a, b);
}
