#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "lowcore/datasets.hpp"
#include "lowcore/report.hpp"

namespace lowcore::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Source {
    std::string input;
    std::string gen;
    std::size_t n = 100000;
    std::size_t d = 2;
};

struct Options {
    Source src;
    std::string coreset_path;
    std::string output;
    std::string report;
    std::string certificate;
    std::string algo = "alg1";
    std::string audit = "exact";
    std::string variant = "interval";
    std::vector<double> eps_list;
    double eps = 0.1;
    double z = 1.0;
    int k = 1;
    int d = 8;
    int m0 = 16;
    std::uint64_t seed = 1;
    std::size_t budget = 20000;
    std::size_t cap = kDefaultArrangementCap;
    bool fixed0 = false;
    bool cross_check = false;
    bool has_eps = false;
};

void add_source(CLI::App* c, Source& s) {
    c->add_option("--input", s.input, "points CSV (x0..x{d-1}[,w])");
    c->add_option("--gen", s.gen, "generator: uniform|gaussian|exponential|bimodal|clustered|ball");
    c->add_option("--n", s.n, "generated sample size");
    c->add_option("--dim", s.d, "dimension for --gen ball");
}

WeightedPointSet load(const Source& s, std::uint64_t seed) {
    if (!s.input.empty() && !s.gen.empty()) throw UsageError("use either --input or --gen");
    if (!s.input.empty()) return read_points_csv(s.input);
    if (s.gen.empty()) throw UsageError("an input is required (--input or --gen)");
    if (s.gen == "ball") return generate_unit_ball(s.n, s.d, seed);
    try {
        return generate_1d(parse_dist(s.gen), s.n, seed);
    } catch (const std::invalid_argument&) {
        throw UsageError("unknown generator: " + s.gen);
    }
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << text;
}

std::string read_text(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

Json header(const std::string& command, const Options& o) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["command"] = command;
    j["seed"] = o.seed;
    return j;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Audits a 1-d coreset for k centers; exact requests fall back to the
// stochastic search above the arrangement cap or for k >= 3.
AuditReport audit_1d(const WeightedPointSet& P, const WeightedPointSet& S, int k, const Options& o) {
    if (o.audit == "stochastic") return audit_stochastic(P, S, k, 1.0, o.budget, o.seed);
    if (k == 1) return audit_1d_1median(P, S);
    if (k == 2) {
        if (o.fixed0) return audit_1d_2median_fixed0(P, S);
        try {
            return audit_1d_2median(P, S, o.cap);
        } catch (const AuditCapExceeded& e) {
            std::cerr << "note: " << e.what() << "\n";
        }
    }
    AuditReport r = audit_stochastic(P, S, k, 1.0, o.budget, o.seed);
    r.fallback = true;
    return r;
}

int cmd_build(const Options& o) {
    auto t0 = std::chrono::steady_clock::now();
    WeightedPointSet P = load(o.src, o.seed);
    if (P.empty()) throw std::runtime_error("input has no points");
    Json j = header("build", o);
    j["algo"] = o.algo;
    j["eps"] = o.eps;
    j["k"] = o.k;
    j["z"] = o.z;
    j["n"] = P.size();
    j["dim"] = P.dim();
    WeightedPointSet S;
    bool failed = false;

    if (o.algo == "alg1" || o.algo == "baseline") {
        if (P.dim() != 1) throw UsageError(o.algo + " needs 1-d input");
        Sorted1D S1(P);
        if (o.algo == "alg1") {
            auto tr = coreset_1d_1median_traced(S1, o.eps);
            S = tr.coreset;
            j["eps_internal"] = tr.eps_internal;
            j["opt"] = number(tr.opt);
            j["blocks"] = tr.blocks.size();
        } else {
            S = baseline_coreset(S1, o.k, o.eps);
        }
        j["coreset_size"] = S.size();
        if (o.audit != "none") {
            int k = o.algo == "alg1" ? 1 : o.k;
            AuditReport r = audit_1d(P, S, k, o);
            j["audit"] = to_json(r);
            failed = r.max_rel_error > o.eps;
        } else {
            j["audit"] = nullptr;
        }
    } else if (o.algo == "mixed") {
        MixedOptions mo;
        mo.run_check = o.audit != "none";
        auto m = mixed_coreset(P, o.eps, o.z, o.seed, mo);
        S = m.subset;
        j["coreset_size"] = S.size();
        j["mixed"] = to_json(m);
        j["audit"] = m.check ? to_json(*m.check) : Json();
        failed = m.check && m.empirical_violation > 1.0;
    } else {
        throw UsageError("unknown --algo " + o.algo);
    }
    if (!o.output.empty()) write_points_csv(o.output, S);
    write_text(o.report, dump(j));
    std::cerr << "elapsed_s=" << seconds_since(t0) << "\n";
    return failed ? 2 : 0;
}

int cmd_genhard(const Options& o) {
    WeightedPointSet P;
    Json cert;
    if (o.variant == "interval") {
        auto inst = gen_interval_instance(o.eps, o.m0);
        cert = interval_certificate(inst);
        if (o.k > 1) {
            double L = default_copy_separation(inst);
            P = gen_k_copies(inst, o.k, L);
            cert["params"]["k"] = o.k;
            cert["params"]["L"] = L;
        } else {
            P = inst.points;
        }
    } else if (o.variant == "subspace-main" || o.variant == "subspace-appendix") {
        auto v = o.variant == "subspace-main" ? SubspaceVariant::main : SubspaceVariant::appendix;
        auto inst = gen_subspace_instance(o.k, o.d, v, o.z);
        cert = subspace_certificate(inst);
        P = inst.points;
    } else {
        throw UsageError("unknown --variant " + o.variant);
    }
    Json j;
    j["schema"] = kSchemaVersion;
    for (auto& [key, val] : cert.items()) j[key] = val;
    if (o.output.empty()) {
        std::cout << format_points_csv(P);
        if (!o.certificate.empty()) write_text(o.certificate, dump(j));
    } else {
        write_points_csv(o.output, P);
        write_text(o.certificate, dump(j));
    }
    return 0;
}

// Dense grid lower bound on the audited error, 1-d, k <= 2.
double grid_scan_1d(const WeightedPointSet& P, const WeightedPointSet& S, int k, bool fixed0) {
    Sorted1D A(P), B(S);
    double lo = std::min(A.x(0), B.x(0)), hi = std::max(A.x(A.size() - 1), B.x(B.size() - 1));
    double pad = std::max(1.0, hi - lo);
    lo -= pad;
    hi += pad;
    auto at = [&](std::size_t i, std::size_t n) { return lo + (hi - lo) * double(i) / double(n - 1); };
    double best = 0.0;
    if (k == 1 || fixed0) {
        const std::size_t n = 100000;
        for (std::size_t i = 0; i < n; ++i) {
            double c = at(i, n);
            double e = k == 1 ? relative_error(A.cost1(c), B.cost1(c)) : relative_error(A.cost2(0.0, c), B.cost2(0.0, c));
            best = std::max(best, e);
        }
    } else {
        const std::size_t n = 600;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                double a = at(i, n), b = at(j, n);
                best = std::max(best, relative_error(A.cost2(a, b), B.cost2(a, b)));
            }
    }
    return best;
}

SubspaceInstance instance_from_certificate(const Json& cert) {
    const std::string v = cert.at("variant");
    const auto& p = cert.at("params");
    SubspaceVariant var;
    if (v == "subspace-main")
        var = SubspaceVariant::main;
    else if (v == "subspace-appendix")
        var = SubspaceVariant::appendix;
    else
        throw UsageError("certificate replay supports subspace variants only");
    return gen_subspace_instance(p.at("k").get<int>(), p.at("d").get<int>(), var, p.at("z").get<double>());
}

int cmd_audit(const Options& o) {
    auto t0 = std::chrono::steady_clock::now();
    if (o.coreset_path.empty()) throw UsageError("--coreset is required");
    WeightedPointSet S = read_points_csv(o.coreset_path);
    Json j = header("audit", o);
    bool failed = false;

    if (!o.certificate.empty()) {
        Json cert = Json::parse(read_text(o.certificate));
        SubspaceInstance inst = instance_from_certificate(cert);
        if (!o.src.input.empty()) {
            WeightedPointSet P = read_points_csv(o.src.input);
            if (P.size() != inst.points.size() || P.dim() != inst.points.dim())
                throw std::runtime_error("input does not match the certificate instance");
        }
        j["variant"] = cert.at("variant");
        if (inst.variant == SubspaceVariant::appendix) {
            auto rep = adversarial_query_subset(inst, S);
            j["replay"] = to_json(rep);
            failed = !rep.gap_ok;
        } else {
            auto led = lb_inequality_ledger(inst, S, inst.z, o.has_eps ? o.eps : 0.0, o.seed);
            j["replay"] = to_json(led);
            failed = !led.all_equalities_hold();
        }
    } else {
        WeightedPointSet P = load(o.src, o.seed);
        if (P.dim() != S.dim()) throw UsageError("P and S have different dimensions");
        j["k"] = o.k;
        j["z"] = o.z;
        AuditReport r;
        if (o.audit == "exact") {
            if (P.dim() != 1 || o.z != 1.0) throw UsageError("exact audits need 1-d input and z = 1");
            if (o.k > 2) throw UsageError("exact audits support k = 1 and k = 2");
            r = audit_1d(P, S, o.k, o);
        } else if (o.audit == "stochastic") {
            r = audit_stochastic(P, S, o.k, o.z, o.budget, o.seed);
        } else {
            throw UsageError("unknown --audit " + o.audit);
        }
        j["audit"] = to_json(r);
        if (o.cross_check) {
            if (o.audit != "exact") throw UsageError("--cross-check compares an exact audit with a grid scan");
            double g = grid_scan_1d(P, S, o.k, o.fixed0);
            bool consistent = g <= r.max_rel_error * (1 + 1e-9) + 1e-12;
            j["cross_check"] = {{"grid_max_rel_error", number(g)}, {"consistent", consistent}};
            if (!consistent) failed = true;
        }
        if (o.has_eps) {
            j["eps"] = o.eps;
            failed = failed || r.max_rel_error > o.eps;
        }
    }
    j["pass"] = !failed;
    write_text(o.report, dump(j));
    std::cerr << "elapsed_s=" << seconds_since(t0) << "\n";
    return failed ? 2 : 0;
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

int cmd_curve(const Options& o) {
    std::string out = "eps,size,max_rel_error,runtime_s\n";
    if (!o.eps_list.empty()) {
        WeightedPointSet P = load(o.src, o.seed);
        if (P.dim() != 1) throw UsageError("curve needs 1-d input");
        Sorted1D S1(P);
        for (double e : o.eps_list) {
            auto t0 = std::chrono::steady_clock::now();
            WeightedPointSet S;
            int k = 1;
            if (o.algo == "alg1") {
                S = coreset_1d_1median(S1, e);
            } else if (o.algo == "baseline") {
                S = baseline_coreset(S1, o.k, e);
                k = o.k;
            } else {
                throw UsageError("curve supports --algo alg1|baseline");
            }
            double runtime = seconds_since(t0);
            double err = std::numeric_limits<double>::quiet_NaN();
            if (o.audit != "none") err = audit_1d(P, S, k, o).max_rel_error;
            char rt[32];
            std::snprintf(rt, sizeof rt, "%.6f", runtime);
            out += fmt(e) + "," + std::to_string(S.size()) + "," + fmt(err) + "," + rt + "\n";
        }
    }
    write_text(o.output, out);
    return 0;
}

int cmd_solve(const Options& o) {
    WeightedPointSet P = load(o.src, o.seed);
    if (P.dim() != 1) throw UsageError("solve needs 1-d input");
    auto r = exact_kmedian_1d(Sorted1D(P), o.k);
    Json j = header("solve", o);
    j["k"] = o.k;
    j["n"] = P.size();
    Json body = to_json(r);
    for (auto& [key, val] : body.items()) j[key] = val;
    write_text(o.report, dump(j));
    return 0;
}

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"lowcore: small-dimension k-median coresets, audits and hard instances"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* c) {
        c->add_option("--seed", o.seed, "random seed");
        c->add_option("--report", o.report, "JSON report path (default stdout)");
    };

    auto* build = app.add_subcommand("build", "build a coreset and audit it");
    add_source(build, o.src);
    common(build);
    build->add_option("--algo", o.algo, "alg1|baseline|mixed");
    build->add_option("--eps", o.eps, "target error");
    build->add_option("--k", o.k, "number of centers (baseline)");
    build->add_option("--z", o.z, "cost exponent (mixed)");
    build->add_option("--audit", o.audit, "exact|stochastic|none");
    build->add_option("--budget", o.budget, "stochastic audit evaluations");
    build->add_option("--cap", o.cap, "exact two-center audit cap on |P|+|S|");
    build->add_option("--output", o.output, "coreset CSV path");

    auto* genhard = app.add_subcommand("genhard", "generate a lower-bound instance with its certificate");
    common(genhard);
    genhard->add_option("--variant", o.variant, "interval|subspace-main|subspace-appendix");
    genhard->add_option("--eps", o.eps, "interval instance eps");
    genhard->add_option("--m0", o.m0, "points per interval");
    genhard->add_option("--k", o.k, "centers (copies for interval, subspaces otherwise)");
    genhard->add_option("--d", o.d, "subspace dimension");
    genhard->add_option("--z", o.z, "cost exponent");
    genhard->add_option("--output", o.output, "instance CSV path (default stdout)");
    genhard->add_option("--certificate", o.certificate, "certificate JSON path");

    auto* audit = app.add_subcommand("audit", "audit a coreset against its input");
    add_source(audit, o.src);
    common(audit);
    audit->add_option("--coreset", o.coreset_path, "coreset CSV");
    audit->add_option("--k", o.k, "number of centers");
    audit->add_option("--z", o.z, "cost exponent");
    audit->add_option("--audit", o.audit, "exact|stochastic");
    audit->add_option("--budget", o.budget, "stochastic audit evaluations");
    audit->add_option("--cap", o.cap, "exact two-center audit cap on |P|+|S|");
    audit->add_flag("--fixed0", o.fixed0, "two-center audit with one center pinned at 0");
    audit->add_flag("--cross-check", o.cross_check, "also run the stochastic audit and compare");
    auto* eps_opt = audit->add_option("--eps", o.eps, "fail (exit 2) above this error");
    audit->add_option("--certificate", o.certificate, "replay a subspace certificate");

    auto* curve = app.add_subcommand("curve", "size and error versus eps");
    add_source(curve, o.src);
    common(curve);
    curve->add_option("--algo", o.algo, "alg1|baseline");
    curve->add_option("--eps", o.eps_list, "comma-separated eps values")->delimiter(',');
    curve->add_option("--k", o.k, "number of centers (baseline)");
    curve->add_option("--audit", o.audit, "exact|stochastic|none");
    curve->add_option("--budget", o.budget, "stochastic audit evaluations");
    curve->add_option("--cap", o.cap, "exact two-center audit cap on |P|+|S|");
    curve->add_option("--output", o.output, "CSV path (default stdout)");

    auto* solve = app.add_subcommand("solve", "exact 1-d k-median");
    add_source(solve, o.src);
    common(solve);
    solve->add_option("--k", o.k, "number of centers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }
    o.has_eps = eps_opt->count() > 0;

    try {
        if (*build) return cmd_build(o);
        if (*genhard) return cmd_genhard(o);
        if (*audit) return cmd_audit(o);
        if (*curve) return cmd_curve(o);
        if (*solve) return cmd_solve(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace lowcore::cli
