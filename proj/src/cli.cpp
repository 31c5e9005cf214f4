// cli.cpp

#include "otlab/cli.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "otlab/fuzz.hpp"
#include "otlab/gaussian.hpp"
#include "otlab/io.hpp"
#include "otlab/lp.hpp"
#include "otlab/radiation.hpp"

namespace otlab {

using nlohmann::json;

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace {

json scalar_to_json(const Scalar& s) {
    json j;
    j["decimal"] = fmt12(s.value());
    if (s.is_exact()) {
        j["num"] = s.rational().num().to_string();
        j["den"] = s.rational().den().to_string();
    }
    return j;
}

json rational_report(const Rational& r) {
    return json{{"num", r.num().to_string()},
                {"den", r.den().to_string()},
                {"decimal", fmt12(r.to_double())}};
}

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

int emit_checks(const std::string& command, const std::vector<CheckResult>& checks,
                const json& extra, const RunConfig& cfg, std::ostream& out) {
    std::size_t passed = 0;
    const CheckResult* first_fail = nullptr;
    for (const CheckResult& c : checks) {
        if (c.pass)
            ++passed;
        else if (!first_fail)
            first_fail = &c;
    }
    if (cfg.format == "json") {
        json j;
        j["command"] = command;
        j["pass"] = passed == checks.size();
        json arr = json::array();
        for (const CheckResult& c : checks)
            arr.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        j["checks"] = arr;
        if (!extra.is_null()) {
            json report = extra;
            report.erase("table_text");  // text-mode rendering only
            j["report"] = report;
        }
        out << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << "check,pass,detail\n";
        for (const CheckResult& c : checks) {
            std::string detail = c.detail;
            for (char& ch : detail)
                if (ch == ',') ch = ';';
            out << c.name << "," << (c.pass ? "true" : "false") << "," << detail << "\n";
        }
    } else {
        out << "otlab " << command << "\n";
        for (const CheckResult& c : checks)
            out << (c.pass ? "PASS  " : "FAIL  ") << c.name << "  " << c.detail << "\n";
        if (!extra.is_null() && extra.contains("table_text"))
            out << extra["table_text"].get<std::string>();
        out << "RESULT " << (passed == checks.size() ? "PASS" : "FAIL") << " (" << passed << "/"
            << checks.size() << " checks)\n";
    }
    if (first_fail) {
        out << "FAILED: " << first_fail->name << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

// ---------------------------------------------------------------------------
// reproduce
// ---------------------------------------------------------------------------

int cmd_reproduce(const RunConfig& cfg, std::ostream& out) {
    std::vector<CheckResult> checks;
    const CostSpec quad{2.0};
    const Rational five_eighths(5, 8);

    // the n = 2 closed value by the two independent routes
    {
        BinomialFamily f = binomial_family(2);
        Scalar direct = w_distance(f.sigma, f.tau, quad).cost;
        bool ok = direct.is_exact() && direct.rational() == five_eighths;
        checks.push_back({"sigma2-tau2-monotone",
                          ok, "T(sigma_2, tau_2) = " + direct.rational().to_string() +
                                  " by the monotone coupling (want 5/8)"});
        bool lp_exact = false;
        auto matrix = lp_cost_matrix(f.sigma, f.tau, quad, &lp_exact);
        Scalar via_lp = lp_oracle(f.sigma, f.tau, matrix).cost;
        bool ok2 = lp_exact && via_lp.is_exact() && via_lp.rational() == five_eighths;
        checks.push_back(
            {"sigma2-tau2-lp", ok2, "LP oracle gives " + via_lp.rational().to_string()});
    }

    // monotone decrease breaks between the 2- and 3-fold normalized powers
    {
        ViolationReport v = monotonicity_violation(2);
        bool ok = v.t2_normalized == Rational(5, 16) &&
                  v.t3_normalized_exact >= v.t3_normalized_lower && v.violated;
        checks.push_back({"monotonicity-violation", ok,
                          "t2 = " + v.t2_normalized.to_string() + " < 1/3 <= t3 = " +
                              v.t3_normalized_exact.to_string() + " (violated=" +
                              (v.violated ? "true" : "false") + ")"});
    }

    // odd-convolution separation, exact transport each n
    {
        bool ok = true;
        std::string where;
        for (unsigned n = 1; n <= 20 && ok; ++n) {
            Scalar bound = odd_separation(n, 3);
            Scalar exact = w_distance(rademacher_sum(3 * (2 * n - 1)), rademacher_sum(6 * n),
                                      quad).cost;
            if (!(bound.is_exact() && bound.rational() == Rational(1)) ||
                !(exact.is_exact() && exact.rational() >= Rational(1))) {
                ok = false;
                where = " (failed at n = " + std::to_string(n) + ")";
            }
        }
        checks.push_back({"odd-separation", ok,
                          "T(mu_n^*3, nu_n^*3) >= 1 exactly for n = 1..20, support bound = 1" +
                              where});
    }

    // sqrt(n) T table against the CLT limit
    json table = json::array();
    std::string table_text;
    {
        std::vector<unsigned> grid;
        for (unsigned n : {64u, 256u, 1024u, 4096u})
            if (n <= cfg.n_max) grid.push_back(n);
        if (grid.empty()) grid.push_back(cfg.n_max);
        auto entries = asymptotic_sweep(grid, quad);
        std::ostringstream tt;
        tt << "  n      sqrt(n)*T         lower              upper\n";
        bool ok = true;
        double final_scaled = 0.0;
        for (const SweepEntry& e : entries) {
            if (!e.error.empty()) {
                ok = false;
                tt << "  " << e.n << "  error: " << e.error << "\n";
                continue;
            }
            final_scaled = e.sqrt_n_scaled;
            json row;
            row["n"] = e.n;
            row["cost"] = scalar_to_json(e.cost);
            row["sqrt_n_scaled"] = fmt12(e.sqrt_n_scaled);
            if (e.lower) row["lower"] = rational_report(*e.lower);
            if (e.upper) row["upper"] = rational_report(*e.upper);
            table.push_back(row);
            tt << "  " << e.n << "  " << fmt12(e.sqrt_n_scaled) << "   "
               << (e.lower ? fmt12(e.lower->to_double()) : "-") << "   "
               << (e.upper ? fmt12(e.upper->to_double()) : "-") << "\n";
        }
        const bool at_full_grid = !entries.empty() && entries.back().n == 4096;
        if (at_full_grid && std::abs(final_scaled - kCltLimit) > 0.05 * kCltLimit) ok = false;
        table_text = tt.str();
        checks.push_back({"sqrt-n-table", ok,
                          "sqrt(n) T at n = " + std::to_string(entries.back().n) + " is " +
                              fmt12(final_scaled) + " (reference " + fmt12(kCltLimit) +
                              (at_full_grid ? ", tolerance 5%)" : ", limit check skipped below n=4096)")});
    }

    // radiation plan: exact marginals and optimality for n <= 50
    {
        bool marg_ok = true, opt_ok = true;
        std::string marg_where, opt_where;
        for (unsigned n = 1; n <= 50; ++n) {
            TransportPlan plan = radiation_plan(n);
            if (cfg.corrupt_plan && n == 1) plan.moves[0].mass += Rational(1, 1000000);
            try {
                validate_plan(plan);
            } catch (const std::exception& e) {
                if (marg_ok) marg_where = " (n = " + std::to_string(n) + ": " + e.what() + ")";
                marg_ok = false;
                continue;
            }
            Scalar plan_cost = transport_cost(plan, quad);
            Scalar opt = w_distance(plan.source, plan.target, quad).cost;
            if (!(plan_cost.is_exact() && opt.is_exact() &&
                  plan_cost.rational() == opt.rational())) {
                if (opt_ok) opt_where = " (n = " + std::to_string(n) + ")";
                opt_ok = false;
            }
        }
        checks.push_back({"radiation-plan-marginals", marg_ok,
                          "plan pushes sigma_n to tau_n exactly, n <= 50" + marg_where});
        checks.push_back({"radiation-plan-optimality", opt_ok,
                          "plan cost equals T(sigma_n, tau_n) exactly, n <= 50" + opt_where});
    }

    json extra;
    extra["table"] = table;
    extra["table_text"] = table_text;
    return emit_checks("reproduce", checks, extra, cfg, out);
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
    std::vector<unsigned> grid = cfg.sweep_n;
    if (grid.empty()) {
        for (unsigned n : {64u, 256u, 1024u, 4096u})
            if (n <= cfg.n_max) grid.push_back(n);
        if (grid.empty()) grid.push_back(cfg.n_max);
    }
    for (unsigned n : grid)
        if (4 * n + 1 > cfg.exact_limit)
            throw std::invalid_argument(
                "sweep: support size 4n+1 exceeds --exact-limit for exact-rational mode at n = " +
                std::to_string(n));

    auto entries = asymptotic_sweep(grid, CostSpec::make(cfg.cost_r));

    if (cfg.format == "json") {
        json j;
        j["command"] = "sweep";
        j["cost_r"] = cfg.cost_r;
        json arr = json::array();
        for (const SweepEntry& e : entries) {
            json row;
            row["n"] = e.n;
            if (e.error.empty()) {
                row["cost"] = scalar_to_json(e.cost);
                row["sqrt_n_scaled"] = fmt12(e.sqrt_n_scaled);
                if (e.lower) row["lower"] = rational_report(*e.lower);
                if (e.upper) row["upper"] = rational_report(*e.upper);
                row["exact"] = e.exact;
            } else {
                row["error"] = e.error;
            }
            arr.push_back(row);
        }
        j["entries"] = arr;
        out << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << "n,cost,sqrt_n_scaled,lower,upper,exact_flag\n";
        for (const SweepEntry& e : entries) {
            if (!e.error.empty()) continue;  // reported in text/json modes
            out << e.n << "," << fmt12(e.cost.value()) << "," << fmt12(e.sqrt_n_scaled) << ","
                << (e.lower ? fmt12(e.lower->to_double()) : "") << ","
                << (e.upper ? fmt12(e.upper->to_double()) : "") << ","
                << (e.exact ? "true" : "false") << "\n";
        }
    } else {
        out << "otlab sweep  r = " << fmt12(cfg.cost_r) << "\n";
        out << "  n      cost           sqrt(n)*cost    lower          upper\n";
        for (const SweepEntry& e : entries) {
            if (!e.error.empty()) {
                out << "  " << e.n << "  error: " << e.error << "\n";
                continue;
            }
            out << "  " << e.n << "  " << fmt12(e.cost.value()) << "  " << fmt12(e.sqrt_n_scaled)
                << "  " << (e.lower ? fmt12(e.lower->to_double()) : "-") << "  "
                << (e.upper ? fmt12(e.upper->to_double()) : "-")
                << (e.exact ? "" : "  (inexact)") << "\n";
        }
        if (!entries.empty() && entries.back().error.empty())
            out << "empirical limit estimate: " << fmt12(entries.back().sqrt_n_scaled)
                << "  (2/sqrt(2 pi) = " << fmt12(kCltLimit) << ")\n";
    }
    for (const SweepEntry& e : entries)
        if (!e.error.empty()) return 1;
    return 0;
}

// ---------------------------------------------------------------------------
// tanaka + halving fuzz
// ---------------------------------------------------------------------------

int cmd_tanaka_fuzz(const RunConfig& cfg, std::ostream& out) {
    FuzzRng rng(cfg.seed);
    Scalar min_tanaka, min_halving;
    bool have_t = false, have_h = false;
    std::string witness;

    for (unsigned trial = 0; trial < cfg.trials; ++trial) {
        LatticeMeasure mu = random_dyadic_measure(rng, 6, 8);
        LatticeMeasure mu2 = random_dyadic_measure(rng, 6, 8);
        LatticeMeasure nu = random_symmetric_measure(rng, 3, 8);
        LatticeMeasure nu2 = random_symmetric_measure(rng, 3, 8);
        Rational a = random_small_rational(rng), b = random_small_rational(rng);
        Scalar gap = tanaka_gap(mu, mu2, nu, nu2, a, b);
        if (!have_t || gap.value() < min_tanaka.value()) {
            min_tanaka = gap;
            have_t = true;
        }
        if ((gap.is_exact() && gap.rational().sign() < 0) ||
            (!gap.is_exact() && gap.value() < -1e-9)) {
            if (witness.empty()) {
                json w;
                w["trial"] = trial;
                w["kind"] = "tanaka";
                w["mu"] = measure_to_json(mu);
                w["mu2"] = measure_to_json(mu2);
                w["nu"] = measure_to_json(nu);
                w["nu2"] = measure_to_json(nu2);
                w["a"] = a.to_string();
                w["b"] = b.to_string();
                witness = w.dump();
            }
        }
    }
    for (unsigned trial = 0; trial < cfg.trials; ++trial) {
        LatticeMeasure mu = random_symmetric_measure(rng, 4, 8);
        LatticeMeasure nu = random_symmetric_measure(rng, 4, 8);
        unsigned m = 1 + trial % 4;
        Scalar gap = halving_gap(mu, nu, m);
        if (!have_h || gap.value() < min_halving.value()) {
            min_halving = gap;
            have_h = true;
        }
        if ((gap.is_exact() && gap.rational().sign() < 0) ||
            (!gap.is_exact() && gap.value() < -1e-9)) {
            if (witness.empty()) {
                json w;
                w["trial"] = trial;
                w["kind"] = "halving";
                w["mu"] = measure_to_json(mu);
                w["nu"] = measure_to_json(nu);
                w["m"] = m;
                witness = w.dump();
            }
        }
    }

    const bool ok = witness.empty();
    if (cfg.format == "json") {
        json j;
        j["command"] = "tanaka-fuzz";
        j["seed"] = cfg.seed;
        j["trials_per_suite"] = cfg.trials;
        j["min_tanaka_gap"] = scalar_to_json(min_tanaka);
        j["min_halving_gap"] = scalar_to_json(min_halving);
        j["pass"] = ok;
        if (!ok) j["witness"] = json::parse(witness);
        out << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << "suite,trials,min_gap,pass\n";
        out << "tanaka," << cfg.trials << "," << fmt12(min_tanaka.value()) << ","
            << (ok ? "true" : "false") << "\n";
        out << "halving," << cfg.trials << "," << fmt12(min_halving.value()) << ","
            << (ok ? "true" : "false") << "\n";
    } else {
        out << "otlab tanaka-fuzz  seed = " << cfg.seed << ", " << cfg.trials
            << " trials per suite\n";
        out << "min tanaka gap:  "
            << (min_tanaka.is_exact() ? min_tanaka.rational().to_string() : "~") << " ("
            << fmt12(min_tanaka.value()) << ")\n";
        out << "min halving gap: "
            << (min_halving.is_exact() ? min_halving.rational().to_string() : "~") << " ("
            << fmt12(min_halving.value()) << ")\n";
        if (!ok) out << "VIOLATION WITNESS: " << witness << "\n";
        out << "RESULT " << (ok ? "PASS" : "FAIL") << "\n";
    }
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// gaussian traces
// ---------------------------------------------------------------------------

int cmd_gaussian(const RunConfig& cfg, std::ostream& out) {
    LatticeMeasure mu =
        cfg.measure_file.empty()
            ? rademacher_sum(1)
            : measure_from_json(json::parse(read_text_file(cfg.measure_file)));
    MonotoneTrace trace;
    std::string mode;
    if (cfg.nu_file.empty()) {
        trace = gaussian_monotone_trace(mu, cfg.trace_n_max);
        mode = "gaussian";
    } else {
        LatticeMeasure nu = measure_from_json(json::parse(read_text_file(cfg.nu_file)));
        trace = logconcave_variant_trace(mu, nu, cfg.trace_n_max);
        mode = "logconcave";
    }

    if (cfg.format == "json") {
        json j;
        j["command"] = "gaussian";
        j["mode"] = mode;
        json arr = json::array();
        for (std::size_t i = 0; i < trace.entries.size(); ++i) {
            json row;
            row["n"] = trace.entries[i].n;
            row["distance"] = fmt12(trace.entries[i].distance);
            if (i > 0)
                row["delta"] =
                    fmt12(trace.entries[i].distance - trace.entries[i - 1].distance);
            arr.push_back(row);
        }
        j["entries"] = arr;
        j["nonincreasing"] = trace.nonincreasing;
        j["strictly_decreasing"] = trace.strictly_decreasing;
        if (trace.first_increase_at)
            j["first_increase_at"] = *trace.first_increase_at;
        else
            j["first_increase_at"] = nullptr;
        out << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << "n,distance,delta\n";
        for (std::size_t i = 0; i < trace.entries.size(); ++i) {
            out << trace.entries[i].n << "," << fmt12(trace.entries[i].distance) << ",";
            if (i > 0) out << fmt12(trace.entries[i].distance - trace.entries[i - 1].distance);
            out << "\n";
        }
    } else {
        out << "otlab gaussian (" << mode << " trace, n_max = " << cfg.trace_n_max << ")\n";
        for (const TraceEntry& e : trace.entries)
            out << "  " << e.n << "  " << fmt12(e.distance) << "\n";
        out << "nonincreasing: " << (trace.nonincreasing ? "true" : "false")
            << "  strictly decreasing: " << (trace.strictly_decreasing ? "true" : "false");
        if (trace.first_increase_at) out << "  first increase at n = " << *trace.first_increase_at;
        out << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// pfold
// ---------------------------------------------------------------------------

namespace {

LatticeMeasure conv_power(const LatticeMeasure& m, unsigned k) {
    LatticeMeasure acc = m;
    for (unsigned i = 1; i < k; ++i) acc = convolve(acc, m);
    return acc;
}

}  // namespace

int cmd_pfold(const RunConfig& cfg, std::ostream& out) {
    const unsigned p = cfg.pfold_p;
    const CostSpec quad{2.0};

    // separation at n = 4 for every order below 2p not divisible by p
    const unsigned n_sep = 4;
    PfoldFamily sep_fam = pfold_family(p, n_sep);
    json seps = json::array();
    std::ostringstream sep_text;
    for (unsigned k = 1; k < 2 * p; ++k) {
        if (k % p == 0) continue;
        Scalar lb = support_distance_lower_bound(conv_power(sep_fam.mu, k),
                                                 conv_power(sep_fam.nu, k), quad);
        seps.push_back(json{{"k", k}, {"separation", scalar_to_json(lb)}});
        sep_text << "  k = " << k << "  support bound " << fmt12(lb.value()) << "\n";
    }

    // normalized p-fold distance over the n grid (reported trend only)
    std::vector<unsigned> grid;
    for (unsigned n : {2u, 4u, 8u, 16u})
        if (n <= cfg.n_max) grid.push_back(n);
    if (grid.empty()) grid.push_back(cfg.n_max);
    json rows = json::array();
    std::ostringstream trend_text;
    double prev = 0.0;
    bool decreasing = true;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        PfoldFamily f = pfold_family(p, grid[i]);
        double d = w_distance(normalized_power(f.mu, p), normalized_power(f.nu, p), quad)
                       .cost.value();
        rows.push_back(json{{"n", grid[i]}, {"t_pfold", fmt12(d)}});
        trend_text << "  n = " << grid[i] << "  T(mu^(p), nu^(p)) = " << fmt12(d) << "\n";
        if (i > 0 && d >= prev) decreasing = false;
        prev = d;
    }

    if (cfg.format == "json") {
        json j;
        j["command"] = "pfold";
        j["p"] = p;
        j["separation_n"] = n_sep;
        j["separations"] = seps;
        j["trend"] = rows;
        j["decreasing"] = decreasing;
        out << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << "n,t_pfold\n";
        for (const json& r : rows)
            out << r["n"].get<unsigned>() << "," << r["t_pfold"].get<std::string>() << "\n";
    } else {
        out << "otlab pfold  p = " << p << "\n";
        out << "separation of k-fold convolutions at n = " << n_sep << " (p does not divide k):\n"
            << sep_text.str();
        out << "normalized p-fold distance over n:\n" << trend_text.str();
        out << "trend decreasing: " << (decreasing ? "true" : "false") << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// check-plan
// ---------------------------------------------------------------------------

int cmd_check_plan(const RunConfig& cfg, std::ostream& out) {
    if (cfg.emit_radiation > 0)
        write_text_file(cfg.plan_file,
                        plan_to_json(radiation_plan(cfg.emit_radiation)).dump(1) + "\n");
    TransportPlan plan = plan_from_json(json::parse(read_text_file(cfg.plan_file)));
    std::string verdict = "ok";
    std::string detail;
    int rc = 0;
    try {
        validate_plan(plan);
    } catch (const std::exception& e) {
        verdict = "invalid";
        detail = e.what();
        rc = 1;
    }
    CycleCheck cyc;
    if (rc == 0) {
        cyc = cyclic_monotonicity_check(plan, CostSpec::make(cfg.cost_r), 3);
        if (cyc.status == CycleCheck::Status::violation) {
            verdict = "not-cyclically-monotone";
            std::ostringstream ss;
            ss << "violating cycle over moves";
            for (std::size_t k : cyc.cycle) ss << " " << k;
            detail = ss.str();
            rc = 1;
        } else if (cyc.status == CycleCheck::Status::partial) {
            verdict = "partial";
            detail = "budget of " + std::to_string(cyc.budget) + " cycle checks exhausted after " +
                     std::to_string(cyc.cycles_checked);
        }
    }
    if (cfg.format == "json") {
        json j;
        j["command"] = "check-plan";
        j["verdict"] = verdict;
        j["cycles_checked"] = cyc.cycles_checked;
        if (!detail.empty()) j["detail"] = detail;
        out << j.dump(2) << "\n";
    } else {
        out << verdict << (detail.empty() ? "" : "  (" + detail + ")") << "\n";
    }
    return rc;
}

}  // namespace otlab
