// otlab_main.cpp
//
// argv front end for the otlab commands. Exit codes: 0 all checks hold,
// 1 a mathematical check failed, 2 usage or I/O error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "otlab/cli.hpp"

namespace {

int dispatch(int (*cmd)(const otlab::RunConfig&, std::ostream&), const otlab::RunConfig& cfg) {
    try {
        if (cfg.output.empty()) return cmd(cfg, std::cout);
        std::ostringstream buffer;
        int rc = cmd(cfg, buffer);
        std::ofstream out(cfg.output, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open for writing: " << cfg.output << "\n";
            return 2;
        }
        out << buffer.str();
        return rc;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"otlab - an exact laboratory for 1D optimal transport between lattice measures"};
    app.require_subcommand(1);

    otlab::RunConfig cfg;
    int (*selected)(const otlab::RunConfig&, std::ostream&) = nullptr;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format: text, csv, or json")
            ->check(CLI::IsMember({"text", "csv", "json"}));
        sub->add_option("--output", cfg.output, "Write the report to this path");
    };

    CLI::App* rep = app.add_subcommand(
        "reproduce", "Run every built-in exact check and the sqrt(n) cost table");
    add_common(rep);
    rep->add_option("--n-max", cfg.n_max, "Cap for the sqrt(n) table grid");
    rep->add_flag("--corrupt-plan", cfg.corrupt_plan)->group("");  // hidden test hook
    rep->callback([&] { selected = otlab::cmd_reproduce; });

    CLI::App* sweep = app.add_subcommand("sweep", "Cost of (sigma_n, tau_n) over an n grid");
    add_common(sweep);
    sweep->add_option("--n-max", cfg.n_max, "Cap for the default grid 64,256,1024,4096");
    sweep->add_option("--n-values", cfg.sweep_n, "Explicit comma-separated n grid")
        ->delimiter(',');
    sweep->add_option("--cost-r", cfg.cost_r, "Cost exponent r > 0");
    sweep->add_option("--exact-limit", cfg.exact_limit,
                      "Support-size cap for exact-rational mode");
    sweep->callback([&] { selected = otlab::cmd_sweep; });

    CLI::App* fuzz = app.add_subcommand(
        "tanaka-fuzz", "Seeded fuzz of the Tanaka and halving gaps (exact, must be >= 0)");
    add_common(fuzz);
    fuzz->add_option("--seed", cfg.seed, "Random seed; fully determines the run");
    fuzz->add_option("--trials", cfg.trials, "Trials per suite");
    fuzz->callback([&] { selected = otlab::cmd_tanaka_fuzz; });

    CLI::App* gauss = app.add_subcommand(
        "gaussian", "Distance trace of normalized powers against the matched Gaussian");
    add_common(gauss);
    gauss->add_option("--measure", cfg.measure_file,
                      "Measure JSON file (default: the +/-1 coin)");
    gauss->add_option("--nu", cfg.nu_file,
                      "Log-concave comparison measure: trace T(mu^(n), nu^(n)) instead");
    gauss->add_option("--n-max", cfg.trace_n_max, "Trace length");
    gauss->callback([&] { selected = otlab::cmd_gaussian; });

    CLI::App* pfold = app.add_subcommand(
        "pfold", "p-fold generalization: residue separations and the p-fold trend");
    add_common(pfold);
    pfold->add_option("--p", cfg.pfold_p, "Residue modulus p >= 2");
    pfold->add_option("--n-max", cfg.n_max, "Cap for the trend grid 2,4,8,16");
    pfold->callback([&] { selected = otlab::cmd_pfold; });

    CLI::App* check = app.add_subcommand("check-plan",
                                         "Validate a serialized plan: marginals and cycles");
    add_common(check);
    check->add_option("plan", cfg.plan_file, "Plan JSON file")->required();
    check->add_option("--cost-r", cfg.cost_r, "Cost exponent for the cycle check");
    check->add_option("--emit-radiation", cfg.emit_radiation,
                      "Serialize the radiation plan for this n to the file first");
    check->callback([&] { selected = otlab::cmd_check_plan; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return dispatch(selected, cfg);
}
