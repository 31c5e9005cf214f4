// cli.hpp
//
// Command implementations behind the otlab binary. Each command is a pure
// function of (config, input files) writing one deterministic report to the
// given stream; the binary maps them onto argv.
//
// Exit-code contract: 0 all checks hold, 1 a mathematical check failed,
// 2 usage or I/O error.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace otlab {

struct RunConfig {
    unsigned n_max = 4096;
    double cost_r = 2.0;
    std::uint64_t seed = 42;
    unsigned trials = 1000;
    std::string format = "text";  // csv | json | text
    std::string output;           // empty writes to stdout
    unsigned exact_limit = 32768; // support-size cap for exact-rational mode
    unsigned pfold_p = 3;
    std::vector<unsigned> sweep_n;  // explicit grid; default derived from n_max
    std::string plan_file;
    std::string measure_file;  // gaussian: optional input measure
    std::string nu_file;       // gaussian: optional log-concave comparison measure
    unsigned trace_n_max = 50;
    unsigned emit_radiation = 0;  // check-plan: write radiation_plan(n) first
    bool corrupt_plan = false;    // test hook: perturbs one radiation-plan mass
};

int cmd_reproduce(const RunConfig& cfg, std::ostream& out);
int cmd_sweep(const RunConfig& cfg, std::ostream& out);
int cmd_tanaka_fuzz(const RunConfig& cfg, std::ostream& out);
int cmd_gaussian(const RunConfig& cfg, std::ostream& out);
int cmd_pfold(const RunConfig& cfg, std::ostream& out);
int cmd_check_plan(const RunConfig& cfg, std::ostream& out);

// 12-significant-digit rendering used for every float in reports
std::string fmt12(double v);

}  // namespace otlab
