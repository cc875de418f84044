#pragma once

#include "slabh/rational.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace slabh::cli {

enum ExitCode : int { exit_ok = 0, exit_verification_failed = 1, exit_bad_input = 2 };

struct GridAxis {
    std::string var;
    Rational lo, hi, step;
};

struct RunConfig {
    std::string command;
    std::filesystem::path input;
    std::filesystem::path output;   ///< empty: stdout
    std::filesystem::path solution; ///< verify / oracle-compare only
    std::string grid;               ///< "t=lo:hi:step,y1=lo:hi:step"
    unsigned count = 50;            ///< self-test instances
    bool quiet = false;
};

/// Parses "t=0:1:1/2,y1=-1:1:0.5". Bounds accept integers, "p/q" or plain
/// decimals. Throws FormatError on malformed specs, nonpositive steps or
/// empty ranges.
std::vector<GridAxis> parse_grid(const std::string& spec);

int cmd_solve_slab(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_solve_diffeq(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_oracle_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_eval(const RunConfig& cfg, std::ostream& out, std::ostream& err);
/// Random instances seeded from SLAB_HARMONICS_SEED.
int cmd_self_test(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int run(int argc, char** argv, std::ostream& out, std::ostream& err);

} // namespace slabh::cli
