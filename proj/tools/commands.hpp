#pragma once

#include "isokura/model.hpp"

#include <cstdint>
#include <set>
#include <string>

namespace isokura::cli {

// exit codes shared by all subcommands
inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitBadParams = 2;
inline constexpr int kExitCheckFailed = 3;

struct RunConfig {
    double k1 = 1.0;
    double k2 = 1.0;
    int res = 64;
    std::string theta0;    // "a,b,c"; required by simulate
    double dt = 1e-2;
    double tmax = 0.0;     // 0 = per-command default
    std::string out = "."; // output directory
    std::set<std::string> formats{"csv", "json", "svg"};
    std::uint64_t seed = 0;
    long samples = 1000;
    bool check_theorem = false;
    bool deterministic = false;
    bool inject_typo_eigvec = false; // verify: sabotage the eigenvector check
    int k1_sign = -1;                // figure1
    std::string ratios = "-3:3:0.05";
};

int cmd_equilibria(const RunConfig& cfg);
int cmd_simulate(const RunConfig& cfg);
int cmd_basin(const RunConfig& cfg);
int cmd_verify(const RunConfig& cfg);
int cmd_figure1(const RunConfig& cfg);

} // namespace isokura::cli
