#ifndef MLBEAM_TOOLS_COMMANDS_HPP
#define MLBEAM_TOOLS_COMMANDS_HPP

#include <string>

#include "run_config.hpp"

namespace mlbeam::cli {

struct CommandOptions {
    std::string out_path;
    bool allow_partial = false;
    bool gnuplot = false;
};

// Each command returns the process exit code: 0 on success, 2 when any
// sweep point failed to converge and allow_partial is not set.
int cmd_case_a_curves(const RunConfig& cfg, const CommandOptions& opt);
int cmd_stability(const RunConfig& cfg, const CommandOptions& opt);
int cmd_pushover(const RunConfig& cfg, const CommandOptions& opt);
int cmd_collapse(const RunConfig& cfg, const CommandOptions& opt);
int cmd_frequency_a(const RunConfig& cfg, const CommandOptions& opt);
int cmd_frequency_b(const RunConfig& cfg, const CommandOptions& opt);

}  // namespace mlbeam::cli

#endif  // MLBEAM_TOOLS_COMMANDS_HPP
