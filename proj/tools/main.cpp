#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "commands.hpp"
#include "run_config.hpp"

namespace {

using mlbeam::cli::CommandOptions;
using mlbeam::cli::RunConfig;

struct CommonArgs {
    std::string config_path;
    std::string out_path;
    std::string geometric;  // "", "on", "off"
    std::optional<double> epsilon;
    std::optional<int> max_iter;
    std::optional<int> grid_n;
    std::optional<int> threads;
    bool allow_partial = false;
    bool gnuplot = false;
};

void add_common(CLI::App* sub, CommonArgs& a, const std::string& default_out) {
    a.out_path = default_out;
    sub->add_option("--config", a.config_path, "JSON run configuration (defaults are built in)")
        ->check(CLI::ExistingFile);
    sub->add_option("--out", a.out_path, "output CSV path");
    sub->add_option("--geometric", a.geometric, "override geometric nonlinearity: on or off")
        ->check(CLI::IsMember({"on", "off"}));
    sub->add_option("--epsilon", a.epsilon, "solver residual threshold, percent");
    sub->add_option("--max-iter", a.max_iter, "solver iteration cap");
    sub->add_option("--grid-n", a.grid_n, "solver grid intervals");
    sub->add_option("--threads", a.threads, "worker threads (0 = hardware)");
    sub->add_flag("--allow-partial", a.allow_partial,
                  "emit non-converged sweep points with a status column instead of failing");
    sub->add_flag("--gnuplot", a.gnuplot, "also write a gnuplot script next to the CSV");
}

RunConfig resolve_config(const CommonArgs& a) {
    RunConfig cfg = a.config_path.empty() ? RunConfig::defaults() : RunConfig::load(a.config_path);
    if (a.epsilon) {
        if (!(*a.epsilon > 0.0)) throw mlbeam::cli::ConfigError("--epsilon must be positive");
        cfg.solver.epsilon = *a.epsilon;
    }
    if (a.max_iter) {
        if (*a.max_iter < 1) throw mlbeam::cli::ConfigError("--max-iter must be >= 1");
        cfg.solver.max_iter = *a.max_iter;
    }
    if (a.grid_n) {
        if (*a.grid_n < 100) throw mlbeam::cli::ConfigError("--grid-n must be >= 100");
        cfg.solver.grid_n = *a.grid_n;
    }
    if (a.threads) {
        if (*a.threads < 0) throw mlbeam::cli::ConfigError("--threads must be >= 0");
        cfg.threads = *a.threads;
    }
    if (!a.geometric.empty()) {
        const bool on = a.geometric == "on";
        cfg.pushover.include_geometric = on;
        cfg.frequency_a.include_geometric = on;
        cfg.frequency_b.include_geometric = on;
    }
    return cfg;
}

CommandOptions options_of(const CommonArgs& a) {
    CommandOptions opt;
    opt.out_path = a.out_path;
    opt.allow_partial = a.allow_partial;
    opt.gnuplot = a.gnuplot;
    return opt;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"statics and small-oscillation dynamics of no-tension (masonry-like) beams"};
    app.require_subcommand(1);

    struct Entry {
        const char* name;
        const char* help;
        const char* default_out;
        int (*run)(const RunConfig&, const CommandOptions&);
    };
    const Entry entries[] = {
        {"case-a-curves", "first-order response curves for the eccentric axial load case",
         "case_a_curves.csv", mlbeam::cli::cmd_case_a_curves},
        {"case-a-stability", "stability curves |N|/N_E vs u/h per eccentricity", "stability.csv",
         mlbeam::cli::cmd_stability},
        {"pushover", "push-over curves: elastic, no-tension, and second-order variants",
         "pushover.csv", mlbeam::cli::cmd_pushover},
        {"collapse-load", "collapse load H_g/H_max vs |N|/N_E", "collapse.csv",
         mlbeam::cli::cmd_collapse},
        {"frequency-a", "fundamental frequency vs eccentricity families", "frequency_a.csv",
         mlbeam::cli::cmd_frequency_a},
        {"frequency-b", "fundamental frequency vs horizontal load families", "frequency_b.csv",
         mlbeam::cli::cmd_frequency_b},
    };

    std::vector<CommonArgs> args(std::size(entries));
    std::vector<CLI::App*> subs;
    for (std::size_t i = 0; i < std::size(entries); ++i) {
        CLI::App* sub = app.add_subcommand(entries[i].name, entries[i].help);
        add_common(sub, args[i], entries[i].default_out);
        subs.push_back(sub);
    }

    CLI11_PARSE(app, argc, argv);

    for (std::size_t i = 0; i < std::size(entries); ++i) {
        if (!subs[i]->parsed()) continue;
        try {
            const RunConfig cfg = resolve_config(args[i]);
            return entries[i].run(cfg, options_of(args[i]));
        } catch (const mlbeam::cli::ConfigError& err) {
            std::cerr << err.what() << "\n";
            return 1;
        } catch (const std::exception& err) {
            std::cerr << entries[i].name << ": " << err.what() << "\n";
            return 1;
        }
    }
    return 1;
}
