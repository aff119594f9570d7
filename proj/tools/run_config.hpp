#ifndef MLBEAM_TOOLS_RUN_CONFIG_HPP
#define MLBEAM_TOOLS_RUN_CONFIG_HPP

#include <json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "mlbeam/beam.hpp"
#include "mlbeam/second_order.hpp"

namespace mlbeam::cli {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct BeamConfig {
    double b, h, L, E, rho;
};

struct SolverConfig {
    int grid_n;
    double epsilon;  // percent
    int max_iter;
};

struct CaseACurvesConfig {
    std::vector<double> e_over_h;      // families of the load sweep
    double n_over_gamma_max;
    std::vector<double> n_over_gamma;  // families of the eccentricity sweep
    double e_over_h_max;
    int samples;
};

struct StabilityConfig {
    std::vector<double> e_over_h;
    int samples;
    double bracket_tol;
};

struct PushoverConfig {
    std::vector<double> alphabar;
    int samples;
    double h_over_hmax_max;
    int refine_near_capacity;  // extra samples halving the gap to H_max
    bool include_geometric;
};

struct CollapseConfig {
    std::vector<double> n_over_ne;
    double bracket_tol;
};

struct FrequencyAConfig {
    std::vector<double> n_over_ne;
    double e_over_h_max;
    int samples;
    bool include_geometric;
};

struct FrequencyBConfig {
    std::vector<double> n_over_ne;
    double h_over_hmax_max;
    int samples;
    bool include_geometric;
};

struct RunConfig {
    BeamConfig beam;
    SolverConfig solver;
    CaseACurvesConfig case_a_curves;
    StabilityConfig stability;
    PushoverConfig pushover;
    CollapseConfig collapse;
    FrequencyAConfig frequency_a;
    FrequencyBConfig frequency_b;
    int threads;  // 0 = hardware concurrency

    // Built-in reference configuration (see README).
    static RunConfig defaults();

    // defaults() overridden by the JSON file at path; unknown keys and
    // out-of-range values are rejected with the offending line.
    static RunConfig load(const std::string& path);

    nlohmann::json to_json() const;  // fully resolved, for CSV headers

    BeamSpec beam_spec() const;
    SolverSettings solver_settings() const;

    int effective_threads() const;
};

}  // namespace mlbeam::cli

#endif  // MLBEAM_TOOLS_RUN_CONFIG_HPP
