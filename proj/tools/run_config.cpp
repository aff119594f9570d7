#include "run_config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

namespace mlbeam::cli {

namespace {

using nlohmann::json;

// Line of the first occurrence of "key" in the raw config text, for
// error messages. 1-based; 0 when not found.
int line_of_key(const std::string& raw, const std::string& key) {
    const std::string needle = "\"" + key + "\"";
    const auto pos = raw.find(needle);
    if (pos == std::string::npos) return 0;
    return 1 + int(std::count(raw.begin(), raw.begin() + long(pos), '\n'));
}

[[noreturn]] void fail(const std::string& raw, const std::string& key, const std::string& what) {
    std::ostringstream os;
    os << "config";
    if (const int line = line_of_key(raw, key)) os << ":" << line;
    os << ": " << what;
    throw ConfigError(os.str());
}

void check_keys(const json& obj, const std::string& raw, const std::string& section,
                const std::set<std::string>& known) {
    for (const auto& item : obj.items()) {
        if (!known.count(item.key()))
            fail(raw, item.key(), "unknown key '" + item.key() + "' in " + section);
    }
}

double get_num(const json& obj, const std::string& raw, const char* key, double fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number()) fail(raw, key, std::string("'") + key + "' must be a number");
    return obj[key].get<double>();
}

int get_int(const json& obj, const std::string& raw, const char* key, int fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number_integer()) fail(raw, key, std::string("'") + key + "' must be an integer");
    return obj[key].get<int>();
}

bool get_bool(const json& obj, const std::string& raw, const char* key, bool fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_boolean()) fail(raw, key, std::string("'") + key + "' must be a boolean");
    return obj[key].get<bool>();
}

std::vector<double> get_list(const json& obj, const std::string& raw, const char* key,
                             std::vector<double> fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_array()) fail(raw, key, std::string("'") + key + "' must be an array of numbers");
    std::vector<double> out;
    for (const auto& v : obj[key]) {
        if (!v.is_number()) fail(raw, key, std::string("'") + key + "' must contain only numbers");
        out.push_back(v.get<double>());
    }
    if (out.empty()) fail(raw, key, std::string("'") + key + "' must not be empty");
    return out;
}

void require_fraction_list(const std::vector<double>& v, const std::string& raw, const char* key,
                           double lo, double hi, bool lo_open) {
    for (double x : v) {
        const bool ok = (lo_open ? x > lo : x >= lo) && x < hi;
        if (!ok) {
            std::ostringstream os;
            os << "'" << key << "' values must lie in " << (lo_open ? "(" : "[") << lo << ", " << hi << ")";
            fail(raw, key, os.str());
        }
    }
}

void require_positive(double v, const std::string& raw, const char* key) {
    if (!(v > 0.0)) fail(raw, key, std::string("'") + key + "' must be positive");
}

}  // namespace

RunConfig RunConfig::defaults() {
    RunConfig c;
    // Reference configuration: slender rectangular pier, alphabar = 9e-3
    // reachable at moderate |N|/N_E (see README).
    c.beam = {0.25, 0.25, 2.5, 3.0e9, 1800.0};
    c.solver = {2000, 0.001, 30};
    c.case_a_curves = {{0.0, 0.125, 1.0 / 6.0, 0.2, 0.25, 1.0 / 3.0},
                       0.5,
                       {0.05, 0.1, 0.2, 0.3},
                       0.45,
                       50};
    c.stability = {{0.25, 0.2, 1.0 / 6.0, 0.125}, 40, 1e-3};
    c.pushover = {{9e-3}, 50, 0.98, 0, true};
    c.collapse = {{0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4}, 1e-3};
    c.frequency_a = {{0.1, 0.2, 0.3}, 0.32, 60, true};
    c.frequency_b = {{0.2, 0.3, 0.4}, 0.95, 60, true};
    c.threads = 0;
    return c;
}

RunConfig RunConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string raw = buf.str();

    json root;
    try {
        root = json::parse(raw);
    } catch (const json::parse_error& err) {
        throw ConfigError(std::string("config: ") + err.what());
    }
    if (!root.is_object()) throw ConfigError("config: top level must be a JSON object");

    RunConfig c = defaults();
    check_keys(root, raw, "top level",
               {"beam", "solver", "case_a_curves", "stability", "pushover", "collapse",
                "frequency_a", "frequency_b", "threads"});

    if (root.contains("beam")) {
        const json& b = root["beam"];
        if (!b.is_object()) throw ConfigError("config: 'beam' must be an object");
        check_keys(b, raw, "'beam'", {"b", "h", "L", "E", "rho"});
        c.beam.b = get_num(b, raw, "b", c.beam.b);
        c.beam.h = get_num(b, raw, "h", c.beam.h);
        c.beam.L = get_num(b, raw, "L", c.beam.L);
        c.beam.E = get_num(b, raw, "E", c.beam.E);
        c.beam.rho = get_num(b, raw, "rho", c.beam.rho);
        require_positive(c.beam.b, raw, "b");
        require_positive(c.beam.h, raw, "h");
        require_positive(c.beam.L, raw, "L");
        require_positive(c.beam.E, raw, "E");
        require_positive(c.beam.rho, raw, "rho");
    }
    if (root.contains("solver")) {
        const json& s = root["solver"];
        if (!s.is_object()) throw ConfigError("config: 'solver' must be an object");
        check_keys(s, raw, "'solver'", {"grid_n", "epsilon", "max_iter"});
        c.solver.grid_n = get_int(s, raw, "grid_n", c.solver.grid_n);
        c.solver.epsilon = get_num(s, raw, "epsilon", c.solver.epsilon);
        c.solver.max_iter = get_int(s, raw, "max_iter", c.solver.max_iter);
        if (c.solver.grid_n < 100) fail(raw, "grid_n", "'grid_n' must be >= 100");
        require_positive(c.solver.epsilon, raw, "epsilon");
        if (c.solver.max_iter < 1) fail(raw, "max_iter", "'max_iter' must be >= 1");
    }
    if (root.contains("case_a_curves")) {
        const json& s = root["case_a_curves"];
        check_keys(s, raw, "'case_a_curves'",
                   {"e_over_h", "n_over_gamma_max", "n_over_gamma", "e_over_h_max", "samples"});
        c.case_a_curves.e_over_h = get_list(s, raw, "e_over_h", c.case_a_curves.e_over_h);
        c.case_a_curves.n_over_gamma_max =
            get_num(s, raw, "n_over_gamma_max", c.case_a_curves.n_over_gamma_max);
        c.case_a_curves.n_over_gamma = get_list(s, raw, "n_over_gamma", c.case_a_curves.n_over_gamma);
        c.case_a_curves.e_over_h_max = get_num(s, raw, "e_over_h_max", c.case_a_curves.e_over_h_max);
        c.case_a_curves.samples = get_int(s, raw, "samples", c.case_a_curves.samples);
        require_fraction_list(c.case_a_curves.e_over_h, raw, "e_over_h", 0.0, 0.5, false);
        require_positive(c.case_a_curves.n_over_gamma_max, raw, "n_over_gamma_max");
        require_fraction_list(c.case_a_curves.n_over_gamma, raw, "n_over_gamma", 0.0, 1e30, true);
        if (!(c.case_a_curves.e_over_h_max > 0.0 && c.case_a_curves.e_over_h_max < 0.5))
            fail(raw, "e_over_h_max", "'e_over_h_max' must lie in (0, 0.5)");
        if (c.case_a_curves.samples < 1) fail(raw, "samples", "'samples' must be >= 1");
    }
    if (root.contains("stability")) {
        const json& s = root["stability"];
        check_keys(s, raw, "'stability'", {"e_over_h", "samples", "bracket_tol"});
        c.stability.e_over_h = get_list(s, raw, "e_over_h", c.stability.e_over_h);
        c.stability.samples = get_int(s, raw, "samples", c.stability.samples);
        c.stability.bracket_tol = get_num(s, raw, "bracket_tol", c.stability.bracket_tol);
        require_fraction_list(c.stability.e_over_h, raw, "e_over_h", 0.0, 0.5, true);
        if (c.stability.samples < 1) fail(raw, "samples", "'samples' must be >= 1");
        if (!(c.stability.bracket_tol > 0.0 && c.stability.bracket_tol < 1.0))
            fail(raw, "bracket_tol", "'bracket_tol' must lie in (0, 1)");
    }
    if (root.contains("pushover")) {
        const json& s = root["pushover"];
        check_keys(s, raw, "'pushover'",
                   {"alphabar", "samples", "h_over_hmax_max", "refine_near_capacity", "include_geometric"});
        c.pushover.alphabar = get_list(s, raw, "alphabar", c.pushover.alphabar);
        c.pushover.samples = get_int(s, raw, "samples", c.pushover.samples);
        c.pushover.h_over_hmax_max = get_num(s, raw, "h_over_hmax_max", c.pushover.h_over_hmax_max);
        c.pushover.refine_near_capacity =
            get_int(s, raw, "refine_near_capacity", c.pushover.refine_near_capacity);
        c.pushover.include_geometric = get_bool(s, raw, "include_geometric", c.pushover.include_geometric);
        require_fraction_list(c.pushover.alphabar, raw, "alphabar", 0.0, 1e30, true);
        if (c.pushover.samples < 1) fail(raw, "samples", "'samples' must be >= 1");
        if (!(c.pushover.h_over_hmax_max > 0.0 && c.pushover.h_over_hmax_max < 1.0))
            fail(raw, "h_over_hmax_max", "'h_over_hmax_max' must lie in (0, 1)");
        if (c.pushover.refine_near_capacity < 0 || c.pushover.refine_near_capacity > 24)
            fail(raw, "refine_near_capacity", "'refine_near_capacity' must lie in [0, 24]");
        // the refined samples must stay clear of the capacity guard band
        const double closest =
            (1.0 - c.pushover.h_over_hmax_max) * std::pow(0.5, c.pushover.refine_near_capacity);
        if (closest <= 1e-9)
            fail(raw, "refine_near_capacity",
                 "'refine_near_capacity' pushes samples inside the capacity guard band; "
                 "reduce it or lower 'h_over_hmax_max'");
    }
    if (root.contains("collapse")) {
        const json& s = root["collapse"];
        check_keys(s, raw, "'collapse'", {"n_over_ne", "bracket_tol"});
        c.collapse.n_over_ne = get_list(s, raw, "n_over_ne", c.collapse.n_over_ne);
        c.collapse.bracket_tol = get_num(s, raw, "bracket_tol", c.collapse.bracket_tol);
        require_fraction_list(c.collapse.n_over_ne, raw, "n_over_ne", 0.0, 1.0, true);
        if (!(c.collapse.bracket_tol > 0.0 && c.collapse.bracket_tol < 1.0))
            fail(raw, "bracket_tol", "'bracket_tol' must lie in (0, 1)");
    }
    if (root.contains("frequency_a")) {
        const json& s = root["frequency_a"];
        check_keys(s, raw, "'frequency_a'", {"n_over_ne", "e_over_h_max", "samples", "include_geometric"});
        c.frequency_a.n_over_ne = get_list(s, raw, "n_over_ne", c.frequency_a.n_over_ne);
        c.frequency_a.e_over_h_max = get_num(s, raw, "e_over_h_max", c.frequency_a.e_over_h_max);
        c.frequency_a.samples = get_int(s, raw, "samples", c.frequency_a.samples);
        c.frequency_a.include_geometric =
            get_bool(s, raw, "include_geometric", c.frequency_a.include_geometric);
        require_fraction_list(c.frequency_a.n_over_ne, raw, "n_over_ne", 0.0, 1.0, true);
        if (!(c.frequency_a.e_over_h_max > 0.0 && c.frequency_a.e_over_h_max < 0.5))
            fail(raw, "e_over_h_max", "'e_over_h_max' must lie in (0, 0.5)");
        if (c.frequency_a.samples < 1) fail(raw, "samples", "'samples' must be >= 1");
    }
    if (root.contains("frequency_b")) {
        const json& s = root["frequency_b"];
        check_keys(s, raw, "'frequency_b'", {"n_over_ne", "h_over_hmax_max", "samples", "include_geometric"});
        c.frequency_b.n_over_ne = get_list(s, raw, "n_over_ne", c.frequency_b.n_over_ne);
        c.frequency_b.h_over_hmax_max = get_num(s, raw, "h_over_hmax_max", c.frequency_b.h_over_hmax_max);
        c.frequency_b.samples = get_int(s, raw, "samples", c.frequency_b.samples);
        c.frequency_b.include_geometric =
            get_bool(s, raw, "include_geometric", c.frequency_b.include_geometric);
        require_fraction_list(c.frequency_b.n_over_ne, raw, "n_over_ne", 0.0, 1.0, true);
        if (!(c.frequency_b.h_over_hmax_max > 0.0 && c.frequency_b.h_over_hmax_max < 1.0))
            fail(raw, "h_over_hmax_max", "'h_over_hmax_max' must lie in (0, 1)");
        if (c.frequency_b.samples < 1) fail(raw, "samples", "'samples' must be >= 1");
    }
    c.threads = get_int(root, raw, "threads", c.threads);
    if (c.threads < 0) fail(raw, "threads", "'threads' must be >= 0");
    return c;
}

json RunConfig::to_json() const {
    json j;
    j["beam"] = {{"b", beam.b}, {"h", beam.h}, {"L", beam.L}, {"E", beam.E}, {"rho", beam.rho}};
    j["solver"] = {{"grid_n", solver.grid_n}, {"epsilon", solver.epsilon}, {"max_iter", solver.max_iter}};
    j["case_a_curves"] = {{"e_over_h", case_a_curves.e_over_h},
                          {"n_over_gamma_max", case_a_curves.n_over_gamma_max},
                          {"n_over_gamma", case_a_curves.n_over_gamma},
                          {"e_over_h_max", case_a_curves.e_over_h_max},
                          {"samples", case_a_curves.samples}};
    j["stability"] = {{"e_over_h", stability.e_over_h},
                      {"samples", stability.samples},
                      {"bracket_tol", stability.bracket_tol}};
    j["pushover"] = {{"alphabar", pushover.alphabar},
                     {"samples", pushover.samples},
                     {"h_over_hmax_max", pushover.h_over_hmax_max},
                     {"refine_near_capacity", pushover.refine_near_capacity},
                     {"include_geometric", pushover.include_geometric}};
    j["collapse"] = {{"n_over_ne", collapse.n_over_ne}, {"bracket_tol", collapse.bracket_tol}};
    j["frequency_a"] = {{"n_over_ne", frequency_a.n_over_ne},
                        {"e_over_h_max", frequency_a.e_over_h_max},
                        {"samples", frequency_a.samples},
                        {"include_geometric", frequency_a.include_geometric}};
    j["frequency_b"] = {{"n_over_ne", frequency_b.n_over_ne},
                        {"h_over_hmax_max", frequency_b.h_over_hmax_max},
                        {"samples", frequency_b.samples},
                        {"include_geometric", frequency_b.include_geometric}};
    // threads intentionally omitted: it cannot affect the numbers
    return j;
}

BeamSpec RunConfig::beam_spec() const { return BeamSpec(beam.b, beam.h, beam.L, beam.E, beam.rho); }

SolverSettings RunConfig::solver_settings() const {
    SolverSettings st;
    st.n = solver.grid_n;
    st.epsilon = solver.epsilon;
    st.max_iter = solver.max_iter;
    return st;
}

int RunConfig::effective_threads() const {
    if (threads > 0) return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : int(hw);
}

}  // namespace mlbeam::cli
