#include "commands.hpp"

#include <atomic>
#include <cmath>
#include <iostream>
#include <limits>
#include <mutex>
#include <thread>

#include "csv_writer.hpp"
#include "mlbeam/closed_form.hpp"
#include "mlbeam/dynamics.hpp"
#include "mlbeam/second_order.hpp"

namespace mlbeam::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Worker pool over sweep indices; results land in index order regardless of
// scheduling, so output stays deterministic.
template <typename Fn>
void parallel_for(int count, int threads, Fn&& fn) {
    threads = std::min(threads, count);
    if (threads <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::mutex err_mutex;
    std::exception_ptr error;
    auto worker = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

const char* status_str(SolveStatus s) {
    switch (s) {
        case SolveStatus::converged: return "ok";
        case SolveStatus::not_converged: return "not_converged";
        case SolveStatus::capacity_exceeded: return "capacity_exceeded";
    }
    return "unknown";
}

struct Row {
    std::vector<std::string> cells;
    bool ok = true;
};

// Writes the table unless a point failed without --allow-partial; in that
// case nothing is written and the first failure is reported.
int finish(const std::string& name, const RunConfig& cfg, const CommandOptions& opt,
           const std::vector<std::string>& cols, const std::vector<Row>& rows) {
    int failures = 0;
    const Row* first_failed = nullptr;
    for (const Row& r : rows) {
        if (!r.ok) {
            ++failures;
            if (!first_failed) first_failed = &r;
        }
    }
    if (failures > 0 && !opt.allow_partial) {
        std::cerr << name << ": " << failures << " sweep point(s) did not converge (first: ";
        for (std::size_t i = 0; i < first_failed->cells.size(); ++i)
            std::cerr << (i ? "," : "") << first_failed->cells[i];
        std::cerr << "); rerun with --allow-partial to emit them\n";
        return 2;
    }
    CsvWriter w(opt.out_path);
    w.comment("mlbeam " + name);
    w.comment("config: " + cfg.to_json().dump());
    w.header(cols);
    for (const Row& r : rows) w.row(r.cells);
    return 0;
}

void write_gnuplot(const CommandOptions& opt, const std::string& xlabel, const std::string& ylabel,
                   int xcol, int ycol) {
    if (!opt.gnuplot) return;
    std::ofstream gp(opt.out_path + ".gp", std::ios::binary);
    if (!gp) throw std::runtime_error("cannot open gnuplot script next to '" + opt.out_path + "'");
    gp << "set datafile separator comma\n"
       << "set key autotitle columnhead\n"
       << "set xlabel '" << xlabel << "'\n"
       << "set ylabel '" << ylabel << "'\n"
       << "plot '" << opt.out_path << "' using " << xcol << ":" << ycol << " with points pt 7 ps 0.4\n";
}

std::string with_suffix(const std::string& path, const std::string& suffix) {
    const auto dot = path.rfind('.');
    const auto slash = path.find_last_of('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path + suffix;
    return path.substr(0, dot) + suffix + path.substr(dot);
}

}  // namespace

int cmd_case_a_curves(const RunConfig& cfg, const CommandOptions& opt) {
    const BeamSpec beam = cfg.beam_spec();
    const CaseACurvesConfig& cc = cfg.case_a_curves;
    const int per = cc.samples + 1;

    // family sweep over |N|/gamma at fixed eccentricity
    std::vector<Row> load_rows(cc.e_over_h.size() * per);
    parallel_for(int(load_rows.size()), cfg.effective_threads(), [&](int idx) {
        const std::size_t f = idx / per;
        const int j = idx % per;
        const double eh = cc.e_over_h[f];
        const double ng = cc.n_over_gamma_max * j / cc.samples;
        double fa_over_l = 0.0;
        if (ng > 0.0 && eh > 0.0) {
            const LoadCaseA lc(-ng * beam.gamma, eh * beam.h);
            fa_over_l = std::fabs(case_a_tip_deflection(lc, beam)) / beam.L;
        }
        load_rows[idx].cells = {g17(eh), g17(ng), g17(fa_over_l), "ok"};
    });
    const std::vector<std::string> load_cols = {"e_over_h", "n_over_gamma", "fa_abs_over_l", "status"};
    const int rc1 = finish("case-a-curves", cfg, opt, load_cols, load_rows);
    if (rc1 != 0) return rc1;
    write_gnuplot(opt, "|N|/gamma", "|f_a|/L", 2, 3);

    // family sweep over eccentricity at fixed |N|/gamma
    std::vector<Row> ecc_rows(cc.n_over_gamma.size() * per);
    parallel_for(int(ecc_rows.size()), cfg.effective_threads(), [&](int idx) {
        const std::size_t f = idx / per;
        const int j = idx % per;
        const double ng = cc.n_over_gamma[f];
        const double e = cc.e_over_h_max * beam.h * j / cc.samples;
        double fa = 0.0;
        if (e > 0.0) {
            const LoadCaseA lc(-ng * beam.gamma, e);
            fa = std::fabs(case_a_tip_deflection(lc, beam));
        }
        ecc_rows[idx].cells = {g17(ng), g17(e), g17(fa), "ok"};
    });
    CommandOptions ecc_opt = opt;
    ecc_opt.out_path = with_suffix(opt.out_path, "_vs_e");
    const std::vector<std::string> ecc_cols = {"n_over_gamma", "e", "fa_abs", "status"};
    const int rc2 = finish("case-a-curves", cfg, ecc_opt, ecc_cols, ecc_rows);
    if (rc2 != 0) return rc2;
    write_gnuplot(ecc_opt, "e [m]", "|f_a| [m]", 2, 3);
    return 0;
}

int cmd_stability(const RunConfig& cfg, const CommandOptions& opt) {
    const BeamSpec beam = cfg.beam_spec();
    const SolverSettings st = cfg.solver_settings();
    const StabilityConfig& sc = cfg.stability;
    const std::size_t families = sc.e_over_h.size();

    std::vector<double> n_crit(families, 0.0);
    parallel_for(int(families), cfg.effective_threads(), [&](int f) {
        const CriticalLoadResult res =
            critical_axial_load(sc.e_over_h[f] * beam.h, beam, st, sc.bracket_tol);
        n_crit[f] = -res.N_crit;  // magnitude
    });

    const int per = sc.samples + 1;  // j = 0 is the zero-load end of the curve
    std::vector<Row> rows(families * per);
    parallel_for(int(rows.size()), cfg.effective_threads(), [&](int idx) {
        const std::size_t f = idx / per;
        const int j = idx % per;
        const double eh = sc.e_over_h[f];
        if (j == 0) {
            rows[idx].cells = {g17(eh), g17(0.5 - eh), g17(0.0), "ok"};
            return;
        }
        const double Nmag = n_crit[f] * j / sc.samples;
        const SolverReport rep = solve_case_a(LoadCaseA(-Nmag, eh * beam.h), beam, st);
        const bool ok = rep.status == SolveStatus::converged;
        rows[idx].ok = ok;
        rows[idx].cells = {g17(eh), g17(ok ? *rep.u / beam.h : kNaN), g17(Nmag / beam.N_E),
                           status_str(rep.status)};
    });
    const std::vector<std::string> cols = {"e_over_h", "u_over_h", "n_over_ne", "status"};
    const int rc = finish("case-a-stability", cfg, opt, cols, rows);
    if (rc == 0) write_gnuplot(opt, "u/h", "|N|/N_E", 2, 3);
    return rc;
}

int cmd_pushover(const RunConfig& cfg, const CommandOptions& opt) {
    const BeamSpec beam = cfg.beam_spec();
    const SolverSettings st = cfg.solver_settings();
    const PushoverConfig& pc = cfg.pushover;
    const int per = pc.samples + 1 + pc.refine_near_capacity;

    const std::vector<PushoverPoint> masonry = pushover_curve_first_order(
        pc.alphabar, pc.samples, pc.h_over_hmax_max, pc.refine_near_capacity);

    std::vector<Row> rows(pc.alphabar.size() * per);
    parallel_for(int(rows.size()), cfg.effective_threads(), [&](int idx) {
        const PushoverPoint& pt = masonry[idx];
        const double ab = pt.alphabar;
        const double t = pt.h_over_hmax;
        const double fa_el = ab * t;  // elastic cantilever, kbar / 3
        Row& row = rows[idx];
        row.cells = {g17(ab), g17(t), g17(fa_el), g17(pt.fa_abs_over_l)};
        if (pc.include_geometric) {
            const double Nmag = 6.0 * beam.EJ() * ab / (beam.h * beam.L);
            const double H = t * (Nmag * beam.h / (2.0 * beam.L));
            const SolverReport rep = solve_case_b(LoadCaseB(-Nmag, H), beam, st);
            const bool ok = rep.status == SolveStatus::converged;
            row.ok = ok;
            row.cells.push_back(g17(ok ? std::fabs(rep.f_a) / beam.L : kNaN));
            row.cells.push_back(status_str(rep.status));
        } else {
            row.cells.push_back("ok");
        }
    });
    std::vector<std::string> cols = {"alphabar", "h_over_hmax", "fa_over_l_elastic", "fa_over_l_masonry"};
    if (pc.include_geometric) cols.push_back("fa_over_l_geometric");
    cols.push_back("status");
    const int rc = finish("pushover", cfg, opt, cols, rows);
    if (rc == 0) write_gnuplot(opt, "|f_a|/L", "H/H_max", pc.include_geometric ? 5 : 4, 2);
    return rc;
}

int cmd_collapse(const RunConfig& cfg, const CommandOptions& opt) {
    const BeamSpec beam = cfg.beam_spec();
    const SolverSettings st = cfg.solver_settings();
    const CollapseConfig& cc = cfg.collapse;

    std::vector<Row> rows(cc.n_over_ne.size());
    parallel_for(int(rows.size()), cfg.effective_threads(), [&](int i) {
        const double r = cc.n_over_ne[i];
        const CollapseLoadResult res =
            collapse_horizontal_load(-r * beam.N_E, beam, st, cc.bracket_tol);
        rows[i].cells = {g17(r), g17(res.hg_over_hmax), "ok"};
    });
    const std::vector<std::string> cols = {"n_over_ne", "hg_over_hmax", "status"};
    const int rc = finish("collapse-load", cfg, opt, cols, rows);
    if (rc == 0) write_gnuplot(opt, "|N|/N_E", "H_g/H_max", 1, 2);
    return rc;
}

namespace {

int frequency_command(const char* name, const RunConfig& cfg, const CommandOptions& opt, bool case_a) {
    const BeamSpec beam = cfg.beam_spec();
    const SolverSettings st = cfg.solver_settings();
    const std::vector<double>& families = case_a ? cfg.frequency_a.n_over_ne : cfg.frequency_b.n_over_ne;
    const int samples = case_a ? cfg.frequency_a.samples : cfg.frequency_b.samples;
    const double sweep_max = case_a ? cfg.frequency_a.e_over_h_max : cfg.frequency_b.h_over_hmax_max;
    const bool geometric = case_a ? cfg.frequency_a.include_geometric : cfg.frequency_b.include_geometric;
    const int per = samples + 1;

    std::vector<Row> rows(families.size() * per);
    parallel_for(int(rows.size()), cfg.effective_threads(), [&](int idx) {
        const std::size_t f = idx / per;
        const int j = idx % per;
        const double r = families[f];
        const double N = -r * beam.N_E;
        const double sweep = sweep_max * j / samples;
        Row& row = rows[idx];
        std::string status = "ok";
        double ratio = kNaN;
        double stiffness_ratio = kNaN;
        try {
            const FrequencyResult fr =
                case_a ? frequency_case_a(LoadCaseA(N, sweep * beam.h), beam, st, geometric)
                       : frequency_case_b(LoadCaseB(N, sweep * (-N) * beam.h / (2.0 * beam.L)), beam,
                                          st, geometric);
            ratio = fr.ratio;
            stiffness_ratio = fr.stiffness_ratio;
        } catch (const BeyondCollapse&) {
            status = "not_converged";
            row.ok = false;
        } catch (const SectionCapacityExceeded&) {
            status = "capacity_exceeded";
            row.ok = false;
        }
        row.cells = {g17(r), g17(sweep), g17(ratio), g17(stiffness_ratio), status};
    });
    std::vector<std::string> cols = {"n_over_ne", case_a ? "e_over_h" : "h_over_hmax",
                                     "omega_over_omega_el", "stiffness_ratio", "status"};
    const int rc = finish(name, cfg, opt, cols, rows);
    if (rc == 0) write_gnuplot(opt, case_a ? "e/h" : "H/H_max", "omega/omega_el", 2, 3);
    return rc;
}

}  // namespace

int cmd_frequency_a(const RunConfig& cfg, const CommandOptions& opt) {
    return frequency_command("frequency-a", cfg, opt, true);
}

int cmd_frequency_b(const RunConfig& cfg, const CommandOptions& opt) {
    return frequency_command("frequency-b", cfg, opt, false);
}

}  // namespace mlbeam::cli
