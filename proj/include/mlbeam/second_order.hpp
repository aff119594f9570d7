#ifndef MLBEAM_SECOND_ORDER_HPP
#define MLBEAM_SECOND_ORDER_HPP

#include <optional>

#include "mlbeam/beam.hpp"

namespace mlbeam {

// Constitutive branch selection. Law::elastic pins the linear branch for
// validation against classical P-delta solutions.
enum class Law { masonry, elastic };

struct SolverSettings {
    int n = 2000;            // grid intervals on [0, L]
    double epsilon = 0.001;  // relative residual threshold, in percent
    int max_iter = 30;       // iteration cap
    Law law = Law::masonry;
};

enum class SolveStatus { converged, not_converged, capacity_exceeded };

struct SolverReport {
    SolveStatus status = SolveStatus::not_converged;
    int iterations = 0;
    double residual = 0.0;  // final residual, percent (same units as epsilon)
    DeflectionField field;  // last iterate; chi consistent with y when converged
    double f_a = 0.0;       // tip deflection y(L), signed (<= 0)
    std::optional<double> e_max;  // case (a): e + |y(L)|
    std::optional<double> u;      // case (a): h/2 - e_max
    std::optional<double> x0;     // case (b): cracked/elastic boundary abscissa
};

// Fixed-point iteration coupling the no-tension law with the P-delta moment
// N (y(L) - y(x)). Starts from y = 0, integrates y'' = -chi by cumulative
// trapezoid, stops when the max relative change falls under epsilon.
SolverReport solve_case_a(const LoadCaseA& lc, const BeamSpec& beam,
                          const SolverSettings& settings = {});
SolverReport solve_case_b(const LoadCaseB& lc, const BeamSpec& beam,
                          const SolverSettings& settings = {});

struct CriticalLoadResult {
    double N_crit;      // largest axial force (negative) with a converged solve
    double n_over_ne;   // |N_crit| / N_E
    double u_over_h;    // from the last converged report
    SolverReport report;
};

// Bisects |N| in (0, N_E] between converged and non-converged outcomes of
// solve_case_a; bracket width below bracket_tol * N_E on return.
CriticalLoadResult critical_axial_load(double e, const BeamSpec& beam,
                                       const SolverSettings& settings = {},
                                       double bracket_tol = 1e-3);

struct CollapseLoadResult {
    double H_g;           // largest horizontal load with a converged solve
    double hg_over_hmax;  // H_g / H_max
    SolverReport report;
};

// Bisects H in [0, H_max) between converged and non-converged outcomes of
// solve_case_b; bracket width below bracket_tol * H_max on return.
CollapseLoadResult collapse_horizontal_load(double N, const BeamSpec& beam,
                                            const SolverSettings& settings = {},
                                            double bracket_tol = 1e-3);

}  // namespace mlbeam

#endif  // MLBEAM_SECOND_ORDER_HPP
