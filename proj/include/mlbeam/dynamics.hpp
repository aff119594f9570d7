#ifndef MLBEAM_DYNAMICS_HPP
#define MLBEAM_DYNAMICS_HPP

#include "mlbeam/beam.hpp"
#include "mlbeam/second_order.hpp"

namespace mlbeam {

// Fundamental frequency of the simply supported beam of length 2L that the
// cantilever solutions map onto.
struct FrequencyResult {
    double omega2;            // squared fundamental frequency [1/s^2], clamped at 0
    double omega_el2;         // c^2 pi^4 / (2L)^4
    double stiffness_omega2;  // modal stiffness term alone (axial term excluded)
    double ratio;             // sqrt(omega2 / omega_el2)
    double stiffness_ratio;   // sqrt(stiffness_omega2 / omega_el2)
    bool negative_clamped = false;  // axial term exceeded the stiffness term
};

// Linear-elastic reference: omega2 = omega_el2 (1 - |N|/N_E).
// Throws BeyondCriticalLoad for |N| >= N_E. N <= 0.
FrequencyResult frequency_elastic(double N, const BeamSpec& beam);

// Masonry-like beam under case (a) loading. With include_geometric the
// curvature comes from the converged second-order solve (throws
// BeyondCollapse if that solve fails); without it the constant first-order
// curvature is used and the stiffness term depends on e/h only.
FrequencyResult frequency_case_a(const LoadCaseA& lc, const BeamSpec& beam,
                                 const SolverSettings& settings = {},
                                 bool include_geometric = true, int quad_n = 4000);

// Masonry-like beam under case (b) loading; the quadrature splits at the
// cracked/elastic boundary x0.
FrequencyResult frequency_case_b(const LoadCaseB& lc, const BeamSpec& beam,
                                 const SolverSettings& settings = {},
                                 bool include_geometric = true, int quad_n = 4000);

}  // namespace mlbeam

#endif  // MLBEAM_DYNAMICS_HPP
