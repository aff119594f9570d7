#ifndef MLBEAM_CONSTITUTIVE_HPP
#define MLBEAM_CONSTITUTIVE_HPP

#include "mlbeam/beam.hpp"

namespace mlbeam {

// Moment-curvature law of the rectangular section with zero tensile and
// infinite compressive strength:
//   M = EJ chi                                   for |chi| <= alpha
//   M = EJ alpha sign(chi) (3 - 2 sqrt(alpha/|chi|))  otherwise
// Odd, strictly increasing, |M| < M_max for all finite chi.
double moment_of_curvature(double chi, const AxialState& s, const BeamSpec& beam);

// Inverse of moment_of_curvature. Throws SectionCapacityExceeded for
// |M| >= M_max (the section collapses before carrying that moment).
double curvature_of_moment(double M, const AxialState& s, const BeamSpec& beam);

// dM/dchi: EJ on the elastic branch, EJ (alpha/|chi|)^(3/2) on the cracked
// branch. Continuous at |chi| = alpha, positive, non-increasing in |chi|.
double tangent_stiffness(double chi, const AxialState& s, const BeamSpec& beam);

}  // namespace mlbeam

#endif  // MLBEAM_CONSTITUTIVE_HPP
