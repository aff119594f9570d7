#ifndef MLBEAM_CLOSED_FORM_HPP
#define MLBEAM_CLOSED_FORM_HPP

#include <span>
#include <vector>

#include "mlbeam/beam.hpp"

namespace mlbeam {

// First-order (no geometric coupling) solutions for both load cases.

// Case (a): the curvature is constant along the axis. Returns |chi| >= 0.
// Throws SectionCapacityExceeded for e >= h/2.
double case_a_curvature(const LoadCaseA& lc, const BeamSpec& beam);

// Case (a) tip deflection f_a = -chi L^2 / 2 (signed, <= 0).
double case_a_tip_deflection(const LoadCaseA& lc, const BeamSpec& beam);

// Case (b) deflection and curvature sampled on n+1 uniform stations.
// Elastic cubic for H <= H_min; otherwise log branch on [0, x0] and cubic
// branch on (x0, L]. Throws SectionCapacityExceeded for H >= H_max and
// DomainNearCapacity inside the zeta guard band.
DeflectionField case_b_deflection(const LoadCaseB& lc, const BeamSpec& beam, int n);

// Case (b) closed-form deflection at a single abscissa x in [0, L] (same
// piecewise solution as case_b_deflection).
double case_b_deflection_at(const LoadCaseB& lc, const BeamSpec& beam, double x);

// Analytic slope y'(x) of the case (b) closed-form solution.
double case_b_slope_at(const LoadCaseB& lc, const BeamSpec& beam, double x);

// Case (b) tip deflection (signed, <= 0).
double case_b_tip_deflection(const LoadCaseB& lc, const BeamSpec& beam);

// f_a / L for case (b) as a function of the dimensionless curvatures
// alphabar = alpha L and kbar = k L^2 (elastic value kbar/3 below the
// cracking threshold kbar <= alphabar).
double case_b_tip_deflection_dimensionless(double alphabar, double kbar);

struct PushoverPoint {
    double alphabar;
    double h_over_hmax;
    double fa_abs_over_l;
};

// First-order push-over curves, one family per alphabar value, sampled
// uniformly in H/H_max on [0, t_max]. Monotone increasing in deflection,
// asymptotic to H/H_max = 1. refine_near_capacity appends that many extra
// samples per family, halving the distance to H_max at each step (the
// asymptote is the interesting region of the curve).
std::vector<PushoverPoint> pushover_curve_first_order(std::span<const double> alphabars,
                                                      int samples, double t_max = 0.98,
                                                      int refine_near_capacity = 0);

}  // namespace mlbeam

#endif  // MLBEAM_CLOSED_FORM_HPP
