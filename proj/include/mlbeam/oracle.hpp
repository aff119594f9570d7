#ifndef MLBEAM_ORACLE_HPP
#define MLBEAM_ORACLE_HPP

#include <vector>

#include "mlbeam/beam.hpp"

namespace mlbeam::oracle {

// Verification backends kept deliberately independent of the production
// solvers: a damped successive-substitution relaxation on a fine grid with
// its own curvature evaluation and integration, and the classical elastic
// secant solution.

struct OracleSettings {
    int fine_n = 20000;    // grid intervals (10x the production default)
    double tol = 1e-10;    // fixed-point increment tolerance, relative
    double damping = 0.5;  // y <- (1 - damping) y + damping F(y)
    int max_iter = 200000;
};

struct OracleResult {
    std::vector<double> x;
    std::vector<double> y;
    bool converged = false;
    bool capacity_exceeded = false;
    int iterations = 0;
    double residual_norm = 0.0;  // final |F(y) - y|_max over the amplitude
    double f_a = 0.0;            // tip deflection y(L), signed
};

OracleResult relax_case(const LoadCaseA& lc, const BeamSpec& beam, const OracleSettings& settings = {});
OracleResult relax_case(const LoadCaseB& lc, const BeamSpec& beam, const OracleSettings& settings = {});

// Elastic P-delta tip deflection |f_a| = e (sec(lambda L) - 1) with
// lambda = sqrt(|N|/EJ). Throws BeyondCriticalLoad for lambda L >= pi/2.
double secant_tip_deflection(double N, double e, const BeamSpec& beam);

}  // namespace mlbeam::oracle

#endif  // MLBEAM_ORACLE_HPP
