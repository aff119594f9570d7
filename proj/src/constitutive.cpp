#include "mlbeam/constitutive.hpp"

#include <cmath>

namespace mlbeam {

namespace {

void validate(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw std::invalid_argument(std::string("BeamSpec: ") + name + " must be positive and finite");
}

}  // namespace

BeamSpec::BeamSpec(double b, double h, double L, double E, double rho)
    : b(b), h(h), L(L), E(E), rho(rho) {
    validate(b, "b");
    validate(h, "h");
    validate(L, "L");
    validate(E, "E");
    validate(rho, "rho");
    J = b * h * h * h / 12.0;
    gamma = 3.0 * E * J / (L * h);
    const double pi = M_PI;
    N_E = pi * pi * E * J / (4.0 * L * L);
    c2 = E * J / (rho * b * h);
}

AxialState::AxialState(double N, const BeamSpec& beam) : N(N) {
    if (!(N < 0.0) || !std::isfinite(N))
        throw std::invalid_argument("AxialState: axial force N must be strictly negative (compression)");
    alpha = -2.0 * N / (beam.E * beam.b * beam.h * beam.h);
    M_el = alpha * beam.E * beam.J;
    M_max = 3.0 * M_el;
}

LoadCaseA::LoadCaseA(double N, double e) : N(N), e(e) {
    if (!(N < 0.0) || !std::isfinite(N))
        throw std::invalid_argument("LoadCaseA: axial force N must be strictly negative");
    if (!(e >= 0.0) || !std::isfinite(e))
        throw std::invalid_argument("LoadCaseA: eccentricity e must be nonnegative");
}

LoadCaseB::LoadCaseB(double N, double H) : N(N), H(H) {
    if (!(N < 0.0) || !std::isfinite(N))
        throw std::invalid_argument("LoadCaseB: axial force N must be strictly negative");
    if (!(H >= 0.0) || !std::isfinite(H))
        throw std::invalid_argument("LoadCaseB: horizontal force H must be nonnegative");
}

CaseBDerived case_b_derived(const LoadCaseB& lc, const BeamSpec& beam) {
    const AxialState s(lc.N, beam);
    CaseBDerived d;
    d.H_max = -lc.N * beam.h / (2.0 * beam.L);
    d.H_min = -lc.N * beam.h / (6.0 * beam.L);
    d.k = lc.H / beam.EJ();
    d.kbar = d.k * beam.L * beam.L;
    d.alphabar = s.alpha * beam.L;
    d.zetabar = (3.0 * s.alpha - d.k * beam.L) * beam.L;
    return d;
}

double moment_of_curvature(double chi, const AxialState& s, const BeamSpec& beam) {
    const double a = std::fabs(chi);
    const double EJ = beam.EJ();
    if (a <= s.alpha)
        return EJ * chi;
    const double sign = chi > 0.0 ? 1.0 : -1.0;
    return EJ * s.alpha * sign * (3.0 - 2.0 * std::sqrt(s.alpha / a));
}

double curvature_of_moment(double M, const AxialState& s, const BeamSpec& beam) {
    const double EJ = beam.EJ();
    const double m = std::fabs(M);
    if (m >= s.M_max)
        throw SectionCapacityExceeded("curvature_of_moment: |M| >= M_max, section capacity exceeded");
    const double sign = M >= 0.0 ? 1.0 : -1.0;
    if (m <= s.M_el)
        return M / EJ;
    const double d = m / EJ - 3.0 * s.alpha;  // negative for |M| < M_max
    return sign * 4.0 * s.alpha * s.alpha * s.alpha / (d * d);
}

double tangent_stiffness(double chi, const AxialState& s, const BeamSpec& beam) {
    const double a = std::fabs(chi);
    const double EJ = beam.EJ();
    if (a <= s.alpha)
        return EJ;
    return EJ * std::pow(s.alpha / a, 1.5);
}

}  // namespace mlbeam
