#ifndef MLBEAM_BEAM_HPP
#define MLBEAM_BEAM_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace mlbeam {

// Requested bending moment reaches or exceeds the section capacity
// M_max = -N h / 2; the cracked cross-section cannot carry it.
class SectionCapacityExceeded : public std::domain_error {
public:
    explicit SectionCapacityExceeded(const std::string& msg) : std::domain_error(msg) {}
};

// Axial load at or beyond the Euler critical load of the member.
class BeyondCriticalLoad : public std::domain_error {
public:
    explicit BeyondCriticalLoad(const std::string& msg) : std::domain_error(msg) {}
};

// Closed-form evaluation requested inside the ill-conditioned guard band
// next to the capacity asymptote (zeta -> 0).
class DomainNearCapacity : public std::domain_error {
public:
    explicit DomainNearCapacity(const std::string& msg) : std::domain_error(msg) {}
};

// A frequency estimate was requested for a static state the solver cannot
// reach (the underlying solve diverged or hit the section capacity).
class BeyondCollapse : public std::runtime_error {
public:
    explicit BeyondCollapse(const std::string& msg) : std::runtime_error(msg) {}
};

// Geometry and material of a rectangular-section cantilever of length L
// (equivalently one half of a simply supported beam of length 2L).
// Derived quantities are computed once on construction; treat instances
// as immutable values.
struct BeamSpec {
    double b;    // section width [m]
    double h;    // section height [m]
    double L;    // cantilever length [m]
    double E;    // Young's modulus [Pa]
    double rho;  // mass density [kg/m^3], used only by the dynamics module

    double J;      // b h^3 / 12 [m^4]
    double gamma;  // 3 E J / (L h) [N]
    double N_E;    // Euler critical load pi^2 E J / (2L)^2 [N]
    double c2;     // E J / (rho b h) [m^4/s^2]

    BeamSpec(double b, double h, double L, double E, double rho);

    double EJ() const { return E * J; }
};

// Compression state of the section under a fixed axial force N < 0.
// M_el and M_max are defined through alpha so the identities
// M_el = alpha E J and M_max = 3 M_el hold exactly.
struct AxialState {
    double N;      // axial force [N], strictly negative
    double alpha;  // elastic-limit curvature -2N/(E b h^2) [1/m]
    double M_el;   // elastic-limit moment, -N h / 6 [N m]
    double M_max;  // section capacity, -N h / 2 [N m]

    AxialState(double N, const BeamSpec& beam);
};

// Case (a): eccentric axial load at the free end.
struct LoadCaseA {
    double N;  // axial force [N], strictly negative
    double e;  // eccentricity [m], >= 0

    LoadCaseA(double N, double e);
};

// Case (b): axial load plus horizontal load at the free end.
struct LoadCaseB {
    double N;  // axial force [N], strictly negative
    double H;  // horizontal tip force [N], >= 0

    LoadCaseB(double N, double H);
};

// Derived quantities of a case (b) load on a given beam.
struct CaseBDerived {
    double H_max;     // |N| h / (2 L): N applied at the edge of the base section
    double H_min;     // |N| h / (6 L): upper bound of the fully elastic range
    double k;         // H / (E J) [1/m^2]
    double kbar;      // k L^2
    double alphabar;  // alpha L
    double zetabar;   // (3 alpha - k L) L, positive iff H < H_max
};

CaseBDerived case_b_derived(const LoadCaseB& lc, const BeamSpec& beam);

// Transverse deflection sampled on a uniform grid over [0, L].
// y uses the downhill sign convention (y <= 0 under positive curvature);
// chi is the nonnegative curvature magnitude entering y'' = -chi.
struct DeflectionField {
    std::vector<double> x;
    std::vector<double> y;
    std::vector<double> chi;
};

}  // namespace mlbeam

#endif  // MLBEAM_BEAM_HPP
