#include "mlbeam/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "mlbeam/closed_form.hpp"
#include "mlbeam/constitutive.hpp"
#include "mlbeam/quadrature.hpp"

namespace mlbeam {

namespace {

double omega_el_squared(const BeamSpec& beam) {
    const double pi = M_PI;
    const double twoL = 2.0 * beam.L;
    const double twoL4 = twoL * twoL * twoL * twoL;
    return beam.c2 * pi * pi * pi * pi / twoL4;
}

// Normalized tangent stiffness g = (df/dchi)/c^2 as a function of the
// effective |M|/EJ at the station; (3a - m)^3 / (8 a^3) on the cracked branch.
double g_of_m(double m, double alpha) {
    if (m <= alpha) return 1.0;
    if (m >= 3.0 * alpha) return 0.0;
    const double t = 3.0 * alpha - m;
    return t * t * t / (8.0 * alpha * alpha * alpha);
}

FrequencyResult assemble(double stiffness_omega2, double N, const BeamSpec& beam) {
    FrequencyResult r;
    r.omega_el2 = omega_el_squared(beam);
    r.stiffness_omega2 = stiffness_omega2;
    const double raw = stiffness_omega2 + r.omega_el2 * (N / beam.N_E);
    r.negative_clamped = raw < 0.0;
    r.omega2 = std::max(raw, 0.0);
    r.ratio = std::sqrt(r.omega2 / r.omega_el2);
    r.stiffness_ratio = std::sqrt(std::max(stiffness_omega2, 0.0) / r.omega_el2);
    return r;
}

// Modal stiffness term: (4 pi^4 c^2 / (2L)^5) * integral of sin^2 * g over
// [0, L], with the integral split exactly at the branch boundary.
double stiffness_term(const BeamSpec& beam, double split,
                      const std::function<double(double)>& g_at, int quad_n) {
    const double L = beam.L;
    const double pi = M_PI;
    auto sin2 = [&](double x) {
        const double v = std::sin(pi * x / (2.0 * L));
        return v * v;
    };
    const int half = std::max(quad_n / 2, 2);
    double integral = 0.0;
    if (split <= 0.0) {
        integral = simpson(sin2, 0.0, L, quad_n);
    } else if (split >= L) {
        integral = simpson([&](double x) { return sin2(x) * g_at(x); }, 0.0, L, quad_n);
    } else {
        integral = simpson([&](double x) { return sin2(x) * g_at(x); }, 0.0, split, half) +
                   simpson(sin2, split, L, half);
    }
    const double twoL = 2.0 * beam.L;
    const double prefactor = 4.0 * pi * pi * pi * pi * beam.c2 / (twoL * twoL * twoL * twoL * twoL);
    return prefactor * integral;
}

// Linear interpolation of a converged deflection field.
double sample_linear(const std::vector<double>& y, double L, double x) {
    const std::size_t n = y.size() - 1;
    const double t = std::clamp(x / L * double(n), 0.0, double(n));
    const std::size_t j = std::min(std::size_t(t), n - 1);
    const double w = t - double(j);
    return y[j] * (1.0 - w) + y[j + 1] * w;
}

const char* status_name(SolveStatus st) {
    switch (st) {
        case SolveStatus::converged: return "converged";
        case SolveStatus::not_converged: return "not converged";
        case SolveStatus::capacity_exceeded: return "section capacity exceeded";
    }
    return "unknown";
}

}  // namespace

FrequencyResult frequency_elastic(double N, const BeamSpec& beam) {
    if (!(N <= 0.0) || !std::isfinite(N))
        throw std::invalid_argument("frequency_elastic: N must be nonpositive");
    if (-N >= beam.N_E)
        throw BeyondCriticalLoad("frequency_elastic: |N| >= N_E");
    FrequencyResult r;
    r.omega_el2 = omega_el_squared(beam);
    r.stiffness_omega2 = r.omega_el2;
    r.omega2 = r.omega_el2 * (1.0 - (-N) / beam.N_E);
    r.ratio = std::sqrt(r.omega2 / r.omega_el2);
    r.stiffness_ratio = 1.0;
    r.negative_clamped = false;
    return r;
}

FrequencyResult frequency_case_a(const LoadCaseA& lc, const BeamSpec& beam,
                                 const SolverSettings& settings, bool include_geometric,
                                 int quad_n) {
    const AxialState s(lc.N, beam);
    const double alpha = s.alpha;
    const double L = beam.L;

    if (!include_geometric) {
        const double chi = case_a_curvature(lc, beam);  // constant along the axis
        const double g = chi <= alpha ? 1.0 : std::pow(alpha / chi, 1.5);
        const double stiff = stiffness_term(beam, L, [&](double) { return g; }, quad_n);
        return assemble(stiff, lc.N, beam);
    }

    SolverReport rep = solve_case_a(lc, beam, settings);
    if (rep.status != SolveStatus::converged)
        throw BeyondCollapse(std::string("frequency_case_a: static solve ") + status_name(rep.status));

    const double lam2 = -lc.N / beam.EJ();
    const std::vector<double>& y = rep.field.y;
    const double yL = y.back();
    auto m_of = [&](double x) { return lam2 * (lc.e + std::fabs(yL - sample_linear(y, L, x))); };

    // m decreases from the base; find where it crosses alpha
    double split = 0.0;
    if (m_of(0.0) > alpha) {
        if (m_of(L) >= alpha) {
            split = L;  // cracked over the whole span
        } else {
            double a = 0.0, b = L;
            for (int i = 0; i < 100 && b - a > 1e-14 * L; ++i) {
                const double mid = 0.5 * (a + b);
                (m_of(mid) > alpha ? a : b) = mid;
            }
            split = 0.5 * (a + b);
        }
    }
    const double stiff =
        stiffness_term(beam, split, [&](double x) { return g_of_m(m_of(x), alpha); }, quad_n);
    return assemble(stiff, lc.N, beam);
}

FrequencyResult frequency_case_b(const LoadCaseB& lc, const BeamSpec& beam,
                                 const SolverSettings& settings, bool include_geometric,
                                 int quad_n) {
    const AxialState s(lc.N, beam);
    const CaseBDerived d = case_b_derived(lc, beam);
    if (lc.H >= d.H_max)
        throw SectionCapacityExceeded("frequency_case_b: H >= H_max");
    const double alpha = s.alpha;
    const double L = beam.L;

    if (!include_geometric) {
        const double k = d.k;
        double split = 0.0;
        if (lc.H > d.H_min) split = L - alpha / k;
        auto g_at = [&](double x) { return g_of_m(k * (L - x), alpha); };
        const double stiff = stiffness_term(beam, split, g_at, quad_n);
        return assemble(stiff, lc.N, beam);
    }

    SolverReport rep = solve_case_b(lc, beam, settings);
    if (rep.status != SolveStatus::converged)
        throw BeyondCollapse(std::string("frequency_case_b: static solve ") + status_name(rep.status));

    const double kH = lc.H / beam.EJ();
    const double lam2 = -lc.N / beam.EJ();
    const std::vector<double>& y = rep.field.y;
    const double yL = y.back();
    auto m_of = [&](double x) {
        return kH * (L - x) + lam2 * std::fabs(yL - sample_linear(y, L, x));
    };
    const double split = rep.x0.value_or(0.0);
    const double stiff =
        stiffness_term(beam, split, [&](double x) { return g_of_m(m_of(x), alpha); }, quad_n);
    return assemble(stiff, lc.N, beam);
}

}  // namespace mlbeam
