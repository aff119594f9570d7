#include "mlbeam/closed_form.hpp"

#include <cmath>

#include "mlbeam/constitutive.hpp"

namespace mlbeam {

namespace {

// Guard band against the capacity asymptote: log and 1/zeta terms lose all
// precision as zeta -> 0.
constexpr double kZetaGuard = 1e-9;

// Piecewise case (b) solution with its integration constants resolved from
// the clamped-end and matching conditions.
struct PiecewiseB {
    double L, k, alpha, x0;
    double c1, c2, c3, c4;
    bool elastic_only;

    double y(double x) const {
        if (elastic_only) return -k * (L * x * x / 2.0 - x * x * x / 6.0);
        if (x <= x0) {
            const double a3 = alpha * alpha * alpha;
            return c1 + c2 * x + (4.0 * a3 / (k * k)) * std::log(k * (x - L) + 3.0 * alpha);
        }
        return c3 + c4 * x - (k * L / 2.0) * x * x + (k / 6.0) * x * x * x;
    }

    double slope(double x) const {
        if (elastic_only) return -k * (L * x - x * x / 2.0);
        if (x <= x0) {
            const double a3 = alpha * alpha * alpha;
            return c2 + (4.0 * a3 / k) / (k * (x - L) + 3.0 * alpha);
        }
        return c4 - k * L * x + (k / 2.0) * x * x;
    }

    double chi(double x) const {
        const double m = k * (L - x);
        if (elastic_only || x > x0) return m;
        const double den = m - 3.0 * alpha;
        return 4.0 * alpha * alpha * alpha / (den * den);
    }
};

PiecewiseB make_piecewise(const LoadCaseB& lc, const BeamSpec& beam) {
    const AxialState s(lc.N, beam);
    const CaseBDerived d = case_b_derived(lc, beam);
    if (lc.H >= d.H_max)
        throw SectionCapacityExceeded("case_b: H >= H_max puts the base moment at capacity");

    PiecewiseB p{};
    p.L = beam.L;
    p.k = d.k;
    p.alpha = s.alpha;
    p.elastic_only = lc.H <= d.H_min;
    if (p.elastic_only) return p;

    const double zeta = 3.0 * p.alpha - p.k * p.L;
    if (zeta < kZetaGuard * p.alpha)
        throw DomainNearCapacity("case_b: zeta below guard band, evaluation refused");

    p.x0 = p.L - p.alpha / p.k;
    const double a3 = p.alpha * p.alpha * p.alpha;
    p.c1 = -(4.0 * a3 / (p.k * p.k)) * std::log(zeta);
    p.c2 = -(4.0 * a3 / p.k) / zeta;
    p.c3 = -(1.0 / (6.0 * p.k * p.k)) *
           (p.k * p.k * p.k * p.L * p.L * p.L + 9.0 * p.k * p.L * p.alpha * p.alpha - 10.0 * a3 -
            24.0 * a3 * (std::log(2.0 * p.alpha) - std::log(zeta)));
    const double kLa = p.k * p.L - p.alpha;
    p.c4 = -(kLa * kLa * kLa) / (2.0 * p.k * zeta);
    return p;
}

}  // namespace

double case_a_curvature(const LoadCaseA& lc, const BeamSpec& beam) {
    if (lc.e >= 0.5 * beam.h)
        throw SectionCapacityExceeded("case_a_curvature: eccentricity e >= h/2 puts the load outside the section");
    const AxialState s(lc.N, beam);
    return std::fabs(curvature_of_moment(lc.N * lc.e, s, beam));
}

double case_a_tip_deflection(const LoadCaseA& lc, const BeamSpec& beam) {
    const double chi = case_a_curvature(lc, beam);
    return -chi * beam.L * beam.L / 2.0;
}

double case_b_tip_deflection_dimensionless(double alphabar, double kbar) {
    if (!(alphabar > 0.0))
        throw std::invalid_argument("case_b_tip_deflection_dimensionless: alphabar must be positive");
    if (kbar < 0.0)
        throw std::invalid_argument("case_b_tip_deflection_dimensionless: kbar must be nonnegative");
    if (kbar <= alphabar)
        return -kbar / 3.0;  // fully elastic, x0 = 0
    const double zetabar = 3.0 * alphabar - kbar;
    if (zetabar <= 0.0)
        throw SectionCapacityExceeded("case_b_tip_deflection_dimensionless: H >= H_max");
    if (zetabar < kZetaGuard * alphabar)
        throw DomainNearCapacity("case_b_tip_deflection_dimensionless: zeta below guard band, evaluation refused");
    const double a3 = alphabar * alphabar * alphabar;
    return -(a3 / (3.0 * kbar * kbar * zetabar)) *
           (17.0 * kbar - 15.0 * alphabar - 12.0 * zetabar * std::log(2.0 * alphabar / zetabar));
}

double case_b_tip_deflection(const LoadCaseB& lc, const BeamSpec& beam) {
    const CaseBDerived d = case_b_derived(lc, beam);
    if (lc.H >= d.H_max)
        throw SectionCapacityExceeded("case_b_tip_deflection: H >= H_max");
    return beam.L * case_b_tip_deflection_dimensionless(d.alphabar, d.kbar);
}

DeflectionField case_b_deflection(const LoadCaseB& lc, const BeamSpec& beam, int n) {
    if (n < 1)
        throw std::invalid_argument("case_b_deflection: grid size n must be >= 1");
    const PiecewiseB p = make_piecewise(lc, beam);
    const double dx = beam.L / n;

    DeflectionField f;
    f.x.resize(n + 1);
    f.y.resize(n + 1);
    f.chi.resize(n + 1);
    for (int i = 0; i <= n; ++i) {
        f.x[i] = i * dx;
        f.y[i] = p.y(f.x[i]);
        f.chi[i] = p.chi(f.x[i]);
    }
    return f;
}

double case_b_deflection_at(const LoadCaseB& lc, const BeamSpec& beam, double x) {
    if (!(x >= 0.0 && x <= beam.L))
        throw std::invalid_argument("case_b_deflection_at: x must lie in [0, L]");
    return make_piecewise(lc, beam).y(x);
}

double case_b_slope_at(const LoadCaseB& lc, const BeamSpec& beam, double x) {
    if (!(x >= 0.0 && x <= beam.L))
        throw std::invalid_argument("case_b_slope_at: x must lie in [0, L]");
    return make_piecewise(lc, beam).slope(x);
}

std::vector<PushoverPoint> pushover_curve_first_order(std::span<const double> alphabars,
                                                      int samples, double t_max,
                                                      int refine_near_capacity) {
    if (samples < 1)
        throw std::invalid_argument("pushover_curve_first_order: samples must be >= 1");
    if (!(t_max > 0.0 && t_max < 1.0))
        throw std::invalid_argument("pushover_curve_first_order: t_max must lie in (0, 1)");
    if (refine_near_capacity < 0 || refine_near_capacity > 24)
        throw std::invalid_argument("pushover_curve_first_order: refine_near_capacity must lie in [0, 24]");
    std::vector<PushoverPoint> pts;
    pts.reserve(alphabars.size() * (samples + 1 + refine_near_capacity));
    for (double ab : alphabars) {
        if (!(ab > 0.0))
            throw std::invalid_argument("pushover_curve_first_order: alphabar values must be positive");
        auto emit = [&](double t) {
            const double kbar = 3.0 * ab * t;
            pts.push_back({ab, t, std::fabs(case_b_tip_deflection_dimensionless(ab, kbar))});
        };
        for (int j = 0; j <= samples; ++j) emit(t_max * j / samples);
        double gap = 1.0 - t_max;
        for (int j = 0; j < refine_near_capacity; ++j) {
            gap *= 0.5;
            emit(1.0 - gap);
        }
    }
    return pts;
}

}  // namespace mlbeam
