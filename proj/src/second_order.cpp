#include "mlbeam/second_order.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "mlbeam/constitutive.hpp"
#include "mlbeam/quadrature.hpp"

namespace mlbeam {

namespace {

constexpr double kStationFloor = 1e-15;  // relative to L; excludes 0/0 at the clamped end
constexpr double kRunaway = 1e6;         // |y| > kRunaway * L counts as divergence
constexpr double kRootTol = 1e-12;       // bisection width for x0, relative to L

void check_settings(const SolverSettings& st) {
    if (st.n < 100)
        throw std::invalid_argument("SolverSettings: grid intervals n must be >= 100");
    if (!(st.epsilon > 0.0))
        throw std::invalid_argument("SolverSettings: epsilon must be positive");
    if (st.max_iter < 1)
        throw std::invalid_argument("SolverSettings: max_iter must be >= 1");
}

// Max relative change between iterates, in percent. Stations where the old
// iterate is below the floor are excluded; if none qualify the result is 0
// for a (near-)zero new iterate and +inf otherwise.
double residual_percent(const std::vector<double>& y_old, const std::vector<double>& y_new, double L) {
    double r = 0.0;
    bool any = false;
    for (std::size_t i = 0; i < y_old.size(); ++i) {
        const double denom = std::fabs(y_old[i]);
        if (denom < kStationFloor * L) continue;
        any = true;
        r = std::max(r, std::fabs(y_new[i] - y_old[i]) / denom);
    }
    if (!any) {
        double amp = 0.0;
        for (double v : y_new) amp = std::max(amp, std::fabs(v));
        return amp < kStationFloor * L ? 0.0 : std::numeric_limits<double>::infinity();
    }
    return 100.0 * r;
}

// One fixed-point sweep shared by both cases. The curvature update maps the
// current iterate to the station curvatures, returning false when any station
// reaches the section capacity.
template <typename CurvatureUpdate>
SolverReport run_fixed_point(const BeamSpec& beam, const SolverSettings& st, CurvatureUpdate&& update) {
    const int n = st.n;
    const double dx = beam.L / n;

    SolverReport rep;
    rep.field.x.resize(n + 1);
    for (int i = 0; i <= n; ++i) rep.field.x[i] = i * dx;

    std::vector<double> y(n + 1, 0.0);
    std::vector<double> chi(n + 1, 0.0);
    std::vector<double> slope(n + 1, 0.0);
    std::vector<double> y_new(n + 1, 0.0);

    rep.status = SolveStatus::not_converged;
    double residual = std::numeric_limits<double>::infinity();
    for (int iter = 1; iter <= st.max_iter; ++iter) {
        rep.iterations = iter;
        if (!update(y, chi)) {
            rep.status = SolveStatus::capacity_exceeded;
            rep.residual = residual;
            rep.field.y = std::move(y);
            rep.field.chi.assign(n + 1, 0.0);
            rep.f_a = rep.field.y.back();
            return rep;
        }
        cumulative_trapezoid(chi, dx, slope);
        for (double& v : slope) v = -v;
        cumulative_trapezoid(slope, dx, y_new);
        residual = residual_percent(y, y_new, beam.L);
        y.swap(y_new);
        if (std::fabs(y.back()) > kRunaway * beam.L) break;
        if (residual < st.epsilon) {
            rep.status = SolveStatus::converged;
            break;
        }
    }
    rep.residual = residual;

    // re-evaluate the curvature so field.chi is consistent with the final y
    if (!update(y, chi)) {
        if (rep.status == SolveStatus::converged) rep.status = SolveStatus::capacity_exceeded;
        std::fill(chi.begin(), chi.end(), 0.0);
    }
    rep.field.y = std::move(y);
    rep.field.chi = std::move(chi);
    rep.f_a = rep.field.y.back();
    return rep;
}

}  // namespace

SolverReport solve_case_a(const LoadCaseA& lc, const BeamSpec& beam, const SolverSettings& settings) {
    check_settings(settings);
    if (lc.e >= 0.5 * beam.h)
        throw SectionCapacityExceeded("solve_case_a: eccentricity e >= h/2 puts the load outside the section");
    const AxialState s(lc.N, beam);
    const double lam2 = -lc.N / beam.EJ();  // |N| / EJ
    const double alpha = s.alpha;
    const double a3 = alpha * alpha * alpha;

    auto update = [&](const std::vector<double>& y, std::vector<double>& chi) -> bool {
        const double yL = y.back();
        for (std::size_t i = 0; i < y.size(); ++i) {
            const double m = lam2 * (lc.e + std::fabs(yL - y[i]));
            if (settings.law == Law::elastic) {
                chi[i] = m;
                continue;
            }
            if (m >= 3.0 * alpha) return false;  // effective eccentricity >= h/2
            if (m <= alpha) {
                chi[i] = m;
            } else {
                const double den = m - 3.0 * alpha;
                chi[i] = 4.0 * a3 / (den * den);
            }
        }
        return true;
    };

    SolverReport rep = run_fixed_point(beam, settings, update);
    rep.e_max = lc.e + std::fabs(rep.f_a);
    rep.u = 0.5 * beam.h - *rep.e_max;
    return rep;
}

SolverReport solve_case_b(const LoadCaseB& lc, const BeamSpec& beam, const SolverSettings& settings) {
    check_settings(settings);
    const AxialState s(lc.N, beam);
    const CaseBDerived d = case_b_derived(lc, beam);
    if (lc.H >= d.H_max)
        throw SectionCapacityExceeded("solve_case_b: H >= H_max puts the base moment at capacity");

    const double L = beam.L;
    const double dx = L / settings.n;
    const double kH = lc.H / beam.EJ();
    const double lam2 = -lc.N / beam.EJ();
    const double alpha = s.alpha;
    const double a3 = alpha * alpha * alpha;
    double x0 = 0.0;

    // effective |M|/EJ at abscissa x, with y linearly interpolated
    auto m_at = [&](const std::vector<double>& y, double x) {
        const double t = std::clamp(x / dx, 0.0, double(settings.n));
        const std::size_t j = std::min(std::size_t(t), std::size_t(settings.n - 1));
        const double w = t - double(j);
        const double yx = y[j] * (1.0 - w) + y[j + 1] * w;
        return kH * (L - x) + lam2 * std::fabs(y.back() - yx);
    };

    auto update = [&](const std::vector<double>& y, std::vector<double>& chi) -> bool {
        const double yL = y.back();
        if (settings.law == Law::elastic) {
            for (std::size_t i = 0; i < y.size(); ++i)
                chi[i] = kH * (L - i * dx) + lam2 * std::fabs(yL - y[i]);
            x0 = 0.0;
            return true;
        }
        // locate the elastic boundary: root of m(x) = alpha on the grid,
        // refined by bisection (m decreases monotonically in x)
        if (m_at(y, 0.0) <= alpha) {
            x0 = 0.0;
        } else {
            std::size_t cell = y.size() - 1;
            for (std::size_t i = 1; i < y.size(); ++i) {
                const double m = kH * (L - i * dx) + lam2 * std::fabs(yL - y[i]);
                if (m <= alpha) {
                    cell = i;
                    break;
                }
            }
            double a = (cell - 1) * dx;
            double b = cell * dx;
            while (b - a > kRootTol * L) {
                const double mid = 0.5 * (a + b);
                (m_at(y, mid) > alpha ? a : b) = mid;
            }
            x0 = 0.5 * (a + b);
        }
        for (std::size_t i = 0; i < y.size(); ++i) {
            const double x = i * dx;
            const double m = kH * (L - x) + lam2 * std::fabs(yL - y[i]);
            if (m >= 3.0 * alpha) return false;  // base moment at capacity
            if (x < x0) {
                const double den = m - 3.0 * alpha;
                chi[i] = 4.0 * a3 / (den * den);
            } else {
                chi[i] = m;
            }
        }
        return true;
    };

    SolverReport rep = run_fixed_point(beam, settings, update);
    rep.x0 = x0;
    return rep;
}

CriticalLoadResult critical_axial_load(double e, const BeamSpec& beam, const SolverSettings& settings,
                                       double bracket_tol) {
    check_settings(settings);
    if (!(e >= 0.0) || e >= 0.5 * beam.h)
        throw SectionCapacityExceeded("critical_axial_load: eccentricity must satisfy 0 <= e < h/2");
    if (!(bracket_tol > 0.0 && bracket_tol < 1.0))
        throw std::invalid_argument("critical_axial_load: bracket_tol must lie in (0, 1)");

    const double NE = beam.N_E;
    double lo = 1e-12 * NE;  // converged side, |N|
    double hi = NE;          // at-or-beyond critical side

    CriticalLoadResult res;
    res.report = solve_case_a(LoadCaseA(-lo, e), beam, settings);
    double best = lo;
    while (hi - lo > bracket_tol * NE) {
        const double mid = 0.5 * (lo + hi);
        SolverReport rep = solve_case_a(LoadCaseA(-mid, e), beam, settings);
        if (rep.status == SolveStatus::converged) {
            lo = mid;
            best = mid;
            res.report = std::move(rep);
        } else {
            hi = mid;
        }
    }
    res.N_crit = -best;
    res.n_over_ne = best / NE;
    res.u_over_h = *res.report.u / beam.h;
    return res;
}

CollapseLoadResult collapse_horizontal_load(double N, const BeamSpec& beam, const SolverSettings& settings,
                                            double bracket_tol) {
    check_settings(settings);
    if (!(N < 0.0))
        throw std::invalid_argument("collapse_horizontal_load: N must be strictly negative");
    if (-N >= beam.N_E)
        throw BeyondCriticalLoad("collapse_horizontal_load: |N| must stay below the Euler load");
    if (!(bracket_tol > 0.0 && bracket_tol < 1.0))
        throw std::invalid_argument("collapse_horizontal_load: bracket_tol must lie in (0, 1)");

    const double H_max = -N * beam.h / (2.0 * beam.L);
    double lo = 0.0;
    double hi = H_max;

    CollapseLoadResult res;
    res.report = solve_case_b(LoadCaseB(N, 0.0), beam, settings);
    while (hi - lo > bracket_tol * H_max) {
        const double mid = 0.5 * (lo + hi);
        SolverReport rep = solve_case_b(LoadCaseB(N, mid), beam, settings);
        if (rep.status == SolveStatus::converged) {
            lo = mid;
            res.report = std::move(rep);
        } else {
            hi = mid;
        }
    }
    res.H_g = lo;
    res.hg_over_hmax = lo / H_max;
    return res;
}

}  // namespace mlbeam
