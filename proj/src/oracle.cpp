#include "mlbeam/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mlbeam::oracle {

namespace {

constexpr double kRunaway = 1e6;
constexpr double kAmpFloor = 1e-300;

void check_settings(const OracleSettings& st) {
    if (st.fine_n < 100)
        throw std::invalid_argument("OracleSettings: fine_n must be >= 100");
    if (!(st.tol > 0.0))
        throw std::invalid_argument("OracleSettings: tol must be positive");
    if (!(st.damping > 0.0 && st.damping <= 1.0))
        throw std::invalid_argument("OracleSettings: damping must lie in (0, 1]");
    if (st.max_iter < 1)
        throw std::invalid_argument("OracleSettings: max_iter must be >= 1");
}

// Cumulative integral via local quadratic fits (one order above trapezoid,
// and a different route from the production integrator).
void cumulative_quadratic(const std::vector<double>& f, double dx, std::vector<double>& out) {
    const std::size_t n = f.size() - 1;
    out[0] = 0.0;
    if (n == 0) return;
    out[1] = out[0] + dx / 12.0 * (5.0 * f[0] + 8.0 * f[1] - f[2]);
    for (std::size_t i = 2; i <= n; ++i)
        out[i] = out[i - 1] + dx / 12.0 * (-f[i - 2] + 8.0 * f[i - 1] + 5.0 * f[i]);
}

// One substitution step: curvature from the no-tension law at the effective
// moment, then double integration with clamped-end conditions.
template <typename MomentFn>
bool substitute(const MomentFn& m_of, double alpha, double dx, const std::vector<double>& y,
                std::vector<double>& chi, std::vector<double>& work, std::vector<double>& out) {
    const double a3 = alpha * alpha * alpha;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const double m = m_of(i, y);
        if (m >= 3.0 * alpha) return false;
        if (m <= alpha) {
            chi[i] = m;
        } else {
            const double den = m - 3.0 * alpha;
            chi[i] = 4.0 * a3 / (den * den);
        }
    }
    cumulative_quadratic(chi, dx, work);
    for (double& v : work) v = -v;
    cumulative_quadratic(work, dx, out);
    return true;
}

template <typename MomentFn>
OracleResult relax(const BeamSpec& beam, double alpha, const OracleSettings& st, const MomentFn& m_of) {
    const int n = st.fine_n;
    const double dx = beam.L / n;

    OracleResult res;
    res.x.resize(n + 1);
    for (int i = 0; i <= n; ++i) res.x[i] = i * dx;

    std::vector<double> y(n + 1, 0.0);
    std::vector<double> chi(n + 1, 0.0);
    std::vector<double> work(n + 1, 0.0);
    std::vector<double> f(n + 1, 0.0);

    for (int iter = 1; iter <= st.max_iter; ++iter) {
        res.iterations = iter;
        if (!substitute(m_of, alpha, dx, y, chi, work, f)) {
            res.capacity_exceeded = true;
            break;
        }
        double inc = 0.0;
        double amp = 0.0;
        for (std::size_t i = 0; i < y.size(); ++i) {
            inc = std::max(inc, std::fabs(f[i] - y[i]));
            amp = std::max(amp, std::fabs(f[i]));
        }
        for (std::size_t i = 0; i < y.size(); ++i)
            y[i] = (1.0 - st.damping) * y[i] + st.damping * f[i];
        res.residual_norm = inc / std::max(amp, kAmpFloor);
        if (inc <= st.tol * std::max(amp, kAmpFloor)) {
            res.converged = true;
            break;
        }
        if (amp > kRunaway * beam.L) break;
    }
    res.y = std::move(y);
    res.f_a = res.y.back();
    return res;
}

}  // namespace

OracleResult relax_case(const LoadCaseA& lc, const BeamSpec& beam, const OracleSettings& settings) {
    check_settings(settings);
    if (lc.e >= 0.5 * beam.h)
        throw SectionCapacityExceeded("relax_case: eccentricity e >= h/2");
    const double alpha = -2.0 * lc.N / (beam.E * beam.b * beam.h * beam.h);
    const double lam2 = -lc.N / beam.EJ();
    auto m_of = [&](std::size_t i, const std::vector<double>& y) {
        return lam2 * (lc.e + std::fabs(y.back() - y[i]));
    };
    return relax(beam, alpha, settings, m_of);
}

OracleResult relax_case(const LoadCaseB& lc, const BeamSpec& beam, const OracleSettings& settings) {
    check_settings(settings);
    const double H_max = -lc.N * beam.h / (2.0 * beam.L);
    if (lc.H >= H_max)
        throw SectionCapacityExceeded("relax_case: H >= H_max");
    const double alpha = -2.0 * lc.N / (beam.E * beam.b * beam.h * beam.h);
    const double lam2 = -lc.N / beam.EJ();
    const double kH = lc.H / beam.EJ();
    const double dx = beam.L / settings.fine_n;
    auto m_of = [&, dx](std::size_t i, const std::vector<double>& y) {
        return kH * (beam.L - double(i) * dx) + lam2 * std::fabs(y.back() - y[i]);
    };
    return relax(beam, alpha, settings, m_of);
}

double secant_tip_deflection(double N, double e, const BeamSpec& beam) {
    if (!(N <= 0.0) || !std::isfinite(N))
        throw std::invalid_argument("secant_tip_deflection: N must be nonpositive");
    if (!(e >= 0.0))
        throw std::invalid_argument("secant_tip_deflection: e must be nonnegative");
    const double lam = std::sqrt(-N / beam.EJ());
    const double lamL = lam * beam.L;
    if (lamL >= 0.5 * M_PI)
        throw BeyondCriticalLoad("secant_tip_deflection: lambda L >= pi/2 (at or beyond the Euler load)");
    return e * (1.0 / std::cos(lamL) - 1.0);
}

}  // namespace mlbeam::oracle
