#ifndef MLBEAM_QUADRATURE_HPP
#define MLBEAM_QUADRATURE_HPP

#include <cstddef>
#include <span>

namespace mlbeam {

// Cumulative composite trapezoid on a uniform grid: out[i] approximates the
// integral of f from x[0] to x[i]. out may alias f.
inline void cumulative_trapezoid(std::span<const double> f, double dx, std::span<double> out) {
    if (f.empty()) return;
    double acc = 0.0;
    double prev = f[0];
    out[0] = 0.0;
    for (std::size_t i = 1; i < f.size(); ++i) {
        const double cur = f[i];
        acc += 0.5 * dx * (prev + cur);
        prev = cur;
        out[i] = acc;
    }
}

// Composite Simpson over [a, b] with n intervals (n rounded up to even).
template <typename F>
double simpson(F&& f, double a, double b, int n) {
    if (a == b) return 0.0;
    if (n < 2) n = 2;
    if (n % 2) ++n;
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; i += 2) s += 4.0 * f(a + i * h);
    for (int i = 2; i < n; i += 2) s += 2.0 * f(a + i * h);
    return s * h / 3.0;
}

}  // namespace mlbeam

#endif  // MLBEAM_QUADRATURE_HPP
