// Adaptive Simpson quadrature on finite intervals.
#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

namespace ush {

namespace detail {
inline double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <class F>
double adapt(const F& f, double a, double b, double fa, double fm, double fb, double whole,
             double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = simpson(a, m, fa, flm, fm);
    double right = simpson(m, b, fm, frm, fb);
    double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adapt(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
           adapt(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}
}  // namespace detail

template <class F>
double integrate(const F& f, double a, double b, double tol = 1e-12, int max_depth = 60) {
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double whole = detail::simpson(a, b, fa, fm, fb);
    return detail::adapt(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

}  // namespace ush
