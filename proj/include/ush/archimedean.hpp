// Archimedean special functions and local values: the exponential integral,
// the rank-one archimedean Whittaker value and derivative, the Green kernel
//   Q_s(t) = Gamma(s+n)Gamma(s+1) / (2 Gamma(2s+n+1) t^{s+n}) * F(s+n, s+1, 2s+n+1; 1/t)
// with its hypergeometric ODE check, and the k-integral
//   k_{v,s}(y) = Gamma(s+n) / (2 (4pi)^s Gamma(n)) * int_1^infty dt / (t (1-q t)^{s+n}).
#pragma once

#include <complex>

#include "ush/gammafn.hpp"
#include "ush/quadrature.hpp"
#include "ush/rational.hpp"
#include "ush/symbolic.hpp"

namespace ush {

// ---------------------------------------------------------------------------
// Exponential integral Ei(x), x != 0.  Power series for |x| <= 30 (in the
// form Ei(x) = gamma + log|x| + sum x^k/(k k!)), asymptotic expansion beyond.
inline double exp_integral_ei(double x) {
    if (x == 0.0) throw std::domain_error("Ei has a singularity at 0");
    if (std::fabs(x) <= 30.0) {
        double sum = 0.0, term = 1.0;
        for (int k = 1; k < 200; ++k) {
            term *= x / k;
            double add = term / k;
            sum += add;
            if (std::fabs(add) < 1e-18 * (1.0 + std::fabs(sum)) && k > 4) break;
        }
        return (double)detail::const_euler_gamma() + std::log(std::fabs(x)) + sum;
    }
    // Ei(x) ~ e^x/x (1 + 1!/x + 2!/x^2 + ...), truncated at the smallest term
    double sum = 1.0, term = 1.0;
    for (int k = 1; k < 60; ++k) {
        double next = term * k / x;
        if (std::fabs(next) >= std::fabs(term)) break;
        term = next;
        sum += term;
    }
    return std::exp(x) / x * sum;
}

// Quadrature oracle for x < 0: Ei(x) = -int_{-x}^infty e^{-t}/t dt.
inline double exp_integral_ei_quadrature(double x) {
    if (x >= 0.0) throw std::domain_error("quadrature oracle requires x < 0");
    double a = -x;
    // substitute t = a + u/(1-u), u in [0,1)
    auto f = [a](double u) {
        if (u >= 1.0) return 0.0;
        double t = a + u / (1.0 - u);
        double jac = 1.0 / ((1.0 - u) * (1.0 - u));
        return std::exp(-t) / t * jac;
    };
    return -integrate(f, 0.0, 1.0 - 1e-14, 1e-14);
}

// ---------------------------------------------------------------------------
// Archimedean Whittaker value at g = 1 for the standard Gaussian.
struct ArchWhittakerSpec {
    int n;
    double a;
};

struct ArchComplex {
    EighthRoot phase;  // exact eighth root of unity
    double magnitude;  // signed real multiplier
    std::complex<double> value() const {
        return std::complex<double>(phase.re(), phase.im()) * magnitude;
    }
};

// W_{a,v}(0,1,Phi_v) = i^{n+1} (2 pi)^{n+1} / Gamma(n+1) * a^n e^{-2 pi a}, a > 0.
inline ArchComplex whittaker_arch_value(const ArchWhittakerSpec& s) {
    ArchComplex r;
    r.phase = EighthRoot(2 * (s.n + 1));  // e^{2 pi i (n+1)/4}
    if (s.a <= 0.0) {
        r.magnitude = 0.0;
        return r;
    }
    r.magnitude = std::pow(2.0 * M_PI, s.n + 1) / gamma_real(s.n + 1.0) *
                  std::pow(s.a, s.n) * std::exp(-2.0 * M_PI * s.a);
    return r;
}

// Bracket of the s-derivative: sum_i binom(n,i) (4 a pi)^{-i} Gamma(i)
//                              + log(a pi) + (gamma - H_n).
inline double whittaker_arch_deriv_bracket(const ArchWhittakerSpec& s) {
    double sum = 0.0, binom = 1.0;
    for (int i = 1; i <= s.n; ++i) {
        binom = binom * (s.n - i + 1) / i;
        sum += binom * std::pow(4.0 * s.a * M_PI, -i) * gamma_real((double)i);
    }
    double H = 0.0;
    for (int i = 1; i <= s.n; ++i) H += 1.0 / i;
    return sum + std::log(s.a * M_PI) + ((double)detail::const_euler_gamma() - H);
}

// W'_{a,v}(0,1,Phi_v) = i^{n+1} e^{-2 pi a} (2a)^n pi^{n+1} / Gamma(n+1) * bracket.
inline ArchComplex whittaker_arch_derivative(const ArchWhittakerSpec& s) {
    ArchComplex r;
    r.phase = EighthRoot(2 * (s.n + 1));
    if (s.a <= 0.0) {
        r.magnitude = 0.0;
        return r;
    }
    r.magnitude = std::exp(-2.0 * M_PI * s.a) * std::pow(2.0 * s.a, s.n) *
                  std::pow(M_PI, s.n + 1) / gamma_real(s.n + 1.0) *
                  whittaker_arch_deriv_bracket(s);
    return r;
}

// ---------------------------------------------------------------------------
// Green kernel Q_s(t), t > 1, via the hypergeometric series in 1/t.
inline double green_kernel_q(double s, int n, double t) {
    if (t <= 1.0) throw std::domain_error("green_kernel_q requires t > 1");
    double a = s + n, b = s + 1.0, c = 2.0 * s + n + 1.0;
    double z = 1.0 / t;
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < 200000; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
        sum += term;
        if (std::fabs(term) < 1e-17 * std::fabs(sum)) break;
    }
    double pref = std::exp(lgamma_real(a) + lgamma_real(b) - lgamma_real(c)) /
                  (2.0 * std::pow(t, a));
    return pref * sum;
}

// Central-difference residual of (t - t^2) Q'' + (n - (n+1) t) Q' + s(s+n) Q.
inline double green_ode_residual(double s, int n, double t, double h) {
    if (t - 2.0 * h <= 1.0) throw std::domain_error("stencil leaves the domain t > 1");
    double qm = green_kernel_q(s, n, t - h);
    double q0 = green_kernel_q(s, n, t);
    double qp = green_kernel_q(s, n, t + h);
    double d1 = (qp - qm) / (2.0 * h);
    double d2 = (qp - 2.0 * q0 + qm) / (h * h);
    return (t - t * t) * d2 + (n - (n + 1.0) * t) * d1 + s * (s + n) * q0;
}

// Empirical coefficient c in Q_0(t) ~ -c log(t-1) as t -> 1+.
inline double green_log_singularity_coefficient(int n) {
    double t1 = 1.0 + 1e-4, t2 = 1.0 + 1e-5;
    double q1 = green_kernel_q(0.0, n, t1), q2 = green_kernel_q(0.0, n, t2);
    return -(q1 - q2) / (std::log(t1 - 1.0) - std::log(t2 - 1.0));
}

// ---------------------------------------------------------------------------
// k_{v,s}(q) = Gamma(s+n) / (2 (4 pi)^s Gamma(n)) * int_1^infty dt/(t (1-qt)^{s+n}),
// q < 0.  After u = 1/t the integrand is u^{s+n-1} / (u - q)^{s+n} on (0,1).
inline double k_integral(double s, int n, double q) {
    if (q >= 0.0) throw std::domain_error("k_integral requires q < 0");
    double expnt = s + n;
    auto g = [expnt, q](double u) { return std::pow(u, expnt - 1.0) / std::pow(u - q, expnt); };
    double integral = integrate(g, 1e-14, 1.0, 1e-13);
    double pref = std::exp(lgamma_real(s + n) - lgamma_real((double)n)) /
                  (2.0 * std::pow(4.0 * M_PI, s));
    return pref * integral;
}

// Bare integral int_1^infty dt / (t (1 - q t)^{s+n}).
inline double k_integral_bare(double s, int n, double q) {
    if (q >= 0.0) throw std::domain_error("k_integral requires q < 0");
    double expnt = s + n;
    auto g = [expnt, q](double u) { return std::pow(u, expnt - 1.0) / std::pow(u - q, expnt); };
    return integrate(g, 1e-14, 1.0, 1e-13);
}

// ---------------------------------------------------------------------------
// Holomorphic-projection constant: both displayed forms of
//   c_3 = sum_{i<n} n/(2i(n-i)) - (log4 + H_n)/2 = sum_{i<n} 1/(2i) - 1/(2n) - (log4)/2
// as exact symbolic values.
inline SymbolicValue c3_form_lhs(long long n) {
    SymbolicValue v;
    Rational s = 0;
    for (long long i = 1; i < n; ++i) s += Rational(n) / (Rational(2 * i) * Rational(n - i));
    v.rat = s - harmonic(n) / 2;
    v.logs[2] = Rational(-1);  // -(log 4)/2
    v.prune();
    return v;
}

inline SymbolicValue c3_form_rhs(long long n) {
    SymbolicValue v;
    Rational s = 0;
    for (long long i = 1; i < n; ++i) s += Rational(1, 2 * i);
    v.rat = s - Rational(1, 2 * n);
    v.logs[2] = Rational(-1);
    v.prune();
    return v;
}

struct ProjectionCheck {
    bool equal;
    SymbolicValue lhs, rhs;
};

inline ProjectionCheck projection_constant_check(long long n) {
    ProjectionCheck r;
    r.lhs = c3_form_lhs(n);
    r.rhs = c3_form_rhs(n);
    r.equal = (r.lhs == r.rhs);
    return r;
}

// Archimedean K-vs-M comparison constant: -H_n + gamma + log(4 pi).
inline SymbolicValue arch_comparison_constant(long long n) {
    SymbolicValue v;
    v.rat = -harmonic(n);
    v.euler = 1;
    v.logs[2] = 2;
    v.log_pi = 1;
    v.prune();
    return v;
}

}  // namespace ush
