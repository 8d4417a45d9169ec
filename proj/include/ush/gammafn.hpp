// Shared real Gamma/digamma implementation (Lanczos, g = 7, 9 terms).
// Every archimedean prefactor below routes through gamma_real/lgamma_real
// so the factors stay mutually consistent.
#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace ush {

namespace detail {
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
}  // namespace detail

inline double gamma_real(double x);

inline double lgamma_real(double x) {
    if (x <= 0.0 && x == std::floor(x)) throw std::domain_error("lgamma_real: pole");
    if (x < 0.5) {
        // reflection
        return std::log(M_PI / std::fabs(std::sin(M_PI * x))) - lgamma_real(1.0 - x);
    }
    x -= 1.0;
    double a = detail::kLanczos[0];
    double t = x + detail::kLanczosG + 0.5;
    for (int i = 1; i < 9; ++i) a += detail::kLanczos[i] / (x + i);
    return 0.5 * std::log(2.0 * M_PI) + (x + 0.5) * std::log(t) - t + std::log(a);
}

inline double gamma_real(double x) {
    if (x <= 0.0 && x == std::floor(x)) throw std::domain_error("gamma_real: pole");
    if (x < 0.5) return M_PI / (std::sin(M_PI * x) * gamma_real(1.0 - x));
    bool neg = false;
    double lg = lgamma_real(x);
    return neg ? -std::exp(lg) : std::exp(lg);
}

// psi(x) by recurrence + asymptotic series.
inline double digamma_real(double x) {
    if (x <= 0.0 && x == std::floor(x)) throw std::domain_error("digamma_real: pole");
    double result = 0.0;
    if (x < 0.0) {
        // reflection: psi(1-x) - psi(x) = pi cot(pi x)
        return digamma_real(1.0 - x) - M_PI / std::tan(M_PI * x);
    }
    while (x < 10.0) {
        result -= 1.0 / x;
        x += 1.0;
    }
    double inv = 1.0 / x, inv2 = inv * inv;
    result += std::log(x) - 0.5 * inv;
    // Bernoulli tail: -sum B_{2k}/(2k x^{2k})
    static const double b[] = {1.0 / 12, -1.0 / 120, 1.0 / 252, -1.0 / 240,
                               1.0 / 132, -691.0 / 32760, 1.0 / 12};
    double xp = inv2;
    for (double bk : b) {
        result -= bk * xp;
        xp *= inv2;
    }
    return result;
}

// Exact eighth root of unity e^{2 pi i k / 8}; the Weil-index phases are
// kept in this form instead of floating complex numbers.
struct EighthRoot {
    int k;  // mod 8
    explicit EighthRoot(int kk = 0) : k(((kk % 8) + 8) % 8) {}
    EighthRoot operator*(const EighthRoot& o) const { return EighthRoot(k + o.k); }
    bool operator==(const EighthRoot& o) const { return k == o.k; }
    double re() const {
        static const double s = std::sqrt(0.5);
        static const double table[8] = {1, s, 0, -s, -1, -s, 0, s};
        return table[k];
    }
    double im() const {
        static const double s = std::sqrt(0.5);
        static const double table[8] = {0, s, 1, s, 0, -s, -1, -s};
        return table[k];
    }
};

}  // namespace ush
