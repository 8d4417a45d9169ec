// Euler-Maclaurin evaluations of Hurwitz-zeta data.
//
// For quadratic Dirichlet characters chi mod q and T(s,x) := zeta(s,x) - 1/(s-1):
//   L(1,chi)  = q^{-1} sum_a chi(a) T(1, a/q)          with T(1,x)  = -psi(x)
//   L'(1,chi) = -log q * L(1,chi) + q^{-1} sum_a chi(a) dT(1, a/q)
// where dT(1,x) = d/ds T(s,x) at s=1 = -gamma_1(x) (generalized Stieltjes).
// The sum over a kills the divergent 1/(s-1) parts because sum chi(a) = 0.
//
// The same machinery gives zeta(s) and zeta'(s) for real s > 1, which is the
// independent oracle used against the Euler-product log-derivatives.
#pragma once

#include <cmath>

namespace ush {

namespace em_detail {
// B_{2j} for j = 1..6
constexpr double kB2j[6] = {1.0 / 6,  -1.0 / 30, 1.0 / 42,
                            -1.0 / 30, 5.0 / 66,  -691.0 / 2730};
constexpr int kTerms = 48;  // direct terms before the tail correction
}  // namespace em_detail

// T(1,x) = -psi(x): kept separate from digamma_real as an independent route.
inline double em_T1(double x) {
    using namespace em_detail;
    double s = 0.0;
    for (int k = 0; k < kTerms; ++k) s += 1.0 / (k + x);
    double K = kTerms + x;
    double r = s - std::log(K) + 0.5 / K;
    double K2 = 1.0 / (K * K), Kp = K2;
    for (int j = 1; j <= 6; ++j) {
        r += kB2j[j - 1] / (2.0 * j) * Kp;
        Kp *= K2;
    }
    return r;
}

// dT(1,x) = -gamma_1(x).
inline double em_dT1(double x) {
    using namespace em_detail;
    double s = 0.0;
    for (int k = 0; k < kTerms; ++k) s -= std::log(k + x) / (k + x);
    double K = kTerms + x;
    double lk = std::log(K);
    double r = s + 0.5 * lk * lk - 0.5 * lk / K;
    // B_{2j}/(2j)! * d/ds[(s)_{2j-1} (K)^{-s-2j+1}] at s=1
    //   = B_{2j}/(2j) * (H_{2j-1} - log K) * K^{-2j}
    double K2 = 1.0 / (K * K), Kp = K2, H = 0.0;
    for (int j = 1; j <= 6; ++j) {
        for (int i = 2 * j - 1; i > 2 * (j - 1); --i)
            if (i >= 1) H += 1.0 / i;
        r += kB2j[j - 1] / (2.0 * j) * (H - lk) * Kp;
        Kp *= K2;
    }
    return r;
}

// zeta(s) for real s > 1.
inline double em_zeta(double s) {
    using namespace em_detail;
    double sum = 0.0;
    for (int k = 1; k < kTerms; ++k) sum += std::pow((double)k, -s);
    double K = kTerms;
    double r = sum + std::pow(K, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(K, -s);
    double fac = s, Kp = std::pow(K, -s - 1.0);
    for (int j = 1; j <= 6; ++j) {
        r += kB2j[j - 1] / ((2.0 * j) * (2.0 * j - 1.0)) * fac * Kp;
        // advance Pochhammer (s)_{2j+1}/(s)_{2j-1} = (s+2j-1)(s+2j)
        fac *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
        Kp /= (K * K);
    }
    return r;
}

// zeta'(s) for real s > 1 (termwise derivative of the same expansion).
inline double em_zeta_prime(double s) {
    using namespace em_detail;
    double sum = 0.0;
    for (int k = 2; k < kTerms; ++k) sum -= std::log((double)k) * std::pow((double)k, -s);
    double K = kTerms;
    double lk = std::log(K);
    double r = sum - std::pow(K, 1.0 - s) * (lk / (s - 1.0) + 1.0 / ((s - 1.0) * (s - 1.0))) -
               0.5 * lk * std::pow(K, -s);
    // d/ds [ B2j/(2j)! (s)_{2j-1} K^{-s-2j+1} ]
    double Kp = std::pow(K, -s - 1.0);
    for (int j = 1; j <= 6; ++j) {
        double poch = 1.0, dpoch = 0.0;
        for (int i = 0; i < 2 * j - 1; ++i) {
            dpoch = dpoch * (s + i) + poch;
            poch *= (s + i);
        }
        double c = kB2j[j - 1];
        double f2j = 1.0;
        for (int i = 2; i <= 2 * j; ++i) f2j *= i;
        r += c / f2j * (dpoch - poch * lk) * Kp;
        Kp /= (K * K);
    }
    return r;
}

}  // namespace ush
