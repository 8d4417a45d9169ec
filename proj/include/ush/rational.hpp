// Exact scalar arithmetic used everywhere below: arbitrary-precision
// integers and rationals (boost::multiprecision), plus a few helpers.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ush {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt pow_big(BigInt base, unsigned long e) {
    BigInt r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// N^k for possibly negative k, as an exact rational.
inline Rational pow_rat(long long N, long long k) {
    if (k >= 0) return Rational(pow_big(BigInt(N), (unsigned long)k));
    return Rational(1, pow_big(BigInt(N), (unsigned long)(-k)));
}

inline double to_double(const Rational& r) {
    return r.convert_to<double>();
}

inline std::string rat_str(const Rational& r) {
    return r.str();
}

// Legendre symbol (a/p) for odd prime p; returns -1, 0, 1.
inline int legendre_symbol(long long a, long long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    long long r = 1, base = a, e = (p - 1) / 2;
    while (e) {
        if (e & 1) r = (r * base) % p;
        base = (base * base) % p;
        e >>= 1;
    }
    return r == 1 ? 1 : (r == p - 1 ? -1 : 0);
}

// Kronecker symbol (a/n), n any nonzero integer.
inline int kronecker_symbol(long long a, long long n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    while (n % 2 == 0) {
        n /= 2;
        long long am = ((a % 8) + 8) % 8;
        if (am % 2 == 0) return 0;
        if (am == 3 || am == 5) result = -result;
    }
    a %= n;
    if (a < 0) a += n;
    // now n odd positive: euclidean quadratic reciprocity loop
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long long nm = n % 8;
            if (nm == 3 || nm == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

inline bool is_prime_ll(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Smallest prime factor; trial division (inputs here are small).
inline long long smallest_factor(long long n) {
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return d;
    return n;
}

// Exact harmonic number H_n = sum_{i=1..n} 1/i.
inline Rational harmonic(long long n) {
    Rational h = 0;
    for (long long i = 1; i <= n; ++i) h += Rational(1, i);
    return h;
}

}  // namespace ush
