// Rational functions in X = N^{-s}.
//
// All the local Whittaker closed forms live here after the rewriting
// N^{-(s+n)k} = X^k N^{-nk}.  Differentiation in s uses
// d/ds f(X) = -log N * X * f'(X), so the derivative at s = 0 is always an
// exact rational multiple of log N.
#pragma once

#include <numeric>

#include "ush/polynomial.hpp"

namespace ush {

struct PoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RationalFunctionX {
    Poly num, den;   // reduced: coprime, integer coefficients, content 1, den lead > 0
    long long base;  // N >= 2

    RationalFunctionX() : base(2) { den = Poly(Rational(1)); }
    RationalFunctionX(Poly n, Poly d, long long N) : num(std::move(n)), den(std::move(d)), base(N) {
        if (base < 2) throw std::invalid_argument("base must be >= 2");
        if (den.is_zero()) throw std::invalid_argument("zero denominator");
        reduce();
    }
    static RationalFunctionX constant(const Rational& c, long long N) {
        return RationalFunctionX(Poly(c), Poly(Rational(1)), N);
    }
    // N^{-(s+a)k} as a rational function of X: X^k * N^{-ak}   (k >= 0)
    static RationalFunctionX power_term(long long N, long long k, long long a) {
        return RationalFunctionX(Poly::monomial(pow_rat(N, -a * k), (size_t)k), Poly(Rational(1)), N);
    }

    void reduce() {
        if (num.is_zero()) {
            den = Poly(Rational(1));
            return;
        }
        Poly g = poly_gcd(num, den);
        if (g.degree() > 0) {
            num = poly_div_exact(num, g);
            den = poly_div_exact(den, g);
        }
        // clear rational content: make both integer, overall content 1, den lead > 0
        BigInt lcm = 1;
        for (const auto& x : num.c) lcm = boost::multiprecision::lcm(lcm, denominator(x));
        for (const auto& x : den.c) lcm = boost::multiprecision::lcm(lcm, denominator(x));
        for (auto& x : num.c) x *= Rational(lcm);
        for (auto& x : den.c) x *= Rational(lcm);
        BigInt g2 = 0;
        for (const auto& x : num.c) g2 = boost::multiprecision::gcd(g2, numerator(x));
        for (const auto& x : den.c) g2 = boost::multiprecision::gcd(g2, numerator(x));
        if (g2 > 1) {
            for (auto& x : num.c) x /= Rational(g2);
            for (auto& x : den.c) x /= Rational(g2);
        }
        if (den.c.back() < 0) {
            for (auto& x : num.c) x = -x;
            for (auto& x : den.c) x = -x;
        }
    }

    bool is_zero() const { return num.is_zero(); }
    bool is_constant() const { return num.degree() <= 0 && den.degree() <= 0; }

    friend RationalFunctionX operator+(const RationalFunctionX& a, const RationalFunctionX& b) {
        if (a.base != b.base) throw std::invalid_argument("base mismatch");
        return RationalFunctionX(a.num * b.den + b.num * a.den, a.den * b.den, a.base);
    }
    friend RationalFunctionX operator-(const RationalFunctionX& a, const RationalFunctionX& b) {
        if (a.base != b.base) throw std::invalid_argument("base mismatch");
        return RationalFunctionX(a.num * b.den - b.num * a.den, a.den * b.den, a.base);
    }
    friend RationalFunctionX operator*(const RationalFunctionX& a, const RationalFunctionX& b) {
        if (a.base != b.base) throw std::invalid_argument("base mismatch");
        return RationalFunctionX(a.num * b.num, a.den * b.den, a.base);
    }
    RationalFunctionX operator*(const Rational& s) const {
        return RationalFunctionX(num * s, den, base);
    }
    friend RationalFunctionX operator/(const RationalFunctionX& a, const RationalFunctionX& b) {
        if (b.is_zero()) throw std::invalid_argument("division by zero function");
        return RationalFunctionX(a.num * b.den, a.den * b.num, a.base);
    }
    bool operator==(const RationalFunctionX& o) const {
        return base == o.base && num == o.num && den == o.den;
    }

    // Value at X: exact.
    Rational eval_x(const Rational& x) const {
        Rational d = den.eval(x);
        if (d == 0) throw PoleError("pole at requested point");
        return num.eval(x) / d;
    }
    // Value at integer s (X = N^{-s} is rational there).
    Rational eval_at_int_s(long long s) const { return eval_x(pow_rat(base, -s)); }
    // Numeric twin for non-integer s.
    double eval_at_real_s(double s) const {
        double x = std::pow((double)base, -s);
        double d = den.eval_double(x);
        if (d == 0.0) throw PoleError("pole at requested point");
        return num.eval_double(x) / d;
    }

    // d/ds at s=0 equals (returned value) * log N, exactly.
    Rational derivative_at_s0_logN_coeff() const {
        Rational d1 = den.eval(Rational(1));
        if (d1 == 0) throw PoleError("pole at X = 1");
        Rational n1 = num.eval(Rational(1));
        Rational np = num.derivative().eval(Rational(1));
        Rational dp = den.derivative().eval(Rational(1));
        // f'(X) at 1 = (num' den - num den')/den^2 ; d/ds = -logN * X * f'(X)
        return -(np * d1 - n1 * dp) / (d1 * d1);
    }
};

}  // namespace ush
