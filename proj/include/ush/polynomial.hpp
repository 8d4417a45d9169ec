// Dense univariate polynomials over the exact rationals.
#pragma once

#include <algorithm>
#include <vector>

#include "ush/rational.hpp"

namespace ush {

struct Poly {
    std::vector<Rational> c;  // c[i] multiplies X^i; normalized: no trailing zeros

    Poly() = default;
    explicit Poly(Rational constant) {
        if (constant != 0) c.push_back(constant);
    }
    static Poly monomial(Rational coef, size_t deg) {
        Poly p;
        if (coef != 0) {
            p.c.assign(deg + 1, Rational(0));
            p.c[deg] = coef;
        }
        return p;
    }

    bool is_zero() const { return c.empty(); }
    long long degree() const { return (long long)c.size() - 1; }  // -1 for zero

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    Rational eval(const Rational& x) const {
        Rational v = 0;
        for (size_t i = c.size(); i-- > 0;) v = v * x + c[i];
        return v;
    }

    double eval_double(double x) const {
        double v = 0;
        for (size_t i = c.size(); i-- > 0;) v = v * x + to_double(c[i]);
        return v;
    }

    Poly derivative() const {
        Poly d;
        if (c.size() <= 1) return d;
        d.c.resize(c.size() - 1);
        for (size_t i = 1; i < c.size(); ++i) d.c[i - 1] = c[i] * Rational((long long)i);
        return d;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), Rational(0));
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), Rational(0));
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
        r.trim();
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        return r;
    }
    Poly operator*(const Rational& s) const {
        Poly r = *this;
        if (s == 0) return Poly();
        for (auto& x : r.c) x *= s;
        return r;
    }
    bool operator==(const Poly& o) const { return c == o.c; }
};

// Remainder of a by b (b nonzero). Quotient discarded.
inline Poly poly_rem(Poly a, const Poly& b) {
    while (!a.is_zero() && a.degree() >= b.degree()) {
        Rational q = a.c.back() / b.c.back();
        size_t shift = a.c.size() - b.c.size();
        for (size_t i = 0; i < b.c.size(); ++i) a.c[i + shift] -= q * b.c[i];
        a.trim();
    }
    return a;
}

// Monic gcd over Q[X].
inline Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_rem(a, b);
        a = b;
        b = r;
    }
    if (!a.is_zero() && a.c.back() != 1) {
        Rational lead = a.c.back();
        for (auto& x : a.c) x /= lead;
    }
    return a;
}

// Exact division (throws if not divisible).
inline Poly poly_div_exact(Poly a, const Poly& b) {
    Poly q;
    if (a.is_zero()) return q;
    q.c.assign(a.c.size() - b.c.size() + 1, Rational(0));
    while (!a.is_zero() && a.degree() >= b.degree()) {
        Rational qc = a.c.back() / b.c.back();
        size_t shift = a.c.size() - b.c.size();
        q.c[shift] = qc;
        for (size_t i = 0; i < b.c.size(); ++i) a.c[i + shift] -= qc * b.c[i];
        a.trim();
    }
    if (!a.is_zero()) throw std::logic_error("poly_div_exact: not divisible");
    return q;
}

}  // namespace ush
