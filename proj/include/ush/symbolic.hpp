// Exact values over the transcendental basis {1} u {log p : p prime} u {log pi, gamma}.
// log(2 pi) and log(4 pi) are always kept expanded as log 2 + log pi etc.,
// so cancellations in the height formulas are exact.
#pragma once

#include <cmath>
#include <map>
#include <sstream>
#include <vector>

#include "ush/rational.hpp"

namespace ush {

struct SymbolicValue {
    Rational rat;                       // coefficient of 1
    std::map<long long, Rational> logs; // prime -> coefficient of log p
    Rational log_pi;                    // coefficient of log pi
    Rational euler;                     // coefficient of gamma

    SymbolicValue() : rat(0), log_pi(0), euler(0) {}
    explicit SymbolicValue(Rational r) : rat(std::move(r)), log_pi(0), euler(0) {}

    static SymbolicValue log_prime(long long p, Rational coeff = Rational(1)) {
        SymbolicValue v;
        if (coeff != 0) v.logs[p] = std::move(coeff);
        return v;
    }
    static SymbolicValue pi_log(Rational coeff = Rational(1)) {
        SymbolicValue v;
        v.log_pi = std::move(coeff);
        return v;
    }
    static SymbolicValue euler_gamma(Rational coeff = Rational(1)) {
        SymbolicValue v;
        v.euler = std::move(coeff);
        return v;
    }
    // log of a positive integer, factored into the prime-log basis.
    static SymbolicValue log_integer(long long n, Rational coeff = Rational(1)) {
        if (n <= 0) throw std::invalid_argument("log_integer: n must be positive");
        SymbolicValue v;
        while (n > 1) {
            long long p = smallest_factor(n);
            long long e = 0;
            while (n % p == 0) { n /= p; ++e; }
            v.logs[p] += coeff * Rational(e);
        }
        v.prune();
        return v;
    }

    void prune() {
        for (auto it = logs.begin(); it != logs.end();)
            it = (it->second == 0) ? logs.erase(it) : std::next(it);
    }
    bool is_zero() const { return rat == 0 && logs.empty() && log_pi == 0 && euler == 0; }

    SymbolicValue& operator+=(const SymbolicValue& o) {
        rat += o.rat;
        for (const auto& [p, c] : o.logs) logs[p] += c;
        log_pi += o.log_pi;
        euler += o.euler;
        prune();
        return *this;
    }
    friend SymbolicValue operator+(SymbolicValue a, const SymbolicValue& b) { return a += b; }
    friend SymbolicValue operator-(SymbolicValue a, const SymbolicValue& b) {
        return a += b * Rational(-1);
    }
    SymbolicValue operator*(const Rational& s) const {
        SymbolicValue v;
        if (s == 0) return v;
        v.rat = rat * s;
        for (const auto& [p, c] : logs) v.logs[p] = c * s;
        v.log_pi = log_pi * s;
        v.euler = euler * s;
        return v;
    }
    bool operator==(const SymbolicValue& o) const {
        return rat == o.rat && logs == o.logs && log_pi == o.log_pi && euler == o.euler;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        auto emit = [&](const Rational& c, const std::string& sym) {
            if (c == 0) return;
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            Rational a = c > 0 ? c : Rational(-c);
            if (a != 1 || sym.empty()) os << a.str();
            if (!sym.empty()) {
                if (a != 1) os << "*";
                os << sym;
            }
            first = false;
        };
        emit(rat, "");
        for (const auto& [p, c] : logs) emit(c, "log" + std::to_string(p));
        emit(log_pi, "logpi");
        emit(euler, "gamma");
        return os.str();
    }
};

inline SymbolicValue sv_combine(const std::vector<SymbolicValue>& values,
                                const std::vector<Rational>& coeffs) {
    if (values.size() != coeffs.size())
        throw std::invalid_argument("sv_combine: length mismatch");
    SymbolicValue r;
    for (size_t i = 0; i < values.size(); ++i) r += values[i] * coeffs[i];
    return r;
}

namespace detail {
inline long double const_euler_gamma() { return 0.57721566490153286060651209008L; }
inline long double const_log_pi() { return 1.14472988584940017414342735135L; }
}  // namespace detail

// Numeric value with absolute error below 10^-digits (digits <= 15 with
// long double evaluation; larger requests are refused rather than silently
// degraded).
inline double sv_to_numeric(const SymbolicValue& v, int digits = 15) {
    if (digits < 1) throw std::invalid_argument("sv_to_numeric: digits >= 1 required");
    if (digits > 15) throw std::invalid_argument("sv_to_numeric: more than 15 digits unsupported");
    long double x = v.rat.convert_to<long double>();
    for (const auto& [p, c] : v.logs)
        x += c.convert_to<long double>() * std::log((long double)p);
    x += v.log_pi.convert_to<long double>() * detail::const_log_pi();
    x += v.euler.convert_to<long double>() * detail::const_euler_gamma();
    return (double)x;
}

// A value of the form N^{-half/2} * sym with half in {0,1}; carries the
// sqrt(N) denominators of the ramified-even and odd-different formulas
// without leaving exact arithmetic.
struct ScaledSymbolic {
    SymbolicValue sym;
    int half = 0;       // 0 or 1
    long long N = 0;    // meaningful only when half == 1

    ScaledSymbolic() = default;
    ScaledSymbolic(SymbolicValue s, int h, long long n) : sym(std::move(s)), half(h), N(n) {
        if (half != 0 && half != 1) throw std::invalid_argument("half must be 0 or 1");
    }
    static ScaledSymbolic plain(SymbolicValue s) { return ScaledSymbolic(std::move(s), 0, 0); }

    bool is_zero() const { return sym.is_zero(); }

    friend ScaledSymbolic operator+(const ScaledSymbolic& a, const ScaledSymbolic& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.half != b.half || (a.half == 1 && a.N != b.N))
            throw std::invalid_argument("ScaledSymbolic: incompatible scalings");
        return ScaledSymbolic(a.sym + b.sym, a.half, a.half ? a.N : b.N);
    }
    friend ScaledSymbolic operator-(const ScaledSymbolic& a, const ScaledSymbolic& b) {
        return a + (b * Rational(-1));
    }
    ScaledSymbolic operator*(const Rational& s) const {
        return ScaledSymbolic(sym * s, half, N);
    }
    bool operator==(const ScaledSymbolic& o) const {
        if (is_zero() && o.is_zero()) return true;
        return half == o.half && (half == 0 || N == o.N) && sym == o.sym;
    }
    double to_numeric(int digits = 15) const {
        double x = sv_to_numeric(sym, digits);
        if (half) x /= std::sqrt((double)N);
        return x;
    }
    std::string str() const {
        if (half == 0 || is_zero()) return sym.str();
        return "(" + sym.str() + ")/sqrt(" + std::to_string(N) + ")";
    }
};

}  // namespace ush
