// Field data for the CM extension E/F, splitting of rational primes, the
// incomplete Hecke L-function log-derivatives with tail bounds, the
// functional-equation shift, and the named constants c0/c1/c3/c4.
//
// Built-in modes: F = Q with E = Q(sqrt(-D)), and F = Q(sqrt m) (m = 1 mod 4
// squarefree) with E = F(sqrt(-d)) for d squarefree, odd, coprime to m.
// Everything else is table-driven.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ush/localfield.hpp"
#include "ush/ratfunc.hpp"
#include "ush/symbolic.hpp"

namespace ush {

enum class FieldMode { Rational, RealQuadratic, Table };

struct PlaceEntry {
    long long p;
    long long Nv;
    Splitting splitting;
    int e;
};

struct FieldData {
    FieldMode mode = FieldMode::Rational;
    int degree = 1;
    long long abs_disc_f = 1;    // |d_F|
    long long rel_disc_norm = 1; // d_{E/F} = norm of the relative discriminant
    long long D = 1;             // rational mode: E = Q(sqrt(-D))
    long long m = 0, d = 0;      // real-quadratic mode: F = Q(sqrt m), E = F(sqrt(-d))
    std::vector<PlaceEntry> table;
    long long table_bound = 0;

    static FieldData imaginary_quadratic(long long D);
    static FieldData real_quadratic(long long m, long long d);
    void validate() const;
    std::string describe() const;
};

// Places of F above p with their splitting in E/F.
std::vector<LocalPlaceData> splitting_of(const FieldData& field, long long p);

// Local factor L_v(s, eta_v^k) as a rational function of X = N^{-s}:
// (1-X)^{-1}, (1+X)^{-1}, or 1.
RationalFunctionX euler_factor(const LocalPlaceData& place, int k);

struct LSeriesValue {
    double value = 0.0;
    double tail_bound = 0.0;
    bool rigorous = false;
};

inline constexpr long long kDefaultPrimeBound = 1000000;
inline constexpr int kDefaultPrecision = 12;

// L'_f(s, eta^k)/L_f(s, eta^k).  s > 1: truncated Euler product with an
// integral-comparison tail (rigorous).  s = 1, k odd: finite character sums
// against Hurwitz-zeta data when F = Q (rigorous); truncated Euler product
// with a heuristic tail otherwise (rigorous = false).
LSeriesValue log_derivative_L(const FieldData& field, double s, int k,
                              long long prime_bound = kDefaultPrimeBound,
                              int precision = kDefaultPrecision);

// Independent route for the k-even case: per-place closed-form local
// log-derivatives of the Dedekind zeta of F summed over the same table.
LSeriesValue dedekind_zeta_log_derivative(const FieldData& field, double s,
                                          long long prime_bound = kDefaultPrimeBound);

// L'_f(-n)/L_f(-n) = -L'_f(n+1)/L_f(n+1) + (-H_n + log 2pi + gamma)[F:Q] - log|d_F|.
struct ShiftedLValue {
    SymbolicValue symbolic;   // the correction term
    Rational l_coeff;         // always -1
    LSeriesValue input;       // the value at n+1
    double value() const { return sv_to_numeric(symbolic) + to_double(l_coeff) * input.value; }
};
ShiftedLValue functional_equation_shift(const FieldData& field, long long n,
                                        const LSeriesValue& at_n_plus_1);
SymbolicValue functional_equation_correction(const FieldData& field, long long n);

enum class NamedConstant { C0, C1, C3, C4Partial, ArchComparison };

struct ConstantValue {
    SymbolicValue symbolic;
    Rational l1_coeff;        // coefficient of L'_f(1,eta)/L_f(1,eta)
    Rational ln1_coeff;       // coefficient of L'_f(n+1,eta^{n+1})/L_f(n+1,eta^{n+1})
    double numeric = 0.0;
    double tail = 0.0;
    bool rigorous = true;
};

// kind C0/C1/C4Partial need inputs = {L at n+1 (C4 only), L at 1}; C3 and
// ArchComparison are purely symbolic.
ConstantValue constant_c(NamedConstant kind, const FieldData& field, long long n,
                         const std::vector<LSeriesValue>& inputs);

}  // namespace ush
