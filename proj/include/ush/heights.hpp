// Global height formulas: the modular height of the n-dimensional variety in
// both forms (before/after the functional equation), the CM-point height,
// the induction bracket, and the constant-term identity they all come from.
//
// Formulas are kept exact as a symbolic part over {1, log p, log pi, gamma}
// plus a Q-linear combination of abstract L-symbols L'_f(s, eta^k)/L_f(s,
// eta^k); L'_f(0,eta)/L_f(0,eta) is always routed through the
// functional-equation shift, never used as a symbol.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "ush/numberfield.hpp"

namespace ush {

struct LKey {
    long long s;  // evaluation point (s >= 1)
    int parity;   // k mod 2 of eta^k
    bool operator<(const LKey& o) const { return std::tie(s, parity) < std::tie(o.s, o.parity); }
    bool operator==(const LKey& o) const { return s == o.s && parity == o.parity; }
    std::string str() const {
        return std::string("L'/L(") + std::to_string(s) + (parity ? ",eta)" : ",triv)");
    }
};

struct HeightFormula {
    SymbolicValue sym;
    std::map<LKey, Rational> lterms;
    std::map<std::string, Rational> free;  // abstract height symbols (hZ, hX, LP)

    void prune() {
        for (auto it = lterms.begin(); it != lterms.end();)
            it = (it->second == 0) ? lterms.erase(it) : std::next(it);
        for (auto it = free.begin(); it != free.end();)
            it = (it->second == 0) ? free.erase(it) : std::next(it);
    }
    HeightFormula& operator+=(const HeightFormula& o) {
        sym += o.sym;
        for (const auto& [k, c] : o.lterms) lterms[k] += c;
        for (const auto& [k, c] : o.free) free[k] += c;
        prune();
        return *this;
    }
    friend HeightFormula operator+(HeightFormula a, const HeightFormula& b) { return a += b; }
    friend HeightFormula operator-(HeightFormula a, const HeightFormula& b) {
        return a += b * Rational(-1);
    }
    HeightFormula operator*(const Rational& c) const {
        HeightFormula r;
        r.sym = sym * c;
        for (const auto& [k, v] : lterms) r.lterms[k] = v * c;
        for (const auto& [k, v] : free) r.free[k] = v * c;
        r.prune();
        return r;
    }
    bool operator==(const HeightFormula& o) const {
        return sym == o.sym && lterms == o.lterms && free == o.free;
    }
    bool is_zero() const { return sym.is_zero() && lterms.empty() && free.empty(); }
    std::string str() const;
};

enum class HeightForm { PreFunctionalEquation, PostFunctionalEquation };

// Theorem-level formulas (exact, L-symbols abstract).
HeightFormula modular_height_formula(const FieldData& field, int n, HeightForm form);
HeightFormula curve_height_formula(const FieldData& field);        // the n = 1 base case
HeightFormula cm_point_height_formula(const FieldData& field);     // height of the CM cycle
HeightFormula induction_bracket(const FieldData& field, int n);    // h(X_n) - h(Z_{n-1})

// The constant c4 (height terms as free symbols hZ, hX, LP).  The
// constant-term identity is c4 + sum_{v finite} log|d_v| = 0, i.e.
// c4 = log|d_F|; solving it for hX after substituting the CM height for LP
// reproduces the induction bracket.
HeightFormula c4_formula(const FieldData& field, int n);

struct LTermBinding {
    LKey key;
    Rational coeff;
    LSeriesValue value;
};

struct HeightReport {
    std::string name;
    HeightFormula formula;
    std::vector<LTermBinding> lterms;
    double symbolic_part = 0.0;
    double total = 0.0;
    double error_bound = 0.0;
    bool rigorous = true;
    std::vector<std::string> annotations;  // unverified hypotheses
};

struct PrecisionControls {
    long long prime_bound = kDefaultPrimeBound;
    int precision = kDefaultPrecision;
};

HeightReport modular_height(const FieldData& field, int n, HeightForm form,
                            const PrecisionControls& prec = {});
HeightReport cm_point_height(const FieldData& field, const PrecisionControls& prec = {});

struct InductionCheck {
    bool symbolic_equal = false;
    HeightFormula difference;  // modular(n) - modular(n-1) - bracket(n)
    double numeric_difference = 0.0;
};
InductionCheck induction_step_check(const FieldData& field, int n,
                                    const PrecisionControls& prec = {});

// Hypothesis annotations for a height report (properness, lattice existence,
// tameness of ramified places).
std::vector<std::string> hypothesis_annotations(const FieldData& field, int n);

}  // namespace ush
