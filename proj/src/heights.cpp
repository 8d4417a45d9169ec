#include "ush/heights.hpp"

#include <sstream>

namespace ush {

namespace {

// L'_f(0,eta)/L_f(0,eta) expanded through the shift at n = 0:
//   -L(1,eta) + (gamma + log 2pi)[F:Q] - log|d_F|
HeightFormula l_at_zero_expanded(const FieldData& field) {
    HeightFormula f;
    f.lterms[{1, 1}] = Rational(-1);
    f.sym = functional_equation_correction(field, 0);
    return f;
}

SymbolicValue deg_times(const FieldData& field, Rational one, Rational gamma, Rational log2,
                        Rational logpi) {
    SymbolicValue v;
    Rational d(field.degree);
    v.rat = one * d;
    v.euler = gamma * d;
    if (log2 != 0) v.logs[2] = log2 * d;
    v.log_pi = logpi * d;
    v.prune();
    return v;
}

}  // namespace

std::string HeightFormula::str() const {
    std::ostringstream os;
    os << sym.str();
    for (const auto& [k, c] : lterms) os << " + (" << c.str() << ")*" << k.str();
    for (const auto& [k, c] : free) os << " + (" << c.str() << ")*" << k;
    return os.str();
}

HeightFormula modular_height_formula(const FieldData& field, int n, HeightForm form) {
    field.validate();
    if (n < 1) throw std::invalid_argument("modular height: n >= 1");
    HeightFormula f;
    for (int m2 = 1; m2 <= n; ++m2) f.lterms[{m2 + 1, (m2 + 1) % 2}] += Rational(2);
    f.sym += SymbolicValue::log_integer(field.rel_disc_norm, Rational(n - 1, 2));
    if (form == HeightForm::PreFunctionalEquation) {
        // -(2n gamma + 2n log 2pi - 2H_n + 1)[F:Q] + (n-1) L'_f(0)/L_f(0) + 2n log|d_F|
        f.sym += deg_times(field, Rational(2) * harmonic(n) - 1, Rational(-2 * n),
                           Rational(-2 * n), Rational(-2 * n));
        f += l_at_zero_expanded(field) * Rational(n - 1);
        f.sym += SymbolicValue::log_integer(field.abs_disc_f, Rational(2 * n));
    } else {
        // -((n+1) gamma + (n+1) log 2pi - 2H_n + 1)[F:Q] - (n-1) L(1,eta) + (n+1) log|d_F|
        f.sym += deg_times(field, Rational(2) * harmonic(n) - 1, Rational(-(n + 1)),
                           Rational(-(n + 1)), Rational(-(n + 1)));
        f.lterms[{1, 1}] += Rational(-(n - 1));
        f.sym += SymbolicValue::log_integer(field.abs_disc_f, Rational(n + 1));
    }
    f.prune();
    return f;
}

HeightFormula curve_height_formula(const FieldData& field) {
    // -2(gamma + log 2pi - 1/2)[F:Q] + 2 zeta'_F(2)/zeta_F(2) + 2 log|d_F|
    HeightFormula f;
    f.lterms[{2, 0}] = Rational(2);
    f.sym = deg_times(field, Rational(1), Rational(-2), Rational(-2), Rational(-2));
    f.sym += SymbolicValue::log_integer(field.abs_disc_f, Rational(2));
    f.prune();
    return f;
}

HeightFormula cm_point_height_formula(const FieldData& field) {
    // -L'_f(0,eta)/L_f(0,eta) - (1/2) log d_{E/F}
    HeightFormula f = l_at_zero_expanded(field) * Rational(-1);
    f.sym += SymbolicValue::log_integer(field.rel_disc_norm, Rational(-1, 2));
    f.prune();
    return f;
}

HeightFormula induction_bracket(const FieldData& field, int n) {
    if (n < 1) throw std::invalid_argument("induction bracket: n >= 1");
    // -(2 gamma + 2 log 2pi - 2/n)[F:Q] + 2 L(n+1,eta^{n+1}) + L'_f(0)/L_f(0)
    //   + (1/2) log d_{E/F} + 2 log|d_F|
    HeightFormula f;
    f.lterms[{n + 1, (n + 1) % 2}] = Rational(2);
    f.sym = deg_times(field, Rational(2, n), Rational(-2), Rational(-2), Rational(-2));
    f += l_at_zero_expanded(field);
    f.sym += SymbolicValue::log_integer(field.rel_disc_norm, Rational(1, 2));
    f.sym += SymbolicValue::log_integer(field.abs_disc_f, Rational(2));
    f.prune();
    return f;
}

HeightFormula c4_formula(const FieldData& field, int n) {
    if (n < 1) throw std::invalid_argument("c4: n >= 1");
    // [F:Q](2/n - gamma - log pi) + c0 + 2 sum_v (L'_v/L_v(n+1) - log|d_v|)
    //   + hZ - hX + LP
    HeightFormula f;
    f.sym = deg_times(field, Rational(2, n), Rational(-1), Rational(0), Rational(-1));
    // c0 = 2 L'(0,eta)/L(0,eta) + log|d_E / d_F|, complete L at 0:
    //   L'(0)/L(0) = L'_f(0)/L_f(0) - (1/2)[F:Q](gamma + log 4pi)
    f += l_at_zero_expanded(field) * Rational(2);
    f.sym += deg_times(field, Rational(0), Rational(-1), Rational(-2), Rational(-1));
    f.sym += SymbolicValue::log_integer(field.abs_disc_f);      // log|d_E/d_F| =
    f.sym += SymbolicValue::log_integer(field.rel_disc_norm);   //   log|d_F| + log d_{E/F}
    f.lterms[{n + 1, (n + 1) % 2}] += Rational(2);
    f.sym += SymbolicValue::log_integer(field.abs_disc_f, Rational(2));  // -2 sum log|d_v|
    f.free["hZ"] = Rational(1);
    f.free["hX"] = Rational(-1);
    f.free["LP"] = Rational(1);
    f.prune();
    return f;
}

std::vector<std::string> hypothesis_annotations(const FieldData& field, int n) {
    std::vector<std::string> notes;
    if (field.degree == 1) notes.push_back("F = Q: properness of the integral model unverified");
    if (n % 2 == 1) {
        if (((n + 1) / 2) % 2 == 0 || field.degree % 2 == 0)
            notes.push_back("lattice existence parity condition fails for odd n");
    }
    // tameness: ramified places must avoid residue characteristic 2 and
    // ramification of F/Q
    long long scan = 2;
    std::vector<long long> to_check = {2};
    if (field.mode == FieldMode::Rational) {
        for (long long p = 2; p <= field.D; ++p)
            if (is_prime_ll(p) && field.D % p == 0) to_check.push_back(p);
    } else if (field.mode == FieldMode::RealQuadratic) {
        for (long long p = 2; p <= field.m * field.d; ++p)
            if (is_prime_ll(p) && (field.m % p == 0 || field.d % p == 0)) to_check.push_back(p);
    } else {
        for (const auto& pe : field.table) to_check.push_back(pe.p);
    }
    (void)scan;
    std::sort(to_check.begin(), to_check.end());
    to_check.erase(std::unique(to_check.begin(), to_check.end()), to_check.end());
    for (long long p : to_check) {
        std::vector<LocalPlaceData> places;
        try {
            places = splitting_of(field, p);
        } catch (const std::exception&) {
            continue;
        }
        for (const auto& v : places)
            if (v.splitting == Splitting::Ramified && (v.p == 2 || v.e > 0))
                notes.push_back("place over p=" + std::to_string(p) +
                                " ramified in E but wild or ramified over Q");
    }
    return notes;
}

namespace {

LSeriesValue bind_l(const FieldData& field, const LKey& key, const PrecisionControls& prec) {
    int k = key.parity == 0 ? 2 : 1;
    return log_derivative_L(field, (double)key.s, k, prec.prime_bound, prec.precision);
}

HeightReport evaluate(const FieldData& field, std::string name, const HeightFormula& formula,
                      int n, const PrecisionControls& prec) {
    HeightReport rep;
    rep.name = std::move(name);
    rep.formula = formula;
    rep.symbolic_part = sv_to_numeric(formula.sym, std::min(prec.precision, 15));
    rep.total = rep.symbolic_part;
    rep.error_bound = 0.0;
    rep.rigorous = true;
    for (const auto& [key, coeff] : formula.lterms) {
        LTermBinding b;
        b.key = key;
        b.coeff = coeff;
        b.value = bind_l(field, key, prec);
        rep.total += to_double(coeff) * b.value.value;
        rep.error_bound += std::fabs(to_double(coeff)) * b.value.tail_bound;
        rep.rigorous = rep.rigorous && b.value.rigorous;
        rep.lterms.push_back(std::move(b));
    }
    if (!formula.free.empty())
        throw std::invalid_argument("cannot evaluate a formula with free height symbols");
    rep.annotations = hypothesis_annotations(field, n);
    return rep;
}

}  // namespace

HeightReport modular_height(const FieldData& field, int n, HeightForm form,
                            const PrecisionControls& prec) {
    std::string nm = std::string("modular-height n=") + std::to_string(n) +
                     (form == HeightForm::PreFunctionalEquation ? " (pre-FE)" : " (post-FE)");
    return evaluate(field, nm, modular_height_formula(field, n, form), n, prec);
}

HeightReport cm_point_height(const FieldData& field, const PrecisionControls& prec) {
    return evaluate(field, "cm-point-height", cm_point_height_formula(field), 1, prec);
}

InductionCheck induction_step_check(const FieldData& field, int n, const PrecisionControls& prec) {
    if (n < 2) throw std::invalid_argument("induction check: n >= 2");
    InductionCheck out;
    HeightFormula lhs = modular_height_formula(field, n, HeightForm::PreFunctionalEquation) -
                        modular_height_formula(field, n - 1, HeightForm::PreFunctionalEquation);
    out.difference = lhs - induction_bracket(field, n);
    out.symbolic_equal = out.difference.is_zero();
    if (!out.symbolic_equal) {
        double v = sv_to_numeric(out.difference.sym);
        for (const auto& [key, coeff] : out.difference.lterms) {
            LSeriesValue l = bind_l(field, key, prec);
            v += to_double(coeff) * l.value;
        }
        out.numeric_difference = v;
    }
    return out;
}

}  // namespace ush
