#include "ush/numberfield.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ush/archimedean.hpp"
#include "ush/euler_maclaurin.hpp"

namespace ush {

namespace {

bool squarefree(long long n) {
    for (long long d = 2; d * d <= n; ++d)
        if (n % (d * d) == 0) return false;
    return true;
}

std::vector<long long> primes_up_to(long long B) {
    std::vector<bool> sieve((size_t)B + 1, true);
    std::vector<long long> out;
    for (long long i = 2; i <= B; ++i) {
        if (!sieve[(size_t)i]) continue;
        out.push_back(i);
        for (long long j = i * i; j <= B; j += i) sieve[(size_t)j] = false;
    }
    return out;
}

}  // namespace

FieldData FieldData::imaginary_quadratic(long long D) {
    if (D < 1 || !squarefree(D))
        throw std::invalid_argument("imaginary quadratic mode: D must be positive squarefree");
    FieldData f;
    f.mode = FieldMode::Rational;
    f.degree = 1;
    f.abs_disc_f = 1;
    f.D = D;
    long long negD = -D;
    bool disc_is_D = ((negD % 4) + 4) % 4 == 1;
    f.rel_disc_norm = disc_is_D ? D : 4 * D;
    return f;
}

FieldData FieldData::real_quadratic(long long m, long long d) {
    if (m < 2 || !squarefree(m) || m % 4 != 1)
        throw std::invalid_argument("real quadratic mode: m must be squarefree, m = 1 mod 4");
    if (d < 1 || !squarefree(d) || d % 2 == 0 || std::gcd(m, d) != 1)
        throw std::invalid_argument(
            "real quadratic mode: d must be odd squarefree and coprime to m");
    FieldData f;
    f.mode = FieldMode::RealQuadratic;
    f.degree = 2;
    f.abs_disc_f = m;
    f.m = m;
    f.d = d;
    // d_{E/F} = prod over ramified places of N_v^{w_v}
    long long rel = 1;
    for (long long p = 3; p <= d; p += 2) {
        if (!is_prime_ll(p) || d % p != 0) continue;
        rel *= p * p;  // split in F: two tame places N=p; inert: one with N=p^2
    }
    long long negd = ((-d) % 8 + 8) % 8;
    if (negd == 3 || negd == 7) {
        long long N2 = (kronecker_symbol(m, 2) == -1) ? 4 : 2;
        int places = (kronecker_symbol(m, 2) == 1) ? 2 : 1;
        for (int i = 0; i < places; ++i) rel *= N2 * N2;  // wild: w = 2
    }
    f.rel_disc_norm = rel;
    return f;
}

void FieldData::validate() const {
    if (degree < 1) throw std::invalid_argument("field degree must be positive");
    if (abs_disc_f < 1) throw std::invalid_argument("|d_F| must be positive");
    if (rel_disc_norm < 1) throw std::invalid_argument("d_{E/F} must be positive");
    if (mode == FieldMode::Table) {
        long long seen_bound = table_bound;
        for (const auto& pe : table) {
            if (!is_prime_ll(pe.p)) throw std::invalid_argument("table: p must be prime");
            if (pe.p > seen_bound) throw std::invalid_argument("table: place beyond bound");
            LocalPlaceData(pe.Nv, pe.splitting, pe.e, pe.p);  // runs the local invariants
        }
        // discriminant consistency at the listed primes
        for (const auto& pe : table) {
            long long expected = 1, q = abs_disc_f;
            while (q % pe.p == 0) { q /= pe.p; expected *= pe.p; }
            long long got = 1;
            for (const auto& o : table)
                if (o.p == pe.p)
                    for (int i = 0; i < o.e; ++i) got *= o.Nv;
            if (got != expected)
                throw std::invalid_argument("table: different exponents inconsistent with disc_F");
        }
    }
}

std::string FieldData::describe() const {
    switch (mode) {
        case FieldMode::Rational: return "Q, E = Q(sqrt(-" + std::to_string(D) + "))";
        case FieldMode::RealQuadratic:
            return "Q(sqrt" + std::to_string(m) + "), E = F(sqrt(-" + std::to_string(d) + "))";
        default: return "table-driven field";
    }
}

std::vector<LocalPlaceData> splitting_of(const FieldData& field, long long p) {
    if (!is_prime_ll(p)) throw std::invalid_argument("splitting_of: p must be prime");
    std::vector<LocalPlaceData> out;
    switch (field.mode) {
        case FieldMode::Rational: {
            long long D = field.D;
            if (p == 2) {
                long long negd = ((-D) % 8 + 8) % 8;
                if (D % 2 == 0)
                    out.emplace_back(2, Splitting::Ramified, 0, 2, true);
                else if (negd == 1)
                    out.emplace_back(2, Splitting::Split, 0, 2);
                else if (negd == 5)
                    out.emplace_back(2, Splitting::Inert, 0, 2);
                else
                    out.emplace_back(2, Splitting::Ramified, 0, 2, true);
            } else if (D % p == 0) {
                out.emplace_back(p, Splitting::Ramified, 0, p);
            } else {
                int leg = legendre_symbol(((-D) % p + p) % p, p);
                out.emplace_back(p, leg == 1 ? Splitting::Split : Splitting::Inert, 0, p);
            }
            return out;
        }
        case FieldMode::RealQuadratic: {
            long long m = field.m, d = field.d;
            int krm = (p == 2) ? kronecker_symbol(m, 2) : legendre_symbol(m % p, p);
            if (p == 2) {
                long long negd = ((-d) % 8 + 8) % 8;
                Splitting sp;
                if (negd == 1)
                    sp = Splitting::Split;
                else if (negd == 5)
                    sp = (krm == -1) ? Splitting::Split : Splitting::Inert;
                else
                    sp = Splitting::Ramified;
                long long Nv = (krm == -1) ? 4 : 2;
                int count = (krm == 1) ? 2 : 1;
                for (int i = 0; i < count; ++i)
                    out.emplace_back(Nv, sp, 0, 2, sp == Splitting::Ramified);
                return out;
            }
            if (m % p == 0) {  // ramified in F/Q: one place, N = p, e = 1
                Splitting sp = (d % p == 0) ? Splitting::Ramified
                               : (legendre_symbol(((-d) % p + p) % p, p) == 1 ? Splitting::Split
                                                                              : Splitting::Inert);
                if (sp == Splitting::Ramified)
                    throw std::invalid_argument("built-in mode requires gcd(m, d) = 1");
                out.emplace_back(p, sp, 1, p);
                return out;
            }
            if (d % p == 0) {  // ramified in E/F (tame)
                if (krm == 1) {
                    out.emplace_back(p, Splitting::Ramified, 0, p);
                    out.emplace_back(p, Splitting::Ramified, 0, p);
                } else {
                    out.emplace_back(p * p, Splitting::Ramified, 0, p);
                }
                return out;
            }
            if (krm == 1) {
                int leg = legendre_symbol(((-d) % p + p) % p, p);
                Splitting sp = (leg == 1) ? Splitting::Split : Splitting::Inert;
                out.emplace_back(p, sp, 0, p);
                out.emplace_back(p, sp, 0, p);
            } else {
                // -d is always a square in the quadratic residue field (p odd)
                out.emplace_back(p * p, Splitting::Split, 0, p);
            }
            return out;
        }
        case FieldMode::Table: {
            bool found = false;
            for (const auto& pe : field.table)
                if (pe.p == p) {
                    out.emplace_back(pe.Nv, pe.splitting, pe.e, pe.p, true);
                    found = true;
                }
            if (!found && p > field.table_bound)
                throw std::invalid_argument("table-driven field: prime beyond table bound");
            // a prime below the bound with no entries: split everywhere with
            // trivial data would be ambiguous; require explicit listing
            if (!found)
                throw std::invalid_argument("table-driven field: prime missing from table");
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

RationalFunctionX euler_factor(const LocalPlaceData& place, int k) {
    if (k < 0) throw std::invalid_argument("euler_factor: k >= 0 required");
    long long N = place.N;
    Poly one(Rational(1));
    int eps;
    if (place.splitting == Splitting::Split)
        eps = 1;
    else if (place.splitting == Splitting::Inert)
        eps = (k % 2 == 0) ? 1 : -1;
    else
        eps = (k % 2 == 0) ? 1 : 0;
    if (eps == 0) return RationalFunctionX(one, one, N);
    Poly den = one;
    den = den + Poly::monomial(Rational(-eps), 1);
    return RationalFunctionX(one, den, N);
}

namespace {

int eta_eps(const LocalPlaceData& place, int k) {
    if (place.splitting == Splitting::Split) return 1;
    if (place.splitting == Splitting::Inert) return (k % 2 == 0) ? 1 : -1;
    return (k % 2 == 0) ? 1 : 0;
}

double tail_integral_bound(int degree, double s, long long B) {
    // sum_{N_v > B} log(N_v) N_v^{-s} (1 - N_v^{-s})^{-1}
    //   <= degree/(1-B^{-s}) * ( int_B^inf t^{-s} log t dt + B^{-s} log B )
    double lb = std::log((double)B);
    double integral = std::pow((double)B, 1.0 - s) * (lb / (s - 1.0) + 1.0 / ((s - 1.0) * (s - 1.0)));
    return degree / (1.0 - std::pow((double)B, -s)) * (integral + std::pow((double)B, -s) * lb);
}

LSeriesValue character_sum_at_one(const FieldData& field) {
    // F = Q, chi the quadratic character of E = Q(sqrt(-D))
    long long D = field.D;
    long long negD = -D;
    long long disc = (((negD % 4) + 4) % 4 == 1) ? negD : 4 * negD;
    long long q = -disc;  // conductor
    double L = 0.0, dL = 0.0;
    for (long long a = 1; a < q; ++a) {
        int chi = kronecker_symbol(disc, a);
        if (chi == 0) continue;
        double x = (double)a / (double)q;
        L += chi * em_T1(x);
        dL += chi * em_dT1(x);
    }
    L /= (double)q;
    dL /= (double)q;
    LSeriesValue v;
    v.value = -std::log((double)q) + dL / L;
    v.tail_bound = 1e-11 * (1.0 + std::fabs(v.value));
    v.rigorous = true;
    return v;
}

}  // namespace

LSeriesValue log_derivative_L(const FieldData& field, double s, int k, long long prime_bound,
                              int precision) {
    field.validate();
    if (precision < 1) throw std::invalid_argument("precision must be >= 1");
    if (s < 1.0) throw std::domain_error("log_derivative_L diverges for s < 1");
    if (s == 1.0 && k % 2 == 0)
        throw std::domain_error("L_f(s, trivial) has a pole at s = 1");
    if (s == 1.0 && field.mode == FieldMode::Rational) return character_sum_at_one(field);

    std::vector<long long> primes = primes_up_to(prime_bound);
    double sum = 0.0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : sum)
#endif
    for (long long i = 0; i < (long long)primes.size(); ++i) {
        long long p = primes[(size_t)i];
        for (const auto& place : splitting_of(field, p)) {
            int eps = eta_eps(place, k);
            if (eps == 0) continue;
            double logN = std::log((double)place.N);
            double x = std::pow((double)place.N, -s);
            double xm = x;
            int sign = eps;
            for (int m2 = 1; m2 < 400 && xm > 1e-19; ++m2) {
                sum -= sign * logN * xm;
                xm *= x;
                sign *= eps;
            }
        }
    }
    LSeriesValue v;
    v.value = sum;
    if (s > 1.0) {
        v.tail_bound = tail_integral_bound(field.degree, s, prime_bound);
        v.rigorous = true;
    } else {
        // conditional convergence at s = 1: heuristic error only
        double heur = field.degree * std::log((double)prime_bound) / std::sqrt((double)prime_bound);
        v.tail_bound = heur;
        v.rigorous = false;
    }
    return v;
}

LSeriesValue dedekind_zeta_log_derivative(const FieldData& field, double s, long long prime_bound) {
    if (s <= 1.0) throw std::domain_error("zeta log-derivative needs s > 1");
    std::vector<long long> primes = primes_up_to(prime_bound);
    double sum = 0.0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : sum)
#endif
    for (long long i = 0; i < (long long)primes.size(); ++i) {
        long long p = primes[(size_t)i];
        for (const auto& place : splitting_of(field, p)) {
            // zeta_{F,v} = (1-N^{-s})^{-1}: L'/L = -log N N^{-s}/(1-N^{-s})
            double x = std::pow((double)place.N, -s);
            sum -= std::log((double)place.N) * x / (1.0 - x);
        }
    }
    LSeriesValue v;
    v.value = sum;
    v.tail_bound = tail_integral_bound(field.degree, s, prime_bound);
    v.rigorous = true;
    return v;
}

SymbolicValue functional_equation_correction(const FieldData& field, long long n) {
    // (-H_n + log 2pi + gamma) [F:Q] - log|d_F|
    SymbolicValue c;
    c.rat = -harmonic(n) * Rational(field.degree);
    c.logs[2] = Rational(field.degree);
    c.log_pi = Rational(field.degree);
    c.euler = Rational(field.degree);
    c += SymbolicValue::log_integer(field.abs_disc_f, Rational(-1));
    c.prune();
    return c;
}

ShiftedLValue functional_equation_shift(const FieldData& field, long long n,
                                        const LSeriesValue& at_n_plus_1) {
    if (n < 0) throw std::invalid_argument("shift: n >= 0 required");
    ShiftedLValue out;
    out.symbolic = functional_equation_correction(field, n);
    out.l_coeff = Rational(-1);
    out.input = at_n_plus_1;
    return out;
}

ConstantValue constant_c(NamedConstant kind, const FieldData& field, long long n,
                         const std::vector<LSeriesValue>& inputs) {
    ConstantValue out;
    long long deg = field.degree;
    auto need = [&](size_t count) {
        if (inputs.size() < count)
            throw std::invalid_argument("constant_c: missing L-series input");
    };
    switch (kind) {
        case NamedConstant::C3:
            out.symbolic = c3_form_rhs(n);
            out.numeric = sv_to_numeric(out.symbolic);
            return out;
        case NamedConstant::ArchComparison:
            out.symbolic = arch_comparison_constant(n);
            out.numeric = sv_to_numeric(out.symbolic);
            return out;
        case NamedConstant::C1: {
            // 2 L'_f(0,eta)/L_f(0,eta) + log|d_E/d_F|, with the value at 0
            // routed through the functional equation from inputs[0] = L at 1
            need(1);
            SymbolicValue c = functional_equation_correction(field, 0) * Rational(2);
            c += SymbolicValue::log_integer(field.abs_disc_f);
            c += SymbolicValue::log_integer(field.rel_disc_norm);
            out.symbolic = c;
            out.l1_coeff = Rational(-2);
            out.numeric = sv_to_numeric(c) - 2.0 * inputs[0].value;
            out.tail = 2.0 * inputs[0].tail_bound;
            out.rigorous = inputs[0].rigorous;
            return out;
        }
        case NamedConstant::C0: {
            need(1);
            ConstantValue c1 = constant_c(NamedConstant::C1, field, n, inputs);
            // L'(0)/L(0) = L'_f(0)/L_f(0) - (1/2)[F:Q](gamma + log 4pi)
            SymbolicValue corr;
            corr.euler = Rational(-deg);
            corr.logs[2] = Rational(-2 * deg);
            corr.log_pi = Rational(-deg);
            out = c1;
            out.symbolic += corr;
            out.numeric = sv_to_numeric(out.symbolic) - 2.0 * inputs[0].value;
            return out;
        }
        case NamedConstant::C4Partial: {
            // [F:Q](2/n - gamma - log pi) + c0 + 2 sum_v (L'_v/L_v(n+1) - log|d_v|)
            need(2);
            if (n < 1) throw std::invalid_argument("c4: n >= 1 required");
            ConstantValue c0 = constant_c(NamedConstant::C0, field, n, {inputs[1]});
            SymbolicValue c;
            c.rat = Rational(2) / Rational(n) * Rational(deg);
            c.euler = Rational(-deg);
            c.log_pi = Rational(-deg);
            c += c0.symbolic;
            c += SymbolicValue::log_integer(field.abs_disc_f, Rational(2));
            out.symbolic = c;
            out.l1_coeff = Rational(-2);
            out.ln1_coeff = Rational(2);
            out.numeric = sv_to_numeric(c) - 2.0 * inputs[1].value + 2.0 * inputs[0].value;
            out.tail = 2.0 * inputs[0].tail_bound + 2.0 * inputs[1].tail_bound;
            out.rigorous = inputs[0].rigorous && inputs[1].rigorous;
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace ush
