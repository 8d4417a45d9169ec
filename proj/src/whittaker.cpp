#include "ush/whittaker.hpp"

namespace ush {

namespace {

// log N_v as a symbolic value (N = p^f gives f * log p).
SymbolicValue sym_logN(long long N, const Rational& coeff) {
    if (coeff == 0) return SymbolicValue();
    long long p = smallest_factor(N);
    int f = 0;
    long long q = N;
    while (q > 1) { q /= p; ++f; }
    return SymbolicValue::log_prime(p, coeff * Rational(f));
}

// X^k as a polynomial
Poly xpow(size_t k) { return Poly::monomial(Rational(1), k); }

// 1 + c * X^k
Poly one_plus(Rational c, size_t k) {
    Poly p(Rational(1));
    return p + Poly::monomial(c, k);
}

// Product form P_{n,r}(X) with sign eps in {+1,-1}:
//   (1 - eps X N^{-(n+1)}) (1 - sgn X^{r+1} N^{-(r+1)n}) / (1 - eps X N^{-n})
// where sgn = eps^{r+1}.  eps = +1 is the chi-trivial family, eps = -1 the
// inert-even one.
RationalFunctionX product_form(long long N, long long n, long long r, int eps) {
    Rational e(eps);
    Poly num = one_plus(-e * pow_rat(N, -(n + 1)), 1);
    Rational sgn = (r % 2 == 0) ? e : Rational(1);  // eps^{r+1}
    num = num * one_plus(-sgn * pow_rat(N, -(r + 1) * n), (size_t)(r + 1));
    Poly den = one_plus(-e * pow_rat(N, -n), 1);
    return RationalFunctionX(num, den, N);
}

struct ScaledRational {
    Rational plain;
    int half = 0;
};

// |d_v|^{n+1/2} = N^{-e(n+1/2)} split into plain part and half flag.
ScaledRational different_power(long long N, int e, long long n) {
    ScaledRational r;
    r.half = e % 2;
    r.plain = pow_rat(N, -(e * n + (e - r.half) / 2));
    return r;
}

long long nonresidue_ll(long long p) {
    for (long long u = 2; u < p; ++u)
        if (legendre_symbol(u, p) == -1) return u;
    throw std::logic_error("no nonresidue");
}

// Representative a0 (unit mod p) of the requested norm class for the model
// with pi^2 = p and q(e) = 1: a = p^r a0 lies in q(e) Nm(E^x) iff
// legendre((-1)^r a0) = +1.
long long norm_class_unit(long long p, long long r, NormClass cls) {
    long long a0 = (r % 2 == 0) ? 1 : p - 1;  // legendre((-1)^r a0) = +1
    if (cls == NormClass::OutOfClass) a0 = (a0 * nonresidue_ll(p)) % p;
    return a0;
}

}  // namespace

void WhittakerSpec::validate() const {
    place.validate();
    if (n < 1) throw std::invalid_argument("whittaker spec: n must be positive");
    bool ram_even = ramified_even();
    if (ram_even) {
        if (norm_class == NormClass::NotApplicable)
            throw std::invalid_argument("whittaker spec: norm class required (ramified, even n)");
    } else if (norm_class != NormClass::NotApplicable) {
        throw std::invalid_argument("whittaker spec: norm class only applies to ramified even n");
    }
}

bool WhittakerSpec::is_zero_function() const {
    if (place.splitting == Splitting::Ramified) return r < 0;
    return r < -(long long)place.e;
}

WhittakerForm whittaker_closed_form(const WhittakerSpec& spec) {
    spec.validate();
    long long N = spec.place.N;
    WhittakerForm w;
    w.rf = RationalFunctionX::constant(Rational(0), N);
    if (spec.is_zero_function()) return w;
    long long n = spec.n;
    long long r = spec.r;

    if (spec.place.splitting != Splitting::Ramified) {
        int e = spec.place.e;
        int eps = (spec.place.splitting == Splitting::Inert && n % 2 == 0) ? -1 : 1;
        RationalFunctionX P = product_form(N, n, r, eps);
        ScaledRational d1 = different_power(N, e, n);  // |d|^{n+1/2}
        // |d|^{s+n+1/2} = X^e * |d|^{n+1/2}
        RationalFunctionX first =
            RationalFunctionX(Poly::monomial(d1.plain, (size_t)e), Poly(Rational(1)), N) * P;
        // |d|^{n+3/2} (1-X)(1 - N^e X^e)/(1 - N X)
        Rational d2 = d1.plain * pow_rat(N, -e);
        Poly num = (Poly(Rational(1)) - xpow(1)) * (Poly(Rational(1)) - Poly::monomial(pow_rat(N, e), (size_t)e));
        RationalFunctionX corr =
            RationalFunctionX(num * d2, one_plus(Rational(-N), 1), N);
        w.rf = first + corr;
        w.half = d1.half;
        return w;
    }

    // ramified place
    if (n % 2 == 1) {
        RationalFunctionX P = product_form(N, n, r, 1);
        Rational c0;
        switch (spec.schwartz) {
            case SchwartzKind::Standard: c0 = Rational(1) - pow_rat(N, -(n + 1)); break;
            case SchwartzKind::Dual: c0 = 0; break;
            case SchwartzKind::SelfDual: c0 = Rational(1) - pow_rat(N, -(n + 1) / 2); break;
        }
        w.rf = P - RationalFunctionX::constant(c0, N);
        w.half = 0;
        return w;
    }

    // ramified, even n: N^{-1/2} (const +- X^{r+1} N^{-(r+1)n})
    Rational cst;
    switch (spec.schwartz) {
        case SchwartzKind::Standard: cst = pow_rat(N, -n); break;
        case SchwartzKind::Dual: cst = 1; break;
        case SchwartzKind::SelfDual: cst = pow_rat(N, -n / 2); break;
    }
    Rational sgn = (spec.norm_class == NormClass::InClass) ? Rational(1) : Rational(-1);
    Poly num = Poly(cst) + Poly::monomial(sgn * pow_rat(N, -(r + 1) * n), (size_t)(r + 1));
    w.rf = RationalFunctionX(num, Poly(Rational(1)), N);
    w.half = 1;
    return w;
}

// ---------------------------------------------------------------------------
// Brute force

namespace {

struct Model {
    std::vector<Piece> pieces;
    ScaledRational vol;  // vol(Lambda) in the self-dual measure
};

Model bruteforce_model(const WhittakerSpec& spec) {
    Model m;
    long long N = spec.place.N;
    long long p = spec.place.p;
    long long n = spec.n;
    if (spec.place.splitting != Splitting::Ramified && N != p)
        throw std::invalid_argument("bruteforce model requires prime residue field");
    switch (spec.place.splitting) {
        case Splitting::Split:
            for (long long i = 0; i <= n; ++i) m.pieces.push_back({PieceKind::SplitProduct, 1, 1});
            m.vol.plain = pow_rat(N, -(long long)spec.place.e * (n + 1));
            m.vol.half = 0;
            break;
        case Splitting::Inert:
            for (long long i = 0; i <= n; ++i) m.pieces.push_back({PieceKind::InertNorm, 1, 1});
            m.vol.plain = pow_rat(N, -(long long)spec.place.e * (n + 1));
            m.vol.half = 0;
            break;
        case Splitting::Ramified: {
            bool even = (n % 2 == 0);
            bool dualpair = (spec.schwartz == SchwartzKind::Dual);
            if (spec.schwartz == SchwartzKind::SelfDual) {
                // diagonal self-dual lattice; last unit matches the Hermitian
                // determinant class of the modular-lattice model
                long long half_pairs = even ? n / 2 : (n + 1) / 2;
                int target = (half_pairs % 2 == 0) ? 1 : legendre_symbol(p - 1, p);
                long long last = (target == 1) ? 1 : nonresidue_ll(p);
                for (long long i = 0; i < n; ++i) m.pieces.push_back({PieceKind::RamUnit, 1, 1});
                m.pieces.push_back({PieceKind::RamUnit, last, 1});
                m.vol.plain = pow_rat(N, -((n + 1) - (n + 1) % 2) / 2);
                m.vol.half = (int)((n + 1) % 2);
                if (even) {  // (n+1)/2 half-integral
                    m.vol.plain = pow_rat(N, -n / 2);
                    m.vol.half = 1;
                }
                break;
            }
            long long pairs = even ? n / 2 : (n + 1) / 2;
            for (long long i = 0; i < pairs; ++i)
                m.pieces.push_back({dualpair ? PieceKind::DualPair : PieceKind::RamPair, 1, 1});
            if (even) m.pieces.push_back({PieceKind::RamUnit, 1, 1});
            if (!even) {
                m.vol.plain = dualpair ? Rational(1) : pow_rat(N, -(n + 1));
                m.vol.half = 0;
            } else {
                m.vol.plain = dualpair ? Rational(1) : pow_rat(N, -n);
                m.vol.half = 1;
            }
            break;
        }
    }
    return m;
}

// vol{x : q(x) = a mod p^k} / vol(Lambda); k may be negative.
Rational model_fraction(const Model& m, const WhittakerSpec& spec, long long a0, int k) {
    long long r = spec.r;
    if (k <= 0) return (r >= k) ? Rational(1) : Rational(0);
    if (r < 0) return Rational(0);
    long long p = spec.place.p;
    long long M = 1;
    for (int i = 0; i < k; ++i) M *= p;
    long long c = 1;
    for (long long i = 0; i < r && c < M; ++i) c = (c * p) % M;
    c = (c % M) * (a0 % M) % M;
    if (r >= k) c = 0;  // p^r = 0 mod p^k
    return fraction_congruent(m.pieces, p, k, c);
}

}  // namespace

WhittakerForm whittaker_bruteforce_form(const WhittakerSpec& spec, int truncation) {
    spec.validate();
    long long N = spec.place.N;
    WhittakerForm w;
    w.rf = RationalFunctionX::constant(Rational(0), N);
    if (spec.is_zero_function()) return w;

    Model model = bruteforce_model(spec);
    int e = spec.place.e;
    long long a0 = 1;
    if (spec.ramified_even()) a0 = norm_class_unit(spec.place.p, spec.r, spec.norm_class);

    int M = truncation > 0 ? truncation : (int)std::max<long long>(spec.r, 0) + 3;
    int cap = (int)std::max<long long>(spec.r, 0) + 6;
    std::vector<Rational> frac;
    auto extend_to = [&](int top) {
        for (int m = (int)frac.size(); m <= top; ++m)
            frac.push_back(model_fraction(model, spec, a0, m - e));
    };
    extend_to(M);
    int M0 = -1;
    for (;;) {
        for (int m0 = 0; m0 + 2 < (int)frac.size(); ++m0) {
            bool ok = true;
            for (int m = m0; m + 1 < (int)frac.size(); ++m)
                if (frac[m + 1] * Rational(N) != frac[m]) { ok = false; break; }
            if (ok) { M0 = m0; break; }
        }
        if (M0 >= 0) break;
        if ((int)frac.size() - 1 >= cap)
            throw std::runtime_error("whittaker_bruteforce: tail not geometric by level cap");
        extend_to((int)frac.size());
    }

    // (1-X) sum_{m<M0} (NX)^m f_m + f_{M0} N^{M0} X^{M0}
    Poly finite;
    for (int m = 0; m < M0; ++m)
        finite = finite + Poly::monomial(frac[m] * pow_rat(N, m), (size_t)m);
    Poly poly = (Poly(Rational(1)) - xpow(1)) * finite +
                Poly::monomial(frac[M0] * pow_rat(N, M0), (size_t)M0);

    int he = e % 2;
    Rational pref = model.vol.plain * pow_rat(N, -(e - he) / 2);
    w.rf = RationalFunctionX(poly * pref, Poly(Rational(1)), N);
    w.half = (he + model.vol.half) % 2;
    if (he + model.vol.half > 1) throw std::logic_error("unexpected double half-power");
    return w;
}

// For half-power forms this is the multiplier of N^{-1/2}.
Rational whittaker_bruteforce(const WhittakerSpec& spec, long long s, int truncation) {
    return whittaker_bruteforce_form(spec, truncation).rf.eval_at_int_s(s);
}

// ---------------------------------------------------------------------------
// Step-4 induction

WhittakerForm whittaker_induction(const WhittakerSpec& spec) {
    spec.validate();
    long long N = spec.place.N;
    long long r = spec.r;
    long long n = spec.n;

    if (spec.ramified_even() &&
        (spec.schwartz == SchwartzKind::Standard || spec.schwartz == SchwartzKind::Dual)) {
        if (r < 0) return whittaker_closed_form(spec);
        // coefficients C^r_m; sub-Whittaker on the pi-modular lattice of rank n
        WhittakerSpec sub = spec;
        sub.n = (int)n - 1;
        sub.norm_class = NormClass::NotApplicable;
        auto subform = [&](long long m) {
            WhittakerSpec s2 = sub;
            s2.r = m;
            return whittaker_closed_form(s2).rf;
        };
        bool in_class = (spec.norm_class == NormClass::InClass);
        RationalFunctionX acc = RationalFunctionX::constant(Rational(0), N);
        for (long long m = 0; m <= r; ++m) {
            Rational C;
            if (m < r)
                C = pow_rat(N, -m) - pow_rat(N, -(m + 1));
            else if (!in_class)
                C = pow_rat(N, -r);
            else
                C = pow_rat(N, -r) - 2 * pow_rat(N, -(r + 1));
            acc = acc + subform(m) * C;
        }
        if (in_class) {
            // tail sum_{m>r} 2 N^{-m}(1-1/N) [A - A u^{m+1} - c0] in closed form,
            // A = (1 - X N^{-n}) / (1 - u), u = X N^{-(n-1)}
            long long np = n - 1;
            RationalFunctionX u(Poly::monomial(pow_rat(N, -np), 1), Poly(Rational(1)), N);
            RationalFunctionX one = RationalFunctionX::constant(Rational(1), N);
            RationalFunctionX A =
                RationalFunctionX(one_plus(-pow_rat(N, -(np + 1)), 1), Poly(Rational(1)), N) /
                (one - u);
            Rational c0 = (spec.schwartz == SchwartzKind::Standard)
                              ? Rational(1) - pow_rat(N, -(np + 1))
                              : Rational(0);
            Rational csum = 2 * pow_rat(N, -(r + 1));  // sum_{m>r} C_m
            // sum_{m>r} C_m u^{m+1} = 2(1-1/N) u (u/N)^{r+1} / (1 - u/N)
            RationalFunctionX uN = u * pow_rat(N, -1);
            RationalFunctionX upow = one;
            for (long long i = 0; i < r + 1; ++i) upow = upow * uN;
            RationalFunctionX tail_u =
                (u * upow * (Rational(2) * (Rational(1) - pow_rat(N, -1)))) / (one - uN);
            acc = acc + A * csum - A * tail_u - RationalFunctionX::constant(c0 * csum, N);
        }
        // ratio vol(Lambda)/vol(Lambda^(n)) = N^{-1/2}: the half flag carries it
        WhittakerForm w;
        w.rf = acc;
        w.half = 1;
        return w;
    }

    if (spec.place.splitting == Splitting::Split && r == 0 && spec.place.e == 0) {
        // C^0_0 = 1 - 1/N + 1/N^2,  C^0_m = N^{-m}(1-1/N)^2 for m >= 1
        WhittakerSpec sub = spec;
        sub.n = (int)n - 1;
        auto subform = [&](long long m) {
            WhittakerSpec s2 = sub;
            s2.r = m;
            if (s2.n >= 1) return whittaker_closed_form(s2).rf;
            return product_form(N, 0, m, 1);  // rank-1 split piece
        };
        Rational C0 = Rational(1) - pow_rat(N, -1) + pow_rat(N, -2);
        RationalFunctionX acc = subform(0) * C0;
        // tail over m >= 1 in closed form: W_sub,m = A (1 - u^{m+1})
        long long np = n - 1;
        RationalFunctionX u(Poly::monomial(pow_rat(N, -np), 1), Poly(Rational(1)), N);
        RationalFunctionX one = RationalFunctionX::constant(Rational(1), N);
        RationalFunctionX A =
            RationalFunctionX(one_plus(-pow_rat(N, -(np + 1)), 1), Poly(Rational(1)), N) /
            (one - u);
        Rational csq = (Rational(1) - pow_rat(N, -1)) * (Rational(1) - pow_rat(N, -1));
        Rational csum = csq * pow_rat(N, -1) / (Rational(1) - pow_rat(N, -1));
        RationalFunctionX uN = u * pow_rat(N, -1);
        RationalFunctionX tail_u = (u * uN * csq) / (one - uN);
        acc = acc + A * csum - A * tail_u;
        WhittakerForm w;
        w.rf = acc;
        w.half = 0;
        return w;
    }

    throw UnsupportedCase("no induction coefficient table for this case");
}

// ---------------------------------------------------------------------------
// Derivative combination and S-terms

Rational local_l_log_derivative_coeff(const LocalPlaceData& place, int k, long long s0) {
    int eps;
    if (place.splitting == Splitting::Split)
        eps = 1;
    else if (place.splitting == Splitting::Inert)
        eps = (k % 2 == 0) ? 1 : -1;
    else
        eps = (k % 2 == 0) ? 1 : 0;
    if (eps == 0) return Rational(0);
    // L_v = (1 - eps N^{-s})^{-1}:  L'/L = -eps log N N^{-s} / (1 - eps N^{-s})
    Rational x = pow_rat(place.N, -s0);
    return -Rational(eps) * x / (Rational(1) - Rational(eps) * x);
}

DerivCombo whittaker_deriv_combo(const WhittakerSpec& spec) {
    spec.validate();
    long long N = spec.place.N;
    DerivCombo out;
    if (spec.is_zero_function()) return out;

    WhittakerForm w = whittaker_closed_form(spec);
    Rational w0 = w.rf.eval_at_int_s(0);
    Rational dcoeff = w.rf.derivative_at_s0_logN_coeff();
    // combo = W'(0) + (r/2) log N W(0)
    Rational combo = dcoeff + Rational(spec.r, 2) * w0;
    out.value = ScaledSymbolic(sym_logN(N, combo), w.half, N);

    Rational lcoeff = -local_l_log_derivative_coeff(spec.place, spec.n + 1, spec.n + 1) -
                      Rational(spec.place.e);  // (-L'/L + log|d|)/logN
    out.l_part = ScaledSymbolic(sym_logN(N, lcoeff * w0), w.half, N);

    int e = spec.place.e;
    int he = e % 2;
    Rational dc = 0;
    if (e > 0) {
        // |d|^{n+1/2} (1-|d|)/(N-1)
        dc = different_power(N, e, spec.n).plain * (Rational(1) - pow_rat(N, -e)) /
             Rational(N - 1);
    }
    out.diff_corr = ScaledSymbolic(sym_logN(N, dc), he, N);
    out.s_term = out.value - out.l_part - out.diff_corr;
    return out;
}

ScaledSymbolic whittaker_s_term(const WhittakerSpec& spec) {
    spec.validate();
    long long N = spec.place.N;
    long long n = spec.n;
    long long r = spec.r;
    if (spec.is_zero_function()) return ScaledSymbolic();
    if (r < 0 || spec.schwartz == SchwartzKind::SelfDual)
        return whittaker_deriv_combo(spec).s_term;  // derived route

    if (spec.place.splitting != Splitting::Ramified) {
        ScaledRational pref = different_power(N, spec.place.e, n);
        Rational core;
        if (spec.place.splitting == Splitting::Inert && n % 2 == 0) {
            Rational sgn = (r % 2 == 0) ? Rational(1) : Rational(-1);
            core = (Rational(1) + pow_rat(N, -(n + 1))) /
                   (2 * (Rational(1) + pow_rat(N, -n)) * (Rational(1) + pow_rat(N, -n))) *
                   (Rational(r) * (Rational(1) - sgn * pow_rat(N, -(r + 2) * n)) +
                    Rational(r + 2) * (pow_rat(N, -n) - sgn * pow_rat(N, -(r + 1) * n)));
        } else {
            core = (Rational(1) - pow_rat(N, -(n + 1))) /
                   (2 * (Rational(1) - pow_rat(N, -n)) * (Rational(1) - pow_rat(N, -n))) *
                   (Rational(r) * (Rational(1) - pow_rat(N, -(r + 2) * n)) -
                    Rational(r + 2) * (pow_rat(N, -n) - pow_rat(N, -(r + 1) * n)));
        }
        return ScaledSymbolic(sym_logN(N, pref.plain * core), pref.half, N);
    }

    if (n % 2 == 1) {
        Rational core = (Rational(1) - pow_rat(N, -(n + 1))) /
                        (2 * (Rational(1) - pow_rat(N, -n)) * (Rational(1) - pow_rat(N, -n))) *
                        (Rational(r) * (Rational(1) - pow_rat(N, -(r + 2) * n)) -
                         Rational(r + 2) * (pow_rat(N, -n) - pow_rat(N, -(r + 1) * n)));
        if (spec.schwartz == SchwartzKind::Standard)
            core += -Rational(r, 2) * (Rational(1) - pow_rat(N, -(n + 1))) + pow_rat(N, -(n + 1));
        return ScaledSymbolic(sym_logN(N, core), 0, N);
    }

    // ramified even: sign -1 in class, +1 out of class
    Rational sgn = (spec.norm_class == NormClass::InClass) ? Rational(-1) : Rational(1);
    Rational cst = (spec.schwartz == SchwartzKind::Standard) ? pow_rat(N, -n) : Rational(1);
    Rational core = sgn * Rational(r + 2, 2) * pow_rat(N, -(r + 1) * n) + Rational(r, 2) * cst;
    return ScaledSymbolic(sym_logN(N, core), 1, N);
}

// ---------------------------------------------------------------------------

SymbolicValue c_intertwining(const LocalPlaceData& place, int /*n*/, bool y_in_support) {
    if (!y_in_support) return SymbolicValue();
    SymbolicValue v = sym_logN(place.N, Rational(-place.e));  // log|d_v|
    if (place.splitting == Splitting::Inert && place.e > 0) {
        Rational c = 2 * (pow_rat(place.N, -place.e) - 1) /
                     ((Rational(1) + pow_rat(place.N, -1)) * Rational(1 - place.N));
        v += sym_logN(place.N, c);
    }
    return v;
}

long long multiplicity_m(const LocalPlaceData& place, long long v_q_y2, bool y1_in_perp,
                         bool q_y2_integral) {
    if (place.splitting == Splitting::Split)
        throw std::invalid_argument("multiplicity function defined at nonsplit places");
    if (!y1_in_perp || !q_y2_integral) return 0;
    if (v_q_y2 < 0) return 0;
    return v_q_y2 + 1;
}

Rational multiplicity_k_oracle_logN_coeff(long long N, long long r) {
    if (r < 1 || r % 2 == 0)
        throw std::invalid_argument("rank-1 oracle: odd positive valuation required");
    if (!is_prime_ll(N)) throw std::invalid_argument("rank-1 oracle: prime residue field");
    // rank-1 lattice O_E e with q = Nm (unit determinant), a = p^r
    std::vector<Piece> pieces = {{PieceKind::InertNorm, 1, 1}};
    int M = (int)r + 3;
    std::vector<Rational> frac;
    for (int m = 0; m <= M; ++m) {
        if (m == 0) {
            frac.push_back(Rational(1));
            continue;
        }
        long long mod = 1;
        for (int i = 0; i < m; ++i) mod *= N;
        long long c = 0;  // a = p^r: c = p^r mod p^m (0 if r >= m)
        if (r < m) {
            c = 1;
            for (long long i = 0; i < r; ++i) c = (c * N) % mod;
        }
        frac.push_back(fraction_congruent(pieces, N, m, c));
    }
    int M0 = -1;
    for (int m0 = 0; m0 + 2 < (int)frac.size(); ++m0) {
        bool ok = true;
        for (int m = m0; m + 1 < (int)frac.size(); ++m)
            if (frac[m + 1] * Rational(N) != frac[m]) { ok = false; break; }
        if (ok) { M0 = m0; break; }
    }
    if (M0 < 0) throw std::runtime_error("rank-1 oracle: no stabilization");
    Poly finite;
    for (int m = 0; m < M0; ++m)
        finite = finite + Poly::monomial(frac[m] * pow_rat(N, m), (size_t)m);
    Poly poly = (Poly(Rational(1)) - xpow(1)) * finite +
                Poly::monomial(frac[M0] * pow_rat(N, M0), (size_t)M0);
    RationalFunctionX w(poly, Poly(Rational(1)), N);  // gamma(W_v) = +1, vol = 1
    // k = L(1,eta_v) W'(0) = W'(0) / (1 + 1/N)
    return w.derivative_at_s0_logN_coeff() / (Rational(1) + pow_rat(N, -1));
}

}  // namespace ush
