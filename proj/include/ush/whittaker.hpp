// Non-archimedean Whittaker functions W_{a,v}(s,1,Phi_v) at g = 1.
//
// Closed forms (X = N^{-s}, r = v(a), all exact):
//
//  unramified, chi trivial (split, or inert with n odd), r >= -e:
//    W = |d|^{s+n+1/2} (1-N^{-(s+n+1)})(1-N^{-(r+1)(s+n)})/(1-N^{-(s+n)})
//        + |d|^{n+3/2} (1-N^{-s})(1-|d|^{s-1})/(1-N^{-(s-1)})
//  inert, n even: same with alternating signs
//    (1+N^{-(s+n+1)})(1-(-1)^{r+1}N^{-(r+1)(s+n)})/(1+N^{-(s+n)}) + correction
//  ramified, n odd (P = product form above with |d|=1):
//    standard  W = P - (1-N^{-(n+1)})
//    dual      W = P
//    self-dual W = P - (1-N^{-(n+1)/2})
//  ramified, n even (sign + for a in the norm class of q(Lambda^(1)), - else):
//    standard  W = N^{-(n+1/2)}  +- N^{-(r+1)(s+n)-1/2}
//    dual      W = N^{-1/2}      +- N^{-(r+1)(s+n)-1/2}
//    self-dual W = N^{-(n+1)/2}  +- N^{-(r+1)(s+n)-1/2}
//      (constant pinned by the volume limit W(s->oo) = vol(Lambda) and the
//       enumeration oracle; see tests)
//
// Values of the ramified-even family carry a global factor N^{-1/2}; forms
// store a rational function together with that half-power flag.
#pragma once

#include "ush/enumeration.hpp"
#include "ush/localfield.hpp"
#include "ush/ratfunc.hpp"
#include "ush/symbolic.hpp"

namespace ush {

struct WhittakerSpec {
    LocalPlaceData place;
    int n = 1;          // space has dimension n+1
    long long r = 0;    // valuation of a
    SchwartzKind schwartz = SchwartzKind::Standard;
    NormClass norm_class = NormClass::NotApplicable;

    void validate() const;
    bool is_zero_function() const;  // r below the support bound
    bool ramified_even() const {
        return place.splitting == Splitting::Ramified && n % 2 == 0;
    }
};

// value(s) = N^{-half/2} * rf(X)
struct WhittakerForm {
    RationalFunctionX rf;
    int half = 0;

    bool operator==(const WhittakerForm& o) const { return half == o.half && rf == o.rf; }
    bool is_zero() const { return rf.is_zero(); }
    // exact value at integer s, as (plain, half) components a + b/sqrt(N)
    std::pair<Rational, Rational> eval_at_int_s(long long s) const {
        Rational v = rf.eval_at_int_s(s);
        return half ? std::make_pair(Rational(0), v) : std::make_pair(v, Rational(0));
    }
    double eval_numeric(double s) const {
        double v = rf.eval_at_real_s(s);
        if (half) v /= std::sqrt((double)rf.base);
        return v;
    }
};

WhittakerForm whittaker_closed_form(const WhittakerSpec& spec);

// Brute-force oracle: W = gamma |d|^{1/2} (1-N^{-s}) sum_m N^{-m(s-1)} vol(D_m(a) cap Lambda)
// with vectors counted in Lambda/p^M Lambda and the geometric tail summed in
// closed form once vol(D_{m+1})/vol(D_m) = 1/N holds on two consecutive
// levels.  Returns the full rational function (exact).
WhittakerForm whittaker_bruteforce_form(const WhittakerSpec& spec, int truncation = -1);
Rational whittaker_bruteforce(const WhittakerSpec& spec, long long s, int truncation = -1);

// Step-4 induction assembly (coefficient tables exist for ramified even and
// for split with r = 0); throws UnsupportedCase otherwise.
struct UnsupportedCase : std::runtime_error {
    using std::runtime_error::runtime_error;
};
WhittakerForm whittaker_induction(const WhittakerSpec& spec);

// W'(0,1,Phi) - (1/2) log|a| W(0,1,Phi), exact, with its decomposition
//   combo = (-L'_v/L_v(n+1,eta^{n+1}) + log|d_v|) W(0) + S + D_corr.
struct DerivCombo {
    ScaledSymbolic value;        // the full exact combination
    ScaledSymbolic l_part;       // (-L'_v/L_v + log|d_v|) * W(0)
    ScaledSymbolic s_term;       // the S_{a,n} piece
    ScaledSymbolic diff_corr;    // |d|^{n+1/2} (1-|d|)/(N-1) log N
};
DerivCombo whittaker_deriv_combo(const WhittakerSpec& spec);

// S_{a,n} by the displayed closed formulas (transcribed; the derivative route
// above is the independent cross-check).  Self-dual variants fall back to the
// derived route.
ScaledSymbolic whittaker_s_term(const WhittakerSpec& spec);

// Local factor L_v(s, eta_v^k)^{-1} as 1 - eps X (eps = eta_v^k(pi_v)); the
// log-derivative value L'_v/L_v(s0) is an exact rational times log N.
Rational local_l_log_derivative_coeff(const LocalPlaceData& place, int k, long long s0);

// c_{Phi_v}(1, y) for y in the support (zero outside).
SymbolicValue c_intertwining(const LocalPlaceData& place, int n, bool y_in_support);

// m_{Phi_v}(y) = (v(q(y2)) + 1) 1_{Lambda-perp}(y1) 1_O(q(y2)); nonsplit places.
long long multiplicity_m(const LocalPlaceData& place, long long v_q_y2, bool y1_in_perp,
                         bool q_y2_integral);

// Rank-one oracle route for the multiplicity identity at inert places with
// e = 0: k = L(1,eta_v) * W'_{a,v}(0,1,phi_2) for a = p^r, r odd, computed
// from the enumerated rational function.  Returns the exact log N coefficient.
Rational multiplicity_k_oracle_logN_coeff(long long N, long long r);

}  // namespace ush
