#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ush/whittaker.hpp"

using namespace ush;

namespace {

WhittakerSpec spec_of(Splitting sp, long long N, int n, long long r, int e = 0,
                      SchwartzKind kind = SchwartzKind::Standard,
                      NormClass cls = NormClass::NotApplicable) {
    WhittakerSpec s;
    s.place = LocalPlaceData(N, sp, e, N);
    s.n = n;
    s.r = r;
    s.schwartz = kind;
    s.norm_class = cls;
    return s;
}

}  // namespace

TEST_CASE("closed forms: pinned values") {
    // split, N=2, n=1, r=0: W = 1 - N^{-(s+2)}; W(0) = 3/4
    WhittakerForm w = whittaker_closed_form(spec_of(Splitting::Split, 2, 1, 0));
    CHECK(w.half == 0);
    CHECK(w.rf.eval_at_int_s(0) == Rational(3, 4));
    CHECK(w.rf.eval_at_int_s(1) == Rational(7, 8));

    // split, N=3, n=1, r=1 at s=0: (1-N^{-2})(1+N^{-1}) = 32/27
    WhittakerForm w2 = whittaker_closed_form(spec_of(Splitting::Split, 3, 1, 1));
    CHECK(w2.rf.eval_at_int_s(0) == Rational(32, 27));

    // ramified, n odd, r=0, standard: N^{-(n+1)} - N^{-(s+n+1)}, zero at s=0
    WhittakerForm w3 = whittaker_closed_form(spec_of(Splitting::Ramified, 3, 1, 0));
    CHECK(w3.rf.eval_at_int_s(0) == Rational(0));
    CHECK(w3.rf.eval_at_int_s(1) == Rational(1, 9) - Rational(1, 27));

    // ramified, n even, r=0, in-class, standard: N^{-(n+1/2)} + N^{-(s+n)-1/2}
    WhittakerForm w4 =
        whittaker_closed_form(spec_of(Splitting::Ramified, 3, 2, 0, 0, SchwartzKind::Standard,
                                      NormClass::InClass));
    CHECK(w4.half == 1);
    CHECK(w4.rf.eval_at_int_s(0) == Rational(2, 9));  // 2 N^{-n} times N^{-1/2}
}

TEST_CASE("vanishing boundary") {
    CHECK(whittaker_closed_form(spec_of(Splitting::Split, 2, 1, -1)).is_zero());
    CHECK(!whittaker_closed_form(spec_of(Splitting::Split, 2, 1, -1, 1)).is_zero());
    CHECK(whittaker_closed_form(spec_of(Splitting::Split, 2, 1, -2, 1)).is_zero());
    CHECK(whittaker_closed_form(spec_of(Splitting::Ramified, 3, 1, -1)).is_zero());
    // oracle agrees at the boundary case r = -1, e = 1
    WhittakerSpec s = spec_of(Splitting::Split, 2, 1, -1, 1);
    CHECK(whittaker_bruteforce_form(s) == whittaker_closed_form(s));
}

TEST_CASE("bruteforce oracle: spec examples") {
    CHECK(whittaker_bruteforce(spec_of(Splitting::Split, 2, 1, 0), 0) == Rational(3, 4));
    CHECK(whittaker_bruteforce(spec_of(Splitting::Split, 3, 1, 1), 0) == Rational(32, 27));
    CHECK(whittaker_bruteforce(spec_of(Splitting::Ramified, 3, 1, 0), 0) == Rational(0));
}

TEST_CASE("norm-class pairing at ramified even places") {
    for (long long N : {3, 5})
        for (long long r = 0; r <= 3; ++r) {
            WhittakerForm win = whittaker_closed_form(
                spec_of(Splitting::Ramified, N, 2, r, 0, SchwartzKind::Standard,
                        NormClass::InClass));
            WhittakerForm wout = whittaker_closed_form(
                spec_of(Splitting::Ramified, N, 2, r, 0, SchwartzKind::Standard,
                        NormClass::OutOfClass));
            RationalFunctionX sum = win.rf + wout.rf;
            CHECK(sum.is_constant());
            CHECK(sum.eval_at_int_s(0) == 2 * pow_rat(N, -2));
            // alternating parts cancel in the derivative too
            CHECK(sum.derivative_at_s0_logN_coeff() == Rational(0));
        }
}

TEST_CASE("deriv combo: pinned values") {
    // split, N=2, n=1, r=0: combo = (1/4) log 2
    DerivCombo c = whittaker_deriv_combo(spec_of(Splitting::Split, 2, 1, 0));
    CHECK(c.value.sym.logs.at(2) == Rational(1, 4));
    CHECK(c.s_term.is_zero());
    CHECK(c.diff_corr.is_zero());

    // ramified, n even, r=0, out-of-class: N^{-n-1/2} log N
    DerivCombo c2 = whittaker_deriv_combo(spec_of(Splitting::Ramified, 3, 2, 0, 0,
                                                  SchwartzKind::Standard,
                                                  NormClass::OutOfClass));
    CHECK(c2.value.half == 1);
    CHECK(c2.value.sym.logs.at(3) == Rational(1, 9));
    CHECK(c2.l_part.is_zero());  // L-factor is trivial at ramified even places

    // any split case with r=0 has S = 0
    for (long long N : {2, 3, 5})
        for (int n : {1, 2, 3})
            CHECK(whittaker_s_term(spec_of(Splitting::Split, N, n, 0)).is_zero());
}

TEST_CASE("S-term pinned values") {
    // split, N=2, n=1, r=1: (3/16) log 2
    ScaledSymbolic s = whittaker_s_term(spec_of(Splitting::Split, 2, 1, 1));
    CHECK(s.half == 0);
    CHECK(s.sym.logs.at(2) == Rational(3, 16));

    // inert even r=0 vanishes (regression pinned via the derivative route)
    CHECK(whittaker_s_term(spec_of(Splitting::Inert, 3, 2, 0)).is_zero());
    CHECK(whittaker_deriv_combo(spec_of(Splitting::Inert, 3, 2, 0)).s_term.is_zero());

    // ramified even r=0 in-class: -N^{-n-1/2} log N
    ScaledSymbolic s2 = whittaker_s_term(
        spec_of(Splitting::Ramified, 3, 2, 0, 0, SchwartzKind::Standard, NormClass::InClass));
    CHECK(s2.half == 1);
    CHECK(s2.sym.logs.at(3) == Rational(-1, 9));
}

TEST_CASE("dual Schwartz variants at a ramified odd place") {
    WhittakerSpec std_spec = spec_of(Splitting::Ramified, 3, 1, 2);
    WhittakerSpec dual_spec = spec_of(Splitting::Ramified, 3, 1, 2, 0, SchwartzKind::Dual);
    WhittakerSpec sd_spec = spec_of(Splitting::Ramified, 3, 1, 2, 0, SchwartzKind::SelfDual);
    WhittakerForm ws = whittaker_closed_form(std_spec);
    WhittakerForm wd = whittaker_closed_form(dual_spec);
    WhittakerForm wsd = whittaker_closed_form(sd_spec);
    RationalFunctionX d1 = wd.rf - ws.rf;
    CHECK(d1.is_constant());
    CHECK(d1.eval_at_int_s(0) == Rational(1) - Rational(1, 9));
    RationalFunctionX d2 = wsd.rf - ws.rf;
    CHECK(d2.is_constant());
    CHECK(d2.eval_at_int_s(0) == Rational(1, 3) - Rational(1, 9));
    // the oracle agrees for all three lattice kinds
    CHECK(whittaker_bruteforce_form(dual_spec) == wd);
    CHECK(whittaker_bruteforce_form(sd_spec) == wsd);
}

TEST_CASE("induction tables") {
    // ramified even coefficients: assembled form equals the closed form
    WhittakerSpec s = spec_of(Splitting::Ramified, 3, 2, 0, 0, SchwartzKind::Standard,
                              NormClass::InClass);
    CHECK(whittaker_induction(s) == whittaker_closed_form(s));
    s.norm_class = NormClass::OutOfClass;
    CHECK(whittaker_induction(s) == whittaker_closed_form(s));
    s.r = 2;
    CHECK(whittaker_induction(s) == whittaker_closed_form(s));

    WhittakerSpec sp = spec_of(Splitting::Split, 2, 1, 0);
    CHECK(whittaker_induction(sp) == whittaker_closed_form(sp));
    sp.r = 1;
    CHECK_THROWS_AS(whittaker_induction(sp), UnsupportedCase);
}

TEST_CASE("intertwining values") {
    LocalPlaceData split0(5, Splitting::Split, 0, 5);
    CHECK(c_intertwining(split0, 1, true).is_zero());
    CHECK(c_intertwining(split0, 1, false).is_zero());

    LocalPlaceData inert1(3, Splitting::Inert, 1, 3);
    SymbolicValue v = c_intertwining(inert1, 1, true);
    // -log 3 + 2(1/3 - 1)/((4/3)(-2)) log 3 = -log3 + (1/2) log 3
    CHECK(v.logs.at(3) == Rational(-1, 2));
}

TEST_CASE("multiplicity function") {
    LocalPlaceData inert(3, Splitting::Inert, 0, 3);
    CHECK(multiplicity_m(inert, 1, true, true) == 2);
    CHECK(multiplicity_m(inert, 3, false, true) == 0);
    CHECK(multiplicity_m(inert, 2, true, false) == 0);
    LocalPlaceData split(3, Splitting::Split, 0, 3);
    CHECK_THROWS_AS(multiplicity_m(split, 1, true, true), std::invalid_argument);
}

TEST_CASE("rank-1 oracle multiplicity identity") {
    for (long long N : {2, 3, 5})
        for (long long v : {1, 3}) {
            Rational k = multiplicity_k_oracle_logN_coeff(N, v);
            CHECK(Rational(2) * k == Rational(v + 1));
        }
}

TEST_CASE("spec validation") {
    CHECK_THROWS(whittaker_closed_form(spec_of(Splitting::Ramified, 3, 2, 0)));  // class missing
    CHECK_THROWS(whittaker_closed_form(
        spec_of(Splitting::Split, 2, 1, 0, 0, SchwartzKind::Standard, NormClass::InClass)));
    CHECK_THROWS(whittaker_closed_form(spec_of(Splitting::Ramified, 2, 1, 0)));  // wild
    // a second representative of the same norm class gives the same oracle form
    WhittakerSpec s1 = spec_of(Splitting::Ramified, 5, 2, 1, 0, SchwartzKind::Dual,
                               NormClass::InClass);
    CHECK(whittaker_bruteforce_form(s1) == whittaker_closed_form(s1));
}
