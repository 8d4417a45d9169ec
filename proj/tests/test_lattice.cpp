#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ush/lattice.hpp"
#include "ush/whittaker.hpp"

using namespace ush;

namespace {

LocalPlaceData place_of(Splitting sp, long long N, int e = 0) {
    return LocalPlaceData(N, sp, e, N);
}

HermitianLatticeModel model_of(Splitting sp, long long N, int n, LatticeKind kind,
                               int truncation = 0) {
    HermitianLatticeModel m;
    m.place = place_of(sp, N);
    m.n = n;
    m.kind = kind;
    m.truncation = truncation;
    return m;
}

}  // namespace

TEST_CASE("closed orbit counts") {
    CHECK(orbit_count_closed(place_of(Splitting::Split, 3), 1, 2, NormClass::NotApplicable,
                             false) == 6);
    CHECK(orbit_count_closed(place_of(Splitting::Inert, 3), 1, 4, NormClass::NotApplicable,
                             false) == 3);
    CHECK(orbit_count_closed(place_of(Splitting::Ramified, 3), 2, 1, NormClass::InClass, true) ==
          3);
    CHECK(orbit_count_closed(place_of(Splitting::Ramified, 3), 1, 2, NormClass::NotApplicable,
                             false) == 2);
    CHECK(orbit_count_closed(place_of(Splitting::Ramified, 3), 1, 2, NormClass::NotApplicable,
                             true) == 3);
    CHECK_THROWS(orbit_count_closed(place_of(Splitting::Split, 3), 1, 2, NormClass::InClass,
                                    false));
}

TEST_CASE("vector types: spec examples") {
    // split model: ((p^s, a/p^s), (0, p^t), 0...) has type (s, t)
    HermitianLatticeModel m = model_of(Splitting::Split, 3, 2, LatticeKind::SelfDual, 8);
    // r = 2, s = 1, t = 1: coords (a_i, b_i) pairs
    std::vector<long long> x = {3, 3, 0, 3, 0, 0};
    VectorTypeLabel l = vector_type(m, x);
    CHECK(l.s == 1);
    CHECK(l.t == 1);

    // inert model: primitive vector with v(q) = 2 has even type <= 2
    HermitianLatticeModel mi = model_of(Splitting::Inert, 3, 1, LatticeKind::SelfDual, 8);
    // q = Nm(x1) + Nm(x2), Nm = x0^2 - u x1^2 with u a nonresidue (u = 2 mod 3)
    // choose x = (3,0),(1,1): q = 9 + (1 - 2) = 8 + ... v(q) must be computed
    std::vector<long long> xi = {0, 3, 3, 3};  // q = -2*9 + 9 - 2*9 = -27: r = 3, depth 0
    VectorTypeLabel li = vector_type(mi, xi);
    CHECK(li.s == 3);

    // ramified standard odd model: y in pi^{r-1} Lambda with v(q) = r has type 0
    HermitianLatticeModel mr = model_of(Splitting::Ramified, 3, 1, LatticeKind::PiModular, 8);
    // q(aX + bY) = 2p(a1 b0 - a0 b1); coords (a0, a1, b0, b1)
    std::vector<long long> xr = {1, 0, 0, 1};  // q = -2p: r = 1, depth 0 => type 0
    VectorTypeLabel lr = vector_type(mr, xr);
    CHECK(lr.s == 0);

    // dual even model: type-0 vectors split by membership in Lambda
    HermitianLatticeModel md =
        model_of(Splitting::Ramified, 3, 2, LatticeKind::DualAlmostPiModular, 8);
    // e-dominant unit vector: in Lambda, not exceptional
    std::vector<long long> xd = {0, 0, 0, 0, 1, 0};
    VectorTypeLabel ld = vector_type(md, xd);
    CHECK(ld.s == 0);
    CHECK(!ld.exceptional);
    // pair-dominant unit-norm vector: primitive part outside Lambda
    std::vector<long long> xe = {1, 0, 0, 1, 0, 0};  // q = -2 det = -2: unit
    VectorTypeLabel le = vector_type(md, xe);
    CHECK(le.s == 0);
    CHECK(le.exceptional);
}

TEST_CASE("orbit enumeration: spec examples") {
    OrbitEnumeration a =
        orbit_count_bruteforce(model_of(Splitting::Split, 2, 1, LatticeKind::SelfDual, 3), 1,
                               NormClass::NotApplicable);
    CHECK(a.count == 3);

    OrbitEnumeration b =
        orbit_count_bruteforce(model_of(Splitting::Inert, 3, 1, LatticeKind::SelfDual, 4), 2,
                               NormClass::NotApplicable);
    CHECK(b.count == 2);

    OrbitEnumeration c =
        orbit_count_bruteforce(model_of(Splitting::Ramified, 3, 1, LatticeKind::PiModular, 3), 1,
                               NormClass::NotApplicable);
    CHECK(c.count == 1);
}

TEST_CASE("volume ratios") {
    // split n=1: |d|^{3/2}(1 - N^{-2}) for any type with r-s-t > 0
    VectorTypeLabel t;
    t.family = Splitting::Split;
    t.s = 0;
    t.t = 0;
    RatioValue v = volume_ratio(place_of(Splitting::Split, 4), 1, t, 1);
    CHECK(v.plain == Rational(15, 16));
    CHECK(v.half == 0);

    // inert base ratio: |d|^{n+1/2}(1 + (-1)^n N^{-(n+1)})
    VectorTypeLabel ti;
    ti.family = Splitting::Inert;
    ti.s = 0;
    RatioValue vi = volume_ratio(place_of(Splitting::Inert, 3), 2, ti, 2);
    CHECK(vi.plain == Rational(1) + Rational(1, 27));

    // ramified odd, type s: (1 - N^{-(n+1)}) N^{(n-1)s}
    VectorTypeLabel tr;
    tr.family = Splitting::Ramified;
    tr.s = 2;
    RatioValue vr = volume_ratio(place_of(Splitting::Ramified, 3), 3, tr, 2);
    CHECK(vr.plain == (Rational(1) - Rational(1, 81)) * Rational(81));
    CHECK(vr.half == 0);
}

TEST_CASE("d0 values") {
    VectorTypeLabel t;
    t.family = Splitting::Split;
    t.s = 0;
    t.t = 2;
    CHECK(d0_local(place_of(Splitting::Split, 2), t, 2).is_zero());
    t.t = 0;
    SymbolicValue d = d0_local(place_of(Splitting::Split, 2), t, 2);
    CHECK(d.logs.at(2) == Rational(4));  // 2(4-2) log 2

    VectorTypeLabel ti;
    ti.family = Splitting::Inert;
    ti.s = 0;
    CHECK(d0_local(place_of(Splitting::Inert, 5), ti, 2).is_zero());
}

TEST_CASE("f-series pinned values") {
    // split, N=2, n=1, r=1: (3/8) log 2
    ScaledSymbolic f = f_series(place_of(Splitting::Split, 2), 1, 1, NormClass::NotApplicable,
                                false);
    CHECK(f.sym.logs.at(2) == Rational(3, 8));

    // split r=0 vanishes
    CHECK(f_series(place_of(Splitting::Split, 5), 2, 0, NormClass::NotApplicable, false)
              .is_zero());

    // inert, N=2, n=1, r=1: f = 2S + B with B = (3/4) log 2
    ScaledSymbolic B = b_series(place_of(Splitting::Inert, 2), 1, 1, NormClass::NotApplicable,
                                false);
    CHECK(B.sym.logs.at(2) == Rational(3, 4));
    WhittakerSpec ws;
    ws.place = place_of(Splitting::Inert, 2);
    ws.n = 1;
    ws.r = 1;
    ScaledSymbolic S = whittaker_s_term(ws);
    ScaledSymbolic fi =
        f_series(place_of(Splitting::Inert, 2), 1, 1, NormClass::NotApplicable, false);
    CHECK(fi == S * Rational(2) + B);
    CHECK(fi.sym.logs.at(2) == Rational(9, 8));
}

TEST_CASE("b-series pinned values") {
    CHECK(b_series(place_of(Splitting::Inert, 3), 2, 0, NormClass::NotApplicable, false)
              .is_zero());
    // inert, N=2, n=1, r=2: 2(3/4)(1/2 + 1/4) log2 = (9/8) log 2
    ScaledSymbolic B = b_series(place_of(Splitting::Inert, 2), 1, 2, NormClass::NotApplicable,
                                false);
    CHECK(B.sym.logs.at(2) == Rational(9, 8));
    CHECK_THROWS(b_series(place_of(Splitting::Split, 2), 1, 1, NormClass::NotApplicable, false));

    // ramified even: B(in) + B(out) = 0
    for (long long r = 0; r <= 3; ++r) {
        ScaledSymbolic bi = b_series(place_of(Splitting::Ramified, 5), 2, r, NormClass::InClass,
                                     true);
        ScaledSymbolic bo = b_series(place_of(Splitting::Ramified, 5), 2, r,
                                     NormClass::OutOfClass, true);
        CHECK((bi + bo).is_zero());
    }
    // and B vanishes at r = 0
    CHECK(b_series(place_of(Splitting::Ramified, 5), 2, 0, NormClass::InClass, true).is_zero());
}

TEST_CASE("degree decompositions") {
    CHECK(degree_decomposition_check(Splitting::Split, 3, 1));
    CHECK(degree_decomposition_check(Splitting::Inert, 2, 3));
    for (long long N = 2; N <= 7; ++N)
        for (long long r = 0; r <= 10; ++r) {
            CHECK(degree_decomposition_check(Splitting::Split, N, r));
            CHECK(degree_decomposition_check(Splitting::Inert, N, r));
            CHECK(degree_decomposition_check(Splitting::Ramified, N, r));
        }
}

TEST_CASE("lattice volumes") {
    CHECK(lattice_volume(model_of(Splitting::Split, 3, 2, LatticeKind::SelfDual)).plain ==
          Rational(1));
    CHECK(lattice_volume(model_of(Splitting::Ramified, 3, 1, LatticeKind::PiModular)).plain ==
          Rational(1, 9));
    RatioValue v = lattice_volume(model_of(Splitting::Ramified, 3, 2, LatticeKind::AlmostPiModular));
    CHECK(v.plain == Rational(1, 9));
    CHECK(v.half == 1);
}

TEST_CASE("model validation") {
    CHECK_THROWS(model_of(Splitting::Split, 3, 1, LatticeKind::PiModular).validate());
    CHECK_THROWS(model_of(Splitting::Ramified, 3, 2, LatticeKind::PiModular).validate());
    CHECK_THROWS(model_of(Splitting::Ramified, 3, 1, LatticeKind::AlmostPiModular).validate());
    CHECK_NOTHROW(model_of(Splitting::Ramified, 3, 1, LatticeKind::DualPiModular).validate());
}
