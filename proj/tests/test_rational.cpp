// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>

#include "rational.hpp"

using namespace glame;

TEST_CASE("rational normalization and arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(3, 4) * Rational(2, 3)) == Rational(1, 2));
    CHECK((Rational(1, 2) / Rational(1, 4)) == Rational(2));
    CHECK(Rational(7).is_integer());
    CHECK(!Rational(7, 2).is_integer());
    CHECK(Rational(1, 2).to_double() == 0.5);
    CHECK(Rational(-5, 3).str() == "-5/3");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(INT64_MAX) * Rational(2), std::overflow_error);
}

TEST_CASE("linear solver pins unique systems and flags inconsistency") {
    // alpha + 2 = 0, beta - 3 = 0
    std::vector<LinExpr> eqs;
    eqs.push_back(LinExpr::unknown(U_ALPHA) + LinExpr(Rational(2)));
    eqs.push_back(LinExpr::unknown(U_BETA) - LinExpr(Rational(3)));
    auto res = solve_linear_system(eqs, (1u << U_ALPHA) | (1u << U_BETA));
    CHECK(res.consistent);
    CHECK(res.unique);
    CHECK(res.value[U_ALPHA] == Rational(-2));
    CHECK(res.value[U_BETA] == Rational(3));

    // contradictory pair
    eqs.push_back(LinExpr::unknown(U_ALPHA) + LinExpr(Rational(5)));
    res = solve_linear_system(eqs, (1u << U_ALPHA) | (1u << U_BETA));
    CHECK(!res.consistent);

    // consistent but underdetermined: alpha - beta = 0
    std::vector<LinExpr> fam = {LinExpr::unknown(U_ALPHA) - LinExpr::unknown(U_BETA)};
    res = solve_linear_system(fam, (1u << U_ALPHA) | (1u << U_BETA));
    CHECK(res.consistent);
    CHECK(!res.unique);

    // equations must not reference masked-out unknowns
    std::vector<LinExpr> stray = {LinExpr::unknown(U_E0) + LinExpr(Rational(1))};
    CHECK_THROWS_AS(solve_linear_system(stray, 1u << U_ALPHA), std::logic_error);
}

TEST_CASE("symbolic polynomial compare and render") {
    SymPoly a = SymPoly::mono(M_K1SQ, LinExpr::unknown(U_GAMMA, Rational(-1)) +
                                          LinExpr(Rational(2)));
    SymPoly b = SymPoly::mono(M_K1SQ, LinExpr(Rational(2)) -
                                          LinExpr::unknown(U_GAMMA));
    CHECK(a == b);
    CHECK(a.str() == "(-gamma + 2)*k1^2");
    const std::array<double, N_UNKNOWNS> v = {0, 0, 5, 0, 0, 0, 0, 0, 0};
    CHECK(a.eval(v, 0.25, 0.0) == doctest::Approx(-0.75));
}
