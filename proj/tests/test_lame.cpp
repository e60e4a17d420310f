// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "elliptic.hpp"
#include "lame.hpp"
#include "oracles.hpp"

using namespace glame;

namespace {
std::vector<double> period_grid(const ModulusPair& m, int count) {
    const double period = 4 * complete_k(m.kappa) / m.k2p;
    return uniform_grid(0.0, period, count);
}
}  // namespace

TEST_CASE("catalog shape and selected rows") {
    const auto& cat = catalog();
    CHECK(cat.size() == 15);
    for (const auto& e : cat) {
        CHECK(e.params[1] == 0);  // beta vanishes in every entry
        const int a = e.params[0];
        CHECK((a == 3 || a == 8 || a == 15 || a == 24));
    }
    CHECK(cat[5].params == std::array<int, 5>{8, 0, 2, 2, 6});
    CHECK(cat[5].energy == std::array<int, 3>{0, 1, 1});
    CHECK(cat[5].factors == (F_D1 | F_D2));
    CHECK(cat[12].params == std::array<int, 5>{15, 0, 6, 12, 6});
    CHECK(cat[12].energy == std::array<int, 3>{4, 1, 4});
    CHECK(cat[12].factors == (F_S | F_C | F_D2));
    CHECK(factors_to_string(cat[14].factors) == "s*c*d1*d2");
}

TEST_CASE("catalog csv export") {
    const std::string csv = catalog_csv();
    std::istringstream is(csv);
    std::string line;
    std::getline(is, line);
    CHECK(line == "alpha,beta,gamma,delta,lambda,e0,e1,e2,factors");
    int rows = 0;
    while (std::getline(is, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 15);
    CHECK(csv.find("8,0,2,2,6,0,1,1,d1*d2") != std::string::npos);
    CHECK(csv.find("15,0,6,6,12,1,4,4,s*d1*d2") != std::string::npos);
}

TEST_CASE("potential basics and the single-modulus limit") {
    const ModulusPair m(0.8, 0.3);
    const ParamVector p{3, 0, 2, 2, 2};
    CHECK(potential(0.0, p, m) == 0.0);

    const ModulusPair lame(0.8, 0.0);
    for (double z : {0.3, 1.0, 2.6}) {
        const double sn = jacobi_scd(z, 0.8).sn;
        // the k2^2 terms drop out exactly, not merely to rounding
        CHECK(potential(z, p, lame) == -(p.gamma * (0.8 * 0.8)) * (sn * sn));
    }

    // cross-check against the first-order-system oracle for s
    const double s = oracle::gen_jacobi_ode(0.5, m).s;
    const double expect = (3 * m.k1sq() * m.k2sq()) * s * s * s * s -
                          (2 * m.k1sq() + 2 * m.k2sq() + 2 * m.k1sq() * m.k2sq()) * s * s;
    CHECK(potential(0.5, p, m) == doctest::Approx(expect).epsilon(1e-9));
}

TEST_CASE("catalog residuals vanish at several modulus pairs") {
    for (const auto& m : {ModulusPair(0.8, 0.3), ModulusPair(0.6, 0.5), ModulusPair(0.9, 0.1)}) {
        const auto grid = period_grid(m, 101);
        for (const auto& e : catalog()) {
            CHECK(schrodinger_residual(e, m, grid) < 1e-10);
        }
    }
}

TEST_CASE("catalog residuals survive the single-modulus limit") {
    // at k2 = 0 the catalog rows collapse onto the classical n = 1, 2
    // polynomial eigenpairs
    const ModulusPair m(0.8, 0.0);
    const auto grid = period_grid(m, 101);
    for (const auto& e : catalog()) CHECK(schrodinger_residual(e, m, grid) < 1e-10);
}

TEST_CASE("wrong eigenvalue produces an order-unity residual") {
    const ModulusPair m(0.8, 0.3);
    const auto grid = period_grid(m, 101);
    const auto& row = catalog()[0];  // eigenfunction s
    const double e_true = row.energy_at(m);
    // E = 0 leaves a residual of |E_true| * max|f| / max|f|
    const double r = schrodinger_residual(row, m, grid, -e_true);
    CHECK(r > 0.5 * e_true);
    CHECK(r < 2.0 * e_true);
    // a small perturbation scales linearly
    const double r2 = schrodinger_residual(row, m, grid, 1e-3);
    CHECK(r2 == doctest::Approx(1e-3).epsilon(1e-3));
}

TEST_CASE("finite-difference residual path for arbitrary functions") {
    const ModulusPair m(0.8, 0.3);
    const auto grid = uniform_grid(0.1, 2.0, 41);
    const auto& row = catalog()[5];  // d1 d2
    auto f = [&](double z) {
        const auto p = eval_all(z, m);
        return p.d1 * p.d2;
    };
    CHECK(schrodinger_residual(f, row.param_vector(), row.energy_at(m), m, grid) < 1e-7);
    auto bad = [&](double z) { return std::cos(z); };
    CHECK(schrodinger_residual(bad, row.param_vector(), row.energy_at(m), m, grid) > 1e-2);
}

TEST_CASE("algebraic form under x = s^2") {
    const ModulusPair m(0.8, 0.3);
    const ParamVector p{3, 0, 2, 2, 2};
    const double e_val = 1 + m.k1sq() + m.k2sq();
    // the image of f(z) = s(z) is f(x) = sqrt(x)
    for (double x : {0.25, 0.5, 0.9}) {
        const double f = std::sqrt(x), fp = 0.5 / f, fpp = -0.25 / (x * f);
        CHECK(std::abs(algebraic_residual(x, p, e_val, m, f, fp, fpp)) < 1e-10);
    }
    // beta = 0 keeps the x^2 coefficient equal to alpha: perturbing alpha by
    // one changes the residual by -x^2 f / prod
    const double x = 0.25, f = 0.5, fp = 1.0, fpp = -2.0;
    ParamVector p2 = p;
    p2.alpha += 1;
    const double k1m2 = 1 / m.k1sq(), k2m2 = 1 / m.k2sq();
    const double prod = 4 * x * (x - 1) * (x - k1m2) * (x - k2m2);
    const double diff = algebraic_residual(x, p2, e_val, m, f, fp, fpp) -
                        algebraic_residual(x, p, e_val, m, f, fp, fpp);
    CHECK(diff == doctest::Approx(-x * x / prod * f).epsilon(1e-12));

    // residual is affine in E with slope -k1^-2 k2^-2 f / prod
    const double r0 = algebraic_residual(x, p, 0.0, m, f, fp, fpp);
    const double r1 = algebraic_residual(x, p, 1.0, m, f, fp, fpp);
    const double r2 = algebraic_residual(x, p, 2.0, m, f, fp, fpp);
    CHECK(std::abs((r2 - r1) - (r1 - r0)) < 1e-13);
    CHECK((r1 - r0) == doctest::Approx(-k1m2 * k2m2 / prod * f).epsilon(1e-12));

    CHECK_THROWS_AS(algebraic_residual(0.0, p, e_val, m, f, fp, fpp), std::domain_error);
    CHECK_THROWS_AS(algebraic_residual(1.0, p, e_val, m, f, fp, fpp), std::domain_error);
}

TEST_CASE("parity/period classification of the catalog products") {
    const ModulusPair m(0.8, 0.3);
    const double half = 2 * complete_k(m.kappa) / m.k2p;
    for (const auto& e : catalog()) {
        const JacobiPoly f = JacobiPoly::monomial(e.factors);
        int sc = 0;
        if (e.factors & F_S) ++sc;
        if (e.factors & F_C) ++sc;
        for (double z : {0.23, 0.71, 1.9}) {
            const double v = f.eval(eval_all(z, m));
            const double v_half = f.eval(eval_all(z + half, m));
            const double v_full = f.eval(eval_all(z + 2 * half, m));
            CHECK(std::abs(v_full - v) < 1e-9);
            if (sc % 2 == 1) {
                CHECK(std::abs(v_half + v) < 1e-9);  // antiperiodic over the half period
            } else {
                CHECK(std::abs(v_half - v) < 1e-9);
            }
        }
    }
}

TEST_CASE("potential is even and has the d-period") {
    const ModulusPair m(0.8, 0.3);
    const ParamVector p{8, 0, 6, 2, 6};
    const double period = 2 * complete_k(m.kappa) / m.k2p;
    for (double z : {0.31, 0.9, 2.2}) {
        CHECK(std::abs(potential(z, p, m) - potential(-z, p, m)) < 1e-10);
        CHECK(std::abs(potential(z + period, p, m) - potential(z, p, m)) < 1e-10);
    }
}

TEST_CASE("uniform grid") {
    const auto g = uniform_grid(0, 5, 11);
    CHECK(g.size() == 11);
    CHECK(g.front() == 0.0);
    CHECK(g.back() == 5.0);
    CHECK(g[1] == doctest::Approx(0.5));
    CHECK_THROWS_AS(uniform_grid(0, 1, 0), std::invalid_argument);
}
