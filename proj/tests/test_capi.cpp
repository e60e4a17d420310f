// Exercises the shared-library boundary: handles, status codes, table
// fills, and string exports.
//
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <thread>
#include <vector>

#include "glame/glame.h"

namespace {
struct Handle {
    glame_modulus* m = nullptr;
    Handle(double k1, double k2) { REQUIRE(glame_modulus_create(k1, k2, &m) == GLAME_OK); }
    ~Handle() { glame_modulus_destroy(m); }
};
}  // namespace

TEST_CASE("modulus handle lifecycle and validation") {
    glame_modulus* m = nullptr;
    CHECK(glame_modulus_create(0.3, 0.8, &m) == GLAME_ERR_DOMAIN);
    CHECK(m == nullptr);
    CHECK(glame_modulus_create(0.8, 0.3, nullptr) == GLAME_ERR_ARGUMENT);
    REQUIRE(glame_modulus_create(0.8, 0.3, &m) == GLAME_OK);
    CHECK(glame_modulus_k1(m) == 0.8);
    CHECK(glame_modulus_k2(m) == 0.3);
    CHECK(glame_modulus_k2prime(m) == doctest::Approx(std::sqrt(0.91)).epsilon(1e-15));
    glame_modulus_destroy(m);
    glame_modulus_destroy(nullptr);  // must be a no-op
}

TEST_CASE("elliptic layer through the boundary") {
    double kk = 0;
    CHECK(glame_complete_k(0.0, &kk) == GLAME_OK);
    CHECK(kk == doctest::Approx(1.5707963267948966));
    CHECK(glame_complete_k(1.0, &kk) == GLAME_ERR_DOMAIN);
    double sn, cn, dn;
    CHECK(glame_jacobi_scd(0.7, 0.8, &sn, &cn, &dn) == GLAME_OK);
    CHECK(std::abs(sn * sn + cn * cn - 1) < 1e-12);
    CHECK(glame_jacobi_scd(0.7, 1.5, &sn, &cn, &dn) == GLAME_ERR_DOMAIN);
}

TEST_CASE("evaluation, derivatives, periods") {
    Handle h(0.8, 0.3);
    glame_point pt;
    REQUIRE(glame_eval(h.m, 0.0, &pt) == GLAME_OK);
    CHECK(pt.s == 0.0);
    CHECK(pt.c == 1.0);
    double der[4];
    REQUIRE(glame_eval_derivatives(h.m, 0.0, der) == GLAME_OK);
    CHECK(der[0] == 1.0);
    double der2[3];
    REQUIRE(glame_eval_second_derivatives(h.m, 0.0, der2) == GLAME_OK);
    CHECK(der2[0] == 0.0);

    glame_branch_data b;
    REQUIRE(glame_get_branch_data(h.m, &b) == GLAME_OK);
    double psc, pd;
    REQUIRE(glame_real_periods(h.m, &psc, &pd) == GLAME_OK);
    CHECK(b.real_period_s == doctest::Approx(psc).epsilon(1e-15));
    CHECK(b.real_period_d == doctest::Approx(pd).epsilon(1e-15));
    CHECK(psc == doctest::Approx(2 * pd).epsilon(1e-15));

    glame_point shifted;
    REQUIRE(glame_eval(h.m, 1.1 + psc, &shifted) == GLAME_OK);
    REQUIRE(glame_eval(h.m, 1.1, &pt) == GLAME_OK);
    CHECK(std::abs(shifted.s - pt.s) < 1e-9);

    double amp;
    REQUIRE(glame_amplitude(h.m, 0.5, &amp) == GLAME_OK);
    glame_point at_half;
    REQUIRE(glame_eval(h.m, 0.5, &at_half) == GLAME_OK);
    CHECK(std::abs(std::sin(amp) - at_half.s) < 1e-9);
    double u;
    REQUIRE(glame_invert_hyperelliptic(h.m, 0.6, &u) == GLAME_OK);
    glame_point back;
    REQUIRE(glame_eval(h.m, u, &back) == GLAME_OK);
    CHECK(std::abs(back.s - 0.6) < 1e-9);
    CHECK(glame_invert_hyperelliptic(h.m, 1.0, &u) == GLAME_ERR_DOMAIN);

    Handle degenerate(0.5, 0.5);
    glame_branch_data bd;
    CHECK(glame_get_branch_data(degenerate.m, &bd) == GLAME_ERR_DOMAIN);

    // period queries are errors at k1 = 1, evaluation is not
    Handle boundary(1.0, 0.3);
    CHECK(glame_real_periods(boundary.m, &psc, &pd) == GLAME_ERR_DOMAIN);
    CHECK(glame_eval(boundary.m, 0.7, &pt) == GLAME_OK);
}

TEST_CASE("catalog access and residuals") {
    Handle h(0.8, 0.3);
    REQUIRE(glame_catalog_size() == 15);
    glame_catalog_entry e;
    REQUIRE(glame_catalog_get(5, &e) == GLAME_OK);
    CHECK(e.alpha == 8);
    CHECK(std::string(e.factors_str) == "d1*d2");
    CHECK(glame_catalog_get(15, &e) == GLAME_ERR_ARGUMENT);

    double energy;
    REQUIRE(glame_catalog_energy(h.m, 5, &energy) == GLAME_OK);
    CHECK(energy == doctest::Approx(0.73).epsilon(1e-14));

    double f;
    REQUIRE(glame_catalog_eigenfunction(h.m, 5, 0.0, &f) == GLAME_OK);
    CHECK(f == 1.0);

    double r;
    for (int i = 0; i < 15; ++i) {
        REQUIRE(glame_catalog_residual(h.m, i, 0.0, 501, &r) == GLAME_OK);
        CHECK(r < 1e-10);
    }
    REQUIRE(glame_catalog_residual(h.m, 0, 1e-3, 501, &r) == GLAME_OK);
    CHECK(r == doctest::Approx(1e-3).epsilon(1e-3));

    char csv[2048];
    REQUIRE(glame_catalog_csv(csv, sizeof csv) == GLAME_OK);
    CHECK(std::string(csv).find("24,0,12,12,12,4,4,4,s*c*d1*d2") != std::string::npos);
    char tiny[8];
    CHECK(glame_catalog_csv(tiny, sizeof tiny) == GLAME_ERR_ARGUMENT);
}

TEST_CASE("potential and algebraic residual") {
    Handle h(0.8, 0.3);
    glame_params p{3, 0, 2, 2, 2};
    double v;
    REQUIRE(glame_potential(h.m, &p, 0.0, &v) == GLAME_OK);
    CHECK(v == 0.0);
    const double x = 0.25, f = 0.5, fp = 1.0, fpp = -2.0;
    double res;
    REQUIRE(glame_algebraic_residual(h.m, &p, 1.73, x, f, fp, fpp, &res) == GLAME_OK);
    CHECK(std::abs(res) < 1e-10);
    CHECK(glame_algebraic_residual(h.m, &p, 1.73, 0.0, f, fp, fpp, &res) == GLAME_ERR_DOMAIN);
}

TEST_CASE("trigonometric coefficients and spectra") {
    Handle h(0.8, 0.3);
    glame_params p{3, 0, 2, 2, 2};
    glame_ince_coefficients co;
    REQUIRE(glame_get_ince_coefficients(h.m, &p, 1.73, GLAME_TRANSFORM_STANDARD, &co) == GLAME_OK);
    CHECK(co.b1 == -co.a1);
    CHECK(co.denom == doctest::Approx(1.3132).epsilon(1e-14));
    double e_back;
    REQUIRE(glame_c_to_energy(h.m, &p, co.cc, GLAME_TRANSFORM_STANDARD, &e_back) == GLAME_OK);
    CHECK(e_back == doctest::Approx(1.73).epsilon(1e-13));
    CHECK(glame_q_poly(1, 0.0, &co) == -co.p1 / 2);
    CHECK(glame_qstar_poly(1, 0.5, &co) == -co.p1);

    const int n = 6;
    std::vector<double> mat(n * n);
    REQUIRE(glame_recurrence_matrix(GLAME_EVEN_PI, &co, n, mat.data()) == GLAME_OK);
    CHECK(mat[0] == -co.cc);
    CHECK(glame_recurrence_matrix(GLAME_EVEN_PI, &co, 3, mat.data()) == GLAME_ERR_DOMAIN);

    double energies[3];
    REQUIRE(glame_hill_energies(h.m, &p, GLAME_ODD_2PI, GLAME_TRANSFORM_STANDARD, 64, 3,
                                energies) == GLAME_OK);
    CHECK(std::abs(energies[0] - 1.73) < 1e-8);

    glame_coexistence_report rep;
    REQUIRE(glame_coexistence(GLAME_EVEN_PI, &co, &rep) == GLAME_OK);
    CHECK(rep.mu == 0.0);
    CHECK(rep.mu_integral);
    CHECK(rep.forces_zero_potential);
    REQUIRE(glame_coexistence(GLAME_ODD_2PI, &co, &rep) == GLAME_OK);
    CHECK(rep.mu == 0.5);
    CHECK(!rep.mu_integral);
}

TEST_CASE("both enumeration routes yield the catalog through the boundary") {
    for (glame_enum_route route : {GLAME_ROUTE_FOURIER, GLAME_ROUTE_SERIES}) {
        glame_poly_solution rows[32];
        size_t count = 0;
        REQUIRE(glame_enumerate(route, 0, 30, rows, 32, &count) == GLAME_OK);
        CHECK(count == 15);
        int matched = 0;
        for (size_t i = 0; i < count; ++i) {
            for (int j = 0; j < glame_catalog_size(); ++j) {
                glame_catalog_entry e;
                glame_catalog_get(j, &e);
                if (e.alpha == rows[i].alpha && e.gamma == rows[i].gamma &&
                    e.delta == rows[i].delta && e.lambda == rows[i].lambda &&
                    e.e0 == rows[i].e0 && e.e1 == rows[i].e1 && e.e2 == rows[i].e2 &&
                    std::string(e.factors_str) == rows[i].factors_str)
                    ++matched;
            }
        }
        CHECK(matched == 15);
    }
}

TEST_CASE("concurrent use of a shared handle") {
    Handle h(0.8, 0.3);
    glame_point ref;
    REQUIRE(glame_eval(h.m, 1.3, &ref) == GLAME_OK);
    double ref_e[2];
    glame_params p{3, 0, 2, 2, 2};
    REQUIRE(glame_hill_energies(h.m, &p, GLAME_ODD_2PI, GLAME_TRANSFORM_STANDARD, 32, 2, ref_e) ==
            GLAME_OK);

    std::vector<std::thread> workers;
    std::vector<int> bad(4, 0);
    for (int w = 0; w < 4; ++w) {
        workers.emplace_back([&, w] {
            for (int i = 0; i < 50; ++i) {
                glame_point pt;
                if (glame_eval(h.m, 1.3, &pt) != GLAME_OK || pt.s != ref.s || pt.d1 != ref.d1)
                    bad[w] = 1;
                double e[2];
                if (glame_hill_energies(h.m, &p, GLAME_ODD_2PI, GLAME_TRANSFORM_STANDARD, 32, 2,
                                        e) != GLAME_OK ||
                    e[0] != ref_e[0])
                    bad[w] = 1;
            }
        });
    }
    for (auto& t : workers) t.join();
    for (int w = 0; w < 4; ++w) CHECK(bad[w] == 0);
}

TEST_CASE("series layer through the boundary") {
    Handle h(0.8, 0.3);
    CHECK(glame_ansatz_count() == 16);
    CHECK(glame_ansatz_name(0) != nullptr);
    CHECK(glame_ansatz_name(99) == nullptr);

    glame_params p{3, 0, 2, 2, 2};
    const double e_val = 1 + 0.64 + 0.09;
    // locate the plain odd kind
    int plain_odd = -1;
    for (int i = 0; i < glame_ansatz_count(); ++i)
        if (std::string(glame_ansatz_name(i)) == "1/odd") plain_odd = i;
    REQUIRE(plain_odd >= 0);
    double row[4];
    REQUIRE(glame_band_row(plain_odd, 0, &p, e_val, h.m, row) == GLAME_OK);
    CHECK(std::abs(row[0]) < 1e-14);
    CHECK(row[1] == 6.0);

    double coeffs[8];
    REQUIRE(glame_series_coefficients(plain_odd, &p, e_val, h.m, 8, coeffs) == GLAME_OK);
    CHECK(coeffs[0] == 1.0);
    for (int i = 1; i < 8; ++i) CHECK(std::abs(coeffs[i]) < 1e-13);

    std::vector<char> report(8192);
    REQUIRE(glame_band_discrepancies(report.data(), report.size()) == GLAME_OK);
    const std::string text(report.data());
    CHECK(text.find("d1*d2/odd") != std::string::npos);
    CHECK(text.find("k1^4") != std::string::npos);
    CHECK(text.find("resolved: derived form used") != std::string::npos);
}
