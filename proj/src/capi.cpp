// C boundary: translates between the opaque-handle/status-code surface and
// the C++ core, converting exceptions into status codes.
//
// SPDX-License-Identifier: Apache-2.0
#include "glame/glame.h"

#include <cstdio>
#include <cstring>
#include <new>
#include <string>

#include "elliptic.hpp"
#include "errors.hpp"
#include "gen_jacobi.hpp"
#include "ince.hpp"
#include "lame.hpp"
#include "series.hpp"

using namespace glame;

struct glame_modulus {
    ModulusPair m;
};

namespace {

template <class F>
glame_status guarded(F&& fn) {
    try {
        fn();
        return GLAME_OK;
    } catch (const std::domain_error&) {
        return GLAME_ERR_DOMAIN;
    } catch (const std::invalid_argument&) {
        return GLAME_ERR_DOMAIN;
    } catch (const ConvergenceError&) {
        return GLAME_ERR_CONVERGENCE;
    } catch (const std::bad_alloc&) {
        return GLAME_ERR_INTERNAL;
    } catch (const std::exception&) {
        return GLAME_ERR_INTERNAL;
    }
}

ParamVector to_params(const glame_params* p) {
    return {p->alpha, p->beta, p->gamma, p->delta, p->lambda};
}

bool to_class(glame_fourier_class f, FourierClass& out) {
    switch (f) {
        case GLAME_EVEN_PI: out = FourierClass::even_pi; return true;
        case GLAME_ODD_PI: out = FourierClass::odd_pi; return true;
        case GLAME_ODD_2PI: out = FourierClass::odd_2pi; return true;
        case GLAME_EVEN_2PI: out = FourierClass::even_2pi; return true;
    }
    return false;
}

bool to_transform(glame_transform t, InceTransform& out) {
    switch (t) {
        case GLAME_TRANSFORM_STANDARD: out = InceTransform::standard; return true;
        case GLAME_TRANSFORM_D1_SHIFTED: out = InceTransform::d1_shifted; return true;
        case GLAME_TRANSFORM_D2_SHIFTED: out = InceTransform::d2_shifted; return true;
    }
    return false;
}

InceCoefficients to_co(const glame_ince_coefficients* co) {
    return {co->a1, co->a2, co->b1, co->b2, co->cc, co->p1, co->p2, co->denom};
}

void copy_str(char* dst, size_t cap, const std::string& s) {
    std::snprintf(dst, cap, "%s", s.c_str());
}

glame_status string_out(char* buf, size_t cap, const std::string& s) {
    if (!buf || cap == 0) return GLAME_ERR_ARGUMENT;
    if (s.size() + 1 > cap) return GLAME_ERR_ARGUMENT;
    std::memcpy(buf, s.c_str(), s.size() + 1);
    return GLAME_OK;
}

}  // namespace

extern "C" {

const char* glame_status_name(glame_status s) {
    switch (s) {
        case GLAME_OK: return "ok";
        case GLAME_ERR_DOMAIN: return "domain error";
        case GLAME_ERR_CONVERGENCE: return "convergence failure";
        case GLAME_ERR_ARGUMENT: return "invalid argument";
        case GLAME_ERR_INTERNAL: return "internal error";
    }
    return "unknown";
}

const char* glame_version(void) { return "1.0.0"; }

glame_status glame_modulus_create(double k1, double k2, glame_modulus** out) {
    if (!out) return GLAME_ERR_ARGUMENT;
    *out = nullptr;
    return guarded([&] { *out = new glame_modulus{ModulusPair(k1, k2)}; });
}

void glame_modulus_destroy(glame_modulus* m) { delete m; }

double glame_modulus_k1(const glame_modulus* m) { return m->m.k1; }
double glame_modulus_k2(const glame_modulus* m) { return m->m.k2; }
double glame_modulus_kappa(const glame_modulus* m) { return m->m.kappa; }
double glame_modulus_k2prime(const glame_modulus* m) { return m->m.k2p; }

glame_status glame_complete_k(double k, double* out) {
    if (!out) return GLAME_ERR_ARGUMENT;
    return guarded([&] { *out = complete_k(k); });
}

glame_status glame_jacobi_scd(double u, double k, double* sn, double* cn, double* dn) {
    if (!sn || !cn || !dn) return GLAME_ERR_ARGUMENT;
    return guarded([&] {
        const JacobiTriple j = jacobi_scd(u, k);
        *sn = j.sn;
        *cn = j.cn;
        *dn = j.dn;
    });
}

glame_status glame_eval(const glame_modulus* m, double u, glame_point* out) {
    if (!m || !out) return GLAME_ERR_ARGUMENT;
    return guarded([&] {
        const GenJacobiPoint p = eval_all(u, m->m);
        *out = {p.s, p.c, p.d1, p.d2};
    });
}

glame_status glame_eval_derivatives(const glame_modulus* m, double u, double out[4]) {
    if (!m || !out) return GLAME_ERR_ARGUMENT;
    return guarded([&] {
        const GenJacobiDerivatives d = eval_derivatives(u, m->m);
        out[0] = d.ds;
        out[1] = d.dc;
        out[2] = d.dd1;
        out[3] = d.dd2;
    });
}

glame_status glame_eval_second_derivatives(const glame_modulus* m, double u, double out[3]) {
    if (!m || !out) return GLAME_ERR_ARGUMENT;
    return guarded([&] {
        const GenJacobiSecondDerivatives d = eval_second_derivatives(u, m->m);
        out[0] = d.dss;
        out[1] = d.dcc;
        out[2] = d.dd1d1;
    });
}

glame_status glame_get_branch_data(const glame_modulus* m, glame_branch_data* out) {
    if (!m || !out) return GLAME_ERR_ARGUMENT;
    return guarded([&] {
        const BranchData b = branch_data(m->m);
        out->u1_re = b.u1.real();
        out->u1_im = b.u1.imag();
        out->u2_re = b.u2.real();
        out->u2_im = b.u2.imag();
        out->u3_re = b.u3.real();
        out->u3_im = b.u3.imag();
        out->u4_re = b.u4.real();
        out->u4_im = b.u4.imag();
        out->real_period_s = b.real_period_s;
        out->real_period_c = b.real_period_c;
        out->real_period_d = b.real_period_d;
    });
}

glame_status glame_real_periods(const glame_modulus* m, double* period_sc, double* period_d) {
    if (!m || !period_sc || !period_d) return GLAME_ERR_ARGUMENT;
    return guarded([&] {
        const double kk = complete_k(m->m.kappa);
        *period_sc = 4 * kk / m->m.k2p;
        *period_d = 2 * kk / m->m.k2p;
    });
}

glame_status glame_amplitude(const glame_modulus* m, double z, double* out) {
    if (!m || !out) return GLAME_ERR_ARGUMENT;
    return guarded([&] { *out = amplitude(z, m->m); });
}

glame_status glame_invert_hyperelliptic(const glame_modulus* m, double y, double* out) {
    if (!m || !out) return GLAME_ERR_ARGUMENT;
    return guarded([&] { *out = invert_hyperelliptic(y, m->m); });
}

glame_status glame_potential(const glame_modulus* m, const glame_params* p, double z,
                             double* out) {
    if (!m || !p || !out) return GLAME_ERR_ARGUMENT;
    return guarded([&] { *out = potential(z, to_params(p), m->m); });
}

glame_status glame_algebraic_residual(const glame_modulus* m, const glame_params* p, double e,
                                      double x, double f, double fp, double fpp, double* out) {
    if (!m || !p || !out) return GLAME_ERR_ARGUMENT;
    return guarded([&] { *out = algebraic_residual(x, to_params(p), e, m->m, f, fp, fpp); });
}

int glame_catalog_size(void) { return static_cast<int>(catalog().size()); }

glame_status glame_catalog_get(int index, glame_catalog_entry* out) {
    if (!out || index < 0 || index >= glame_catalog_size()) return GLAME_ERR_ARGUMENT;
    const CatalogEntry& e = catalog()[index];
    out->alpha = e.params[0];
    out->beta = e.params[1];
    out->gamma = e.params[2];
    out->delta = e.params[3];
    out->lambda = e.params[4];
    out->e0 = e.energy[0];
    out->e1 = e.energy[1];
    out->e2 = e.energy[2];
    out->factors = e.factors;
    copy_str(out->factors_str, sizeof out->factors_str, factors_to_string(e.factors));
    return GLAME_OK;
}

glame_status glame_catalog_energy(const glame_modulus* m, int index, double* out) {
    if (!m || !out || index < 0 || index >= glame_catalog_size()) return GLAME_ERR_ARGUMENT;
    *out = catalog()[index].energy_at(m->m);
    return GLAME_OK;
}

glame_status glame_catalog_eigenfunction(const glame_modulus* m, int index, double z,
                                         double* out) {
    if (!m || !out || index < 0 || index >= glame_catalog_size()) return GLAME_ERR_ARGUMENT;
    return guarded([&] {
        const JacobiPoly f = JacobiPoly::monomial(catalog()[index].factors);
        *out = f.eval(eval_all(z, m->m));
    });
}

glame_status glame_catalog_residual(const glame_modulus* m, int index, double e_offset,
                                    int grid_points, double* out) {
    if (!m || !out || index < 0 || index >= glame_catalog_size() || grid_points < 2)
        return GLAME_ERR_ARGUMENT;
    return guarded([&] {
        const double period = 4 * complete_k(m->m.kappa) / m->m.k2p;
        const auto grid = uniform_grid(0.0, period, grid_points);
        *out = schrodinger_residual(catalog()[index], m->m, grid, e_offset);
    });
}

glame_status glame_catalog_csv(char* buf, size_t cap) { return string_out(buf, cap, catalog_csv()); }

glame_status glame_get_ince_coefficients(const glame_modulus* m, const glame_params* p, double e,
                                     glame_transform t, glame_ince_coefficients* out) {
    InceTransform tt;
    if (!m || !p || !out || !to_transform(t, tt)) return GLAME_ERR_ARGUMENT;
    return guarded([&] {
        const InceCoefficients co = ince_coefficients(to_params(p), e, m->m, tt);
        *out = {co.a1, co.a2, co.b1, co.b2, co.cc, co.p1, co.p2, co.denom};
    });
}

glame_status glame_c_to_energy(const glame_modulus* m, const glame_params* p, double cc,
                               glame_transform t, double* out) {
    InceTransform tt;
    if (!m || !p || !out || !to_transform(t, tt)) return GLAME_ERR_ARGUMENT;
    return guarded([&] { *out = c_to_energy(cc, to_params(p), m->m, tt); });
}

double glame_q_poly(int i, double mu, const glame_ince_coefficients* co) {
    return q_poly(i, mu, to_co(co));
}

double glame_qstar_poly(int i, double mu, const glame_ince_coefficients* co) {
    return qstar_poly(i, mu, to_co(co));
}

glame_status glame_recurrence_matrix(glame_fourier_class f, const glame_ince_coefficients* co,
                                     int n, double* out) {
    FourierClass ff;
    if (!co || !out || !to_class(f, ff)) return GLAME_ERR_ARGUMENT;
    return guarded([&] {
        const auto mat = recurrence_matrix(ff, to_co(co), n);
        std::memcpy(out, mat.data(), mat.size() * sizeof(double));
    });
}

glame_status glame_hill_energies(const glame_modulus* m, const glame_params* p,
                                 glame_fourier_class f, glame_transform t, int n_trunc,
                                 int count, double* out) {
    FourierClass ff;
    InceTransform tt;
    if (!m || !p || !out || count <= 0 || !to_class(f, ff) || !to_transform(t, tt))
        return GLAME_ERR_ARGUMENT;
    return guarded([&] {
        const auto e = hill_eigen_energies(ff, to_params(p), m->m, tt, n_trunc, count);
        std::memcpy(out, e.data(), e.size() * sizeof(double));
    });
}

glame_status glame_coexistence(glame_fourier_class f, const glame_ince_coefficients* co,
                               glame_coexistence_report* out) {
    FourierClass ff;
    if (!co || !out || !to_class(f, ff)) return GLAME_ERR_ARGUMENT;
    return guarded([&] {
        const CoexistenceReport rep = coexistence_conditions(ff, to_co(co));
        out->degenerate_lame = rep.degenerate_lame;
        out->two_pi = rep.two_pi;
        out->mu = rep.mu;
        out->mu_integral = rep.mu_integral;
        out->forces_zero_potential = rep.forces_zero_potential;
        copy_str(out->note, sizeof out->note, rep.note);
    });
}

glame_status glame_enumerate(glame_enum_route route, int box_lo, int box_hi,
                             glame_poly_solution* out, size_t cap, size_t* count) {
    if (!count || (cap > 0 && !out)) return GLAME_ERR_ARGUMENT;
    if (route != GLAME_ROUTE_FOURIER && route != GLAME_ROUTE_SERIES) return GLAME_ERR_ARGUMENT;
    return guarded([&] {
        const SearchBox box{box_lo, box_hi};
        struct Row {
            std::array<int, 5> params;
            std::array<int, 3> energy;
            unsigned factors;
            std::string route;
        };
        std::vector<Row> rows;
        if (route == GLAME_ROUTE_FOURIER) {
            for (InceTransform t : {InceTransform::standard, InceTransform::d1_shifted}) {
                for (const auto& s : enumerate_vanishing_solutions(t, box)) {
                    bool dup = false;
                    for (const auto& r : rows)
                        if (r.params == s.params) dup = true;
                    if (dup) continue;
                    const std::string r = std::string(fourier_class_name(s.fourier_class)) + "/" +
                                          (s.which == VanishingWhich::first_row ? "first_row"
                                                                                : "first_column") +
                                          "/" + transform_name(s.transform);
                    rows.push_back({s.params, s.energy, s.factors, r});
                }
            }
        } else {
            for (const auto& s : termination_search_all(box))
                rows.push_back({s.params, s.energy, s.factors,
                                "series " + ansatz_name(s.kind)});
        }
        *count = rows.size();
        const size_t n = std::min(cap, rows.size());
        for (size_t i = 0; i < n; ++i) {
            out[i].alpha = rows[i].params[0];
            out[i].beta = rows[i].params[1];
            out[i].gamma = rows[i].params[2];
            out[i].delta = rows[i].params[3];
            out[i].lambda = rows[i].params[4];
            out[i].e0 = rows[i].energy[0];
            out[i].e1 = rows[i].energy[1];
            out[i].e2 = rows[i].energy[2];
            out[i].factors = rows[i].factors;
            copy_str(out[i].factors_str, sizeof out[i].factors_str,
                     factors_to_string(rows[i].factors));
            copy_str(out[i].route, sizeof out[i].route, rows[i].route);
        }
    });
}

int glame_ansatz_count(void) { return static_cast<int>(all_ansatz_kinds().size()); }

const char* glame_ansatz_name(int kind) {
    static thread_local std::string name;
    if (kind < 0 || kind >= glame_ansatz_count()) return nullptr;
    name = ansatz_name(all_ansatz_kinds()[kind]);
    return name.c_str();
}

glame_status glame_band_row(int kind, int n, const glame_params* p, double e,
                            const glame_modulus* m, double out[4]) {
    if (!p || !m || !out || kind < 0 || kind >= glame_ansatz_count()) return GLAME_ERR_ARGUMENT;
    return guarded([&] {
        const BandRow row = band_row(all_ansatz_kinds()[kind], n, to_params(p), e, m->m);
        out[0] = row.D;
        out[1] = row.f;
        out[2] = row.M1;
        out[3] = row.M2;
    });
}

glame_status glame_series_coefficients(int kind, const glame_params* p, double e,
                                       const glame_modulus* m, int count, double* out) {
    if (!p || !m || !out || count <= 0 || kind < 0 || kind >= glame_ansatz_count())
        return GLAME_ERR_ARGUMENT;
    return guarded([&] {
        const auto a = series_coefficients(all_ansatz_kinds()[kind], to_params(p), e, m->m, count);
        std::memcpy(out, a.data(), a.size() * sizeof(double));
    });
}

glame_status glame_band_discrepancies(char* buf, size_t cap) {
    std::string text;
    for (const auto& d : band_discrepancies()) {
        text += "kind " + ansatz_name(d.kind) + ", entry " + d.entry + ", n=" +
                std::to_string(d.first_n) + ": printed " + d.printed + " | derived " + d.derived +
                " | resolved: derived form used\n";
    }
    return string_out(buf, cap, text);
}

}  // extern "C"
