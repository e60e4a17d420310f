// SPDX-License-Identifier: Apache-2.0
#include "ince.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "eigen_solver.hpp"
#include "errors.hpp"

namespace glame {

const char* fourier_class_name(FourierClass f) {
    switch (f) {
        case FourierClass::even_pi: return "even_pi";
        case FourierClass::odd_pi: return "odd_pi";
        case FourierClass::odd_2pi: return "odd_2pi";
        case FourierClass::even_2pi: return "even_2pi";
    }
    return "?";
}

bool is_two_pi(FourierClass f) {
    return f == FourierClass::odd_2pi || f == FourierClass::even_2pi;
}

const char* transform_name(InceTransform t) {
    switch (t) {
        case InceTransform::standard: return "standard";
        case InceTransform::d1_shifted: return "d1_shifted";
        case InceTransform::d2_shifted: return "d2_shifted";
    }
    return "?";
}

namespace detail {

namespace {
LinExpr lc(std::int64_t n, std::int64_t d = 1) { return LinExpr(Rational(n, d)); }
LinExpr lu(Unknown u, Rational s = Rational(1)) { return LinExpr::unknown(u, s); }
}  // namespace

SymbolicInce symbolic_ince(InceTransform t) {
    SymbolicInce si;
    // common denominator 2 - k1^2 - k2^2 + 3/4 k1^2 k2^2
    si.delta = SymPoly::mono(M_ONE, lc(2)) + SymPoly::mono(M_K1SQ, lc(-1)) +
               SymPoly::mono(M_K2SQ, lc(-1)) + SymPoly::mono(M_K1SQK2SQ, lc(3, 4));
    si.a1 = SymPoly::mono(M_K1SQ, lc(1)) + SymPoly::mono(M_K2SQ, lc(1)) +
            SymPoly::mono(M_K1SQK2SQ, lc(-1));
    si.a2 = SymPoly::mono(M_K1SQK2SQ, lc(1, 4));

    // 2E, with E = e0 + e1 k1^2 + e2 k2^2 + e3 k1^2 k2^2
    const SymPoly two_e =
        SymPoly::mono(M_ONE, lu(U_E0, Rational(2))) + SymPoly::mono(M_K1SQ, lu(U_E1, Rational(2))) +
        SymPoly::mono(M_K2SQ, lu(U_E2, Rational(2))) +
        SymPoly::mono(M_K1SQK2SQ, lu(U_E3, Rational(2)));

    switch (t) {
        case InceTransform::standard:
            si.b1 = Rational(-1) * si.a1;
            si.b2 = Rational(-2) * si.a2;
            si.cc = two_e + SymPoly::mono(M_K1SQ, lu(U_GAMMA, Rational(-1))) +
                    SymPoly::mono(M_K2SQ, lu(U_BETA, Rational(3, 4)) - lu(U_DELTA)) +
                    SymPoly::mono(M_K1SQK2SQ, lu(U_ALPHA, Rational(3, 4)) - lu(U_LAMBDA));
            si.p1 = SymPoly::mono(M_K1SQ, lu(U_GAMMA)) +
                    SymPoly::mono(M_K2SQ, lu(U_DELTA) - lu(U_BETA)) +
                    SymPoly::mono(M_K1SQK2SQ, lu(U_LAMBDA) - lu(U_ALPHA));
            si.p2 = SymPoly::mono(M_K1SQK2SQ, lu(U_ALPHA, Rational(1, 4))) +
                    SymPoly::mono(M_K2SQ, lu(U_BETA, Rational(1, 4)));
            break;
        case InceTransform::d1_shifted:
        case InceTransform::d2_shifted: {
            const bool d1 = (t == InceTransform::d1_shifted);
            si.b1 = SymPoly::mono(M_K1SQ, lc(d1 ? -3 : -1)) +
                    SymPoly::mono(M_K2SQ, lc(d1 ? -1 : -3)) + SymPoly::mono(M_K1SQK2SQ, lc(2));
            si.b2 = Rational(-4) * si.a2;
            si.cc = two_e + SymPoly::mono(M_K1SQ, lu(U_GAMMA, Rational(-1))) +
                    SymPoly::mono(M_K2SQ, lu(U_BETA, Rational(3, 4)) - lu(U_DELTA)) +
                    SymPoly::mono(M_K1SQK2SQ,
                                  lu(U_ALPHA, Rational(3, 4)) - lu(U_LAMBDA) + lc(-1, 4));
            si.p1 = SymPoly::mono(M_K1SQ, d1 ? lu(U_GAMMA) + lc(-2) : lu(U_GAMMA)) +
                    SymPoly::mono(M_K2SQ, d1 ? lu(U_DELTA) - lu(U_BETA)
                                             : lu(U_DELTA) - lu(U_BETA) + lc(-2)) +
                    SymPoly::mono(M_K1SQK2SQ, lu(U_LAMBDA) - lu(U_ALPHA) + lc(1));
            si.p2 = SymPoly::mono(M_K2SQ, lu(U_BETA, Rational(1, 4))) +
                    SymPoly::mono(M_K1SQK2SQ, lu(U_ALPHA, Rational(1, 4)) + lc(-3, 4));
            break;
        }
    }
    return si;
}

namespace {

SymPoly q_sym(int i, std::int64_t mu, const SymbolicInce& si) {
    const SymPoly& a = (i == 1) ? si.a1 : si.a2;
    const SymPoly& b = (i == 1) ? si.b1 : si.b2;
    const SymPoly& p = (i == 1) ? si.p1 : si.p2;
    return Rational(2 * mu * mu) * a - Rational(mu) * b - Rational(1, 2) * p;
}

SymPoly qstar_sym(int i, std::int64_t mu, const SymbolicInce& si) {
    const SymPoly& a = (i == 1) ? si.a1 : si.a2;
    const SymPoly& b = (i == 1) ? si.b1 : si.b2;
    const SymPoly& p = (i == 1) ? si.p1 : si.p2;
    const std::int64_t w = 2 * mu - 1;
    return Rational(w * w) * a - Rational(w) * b - Rational(1) * p;
}

}  // namespace

std::optional<SymPoly> symbolic_entry(FourierClass f, int r, int c, const SymbolicInce& si) {
    if (r < 0 || c < 0 || std::abs(r - c) > 2) return std::nullopt;
    auto diag = [&](std::int64_t v, int sigma) {
        return Rational(v) * si.delta - Rational(sigma) * si.cc;
    };
    switch (f) {
        case FourierClass::even_pi:
            if (r == 0) {
                if (c == 0) return diag(0, 1);
                if (c == 1) return q_sym(1, -1, si);
                return q_sym(2, -2, si);
            }
            if (r == 1) {
                if (c == 0) return q_sym(1, 0, si);
                if (c == 1) return diag(4, 1) + q_sym(2, -1, si);
                if (c == 2) return q_sym(1, -2, si);
                return q_sym(2, -3, si);
            }
            if (c == r - 2) return q_sym(2, r - 2, si);
            if (c == r - 1) return q_sym(1, r - 1, si);
            if (c == r) return diag(4ll * r * r, 1);
            if (c == r + 1) return q_sym(1, -r - 1, si);
            return q_sym(2, -r - 2, si);
        case FourierClass::odd_pi:
            if (r == 0) {
                if (c == 0) return diag(4, 1) - q_sym(2, -1, si);
                if (c == 1) return q_sym(1, -2, si);
                return q_sym(2, -3, si);
            }
            if (c == r - 2) return q_sym(2, r - 1, si);
            if (c == r - 1) return q_sym(1, r, si);
            if (c == r) return diag(4ll * (r + 1) * (r + 1), 1);
            if (c == r + 1) return q_sym(1, -r - 2, si);
            return q_sym(2, -r - 3, si);
        case FourierClass::odd_2pi:
        case FourierClass::even_2pi: {
            // cosine expansions fold the negative-index coefficient back with
            // a + sign, sine expansions with a - sign
            const Rational fold(f == FourierClass::even_2pi ? 1 : -1);
            if (r == 0) {
                if (c == 0) return diag(2, 2) + fold * qstar_sym(1, 0, si);
                if (c == 1) return qstar_sym(1, -1, si) + fold * qstar_sym(2, -1, si);
                return qstar_sym(2, -2, si);
            }
            if (r == 1 && c == 0) return qstar_sym(1, 1, si) + fold * qstar_sym(2, 0, si);
            if (c == r - 2) return qstar_sym(2, r - 1, si);
            if (c == r - 1) return qstar_sym(1, r, si);
            if (c == r) return diag(2ll * (2 * r + 1) * (2 * r + 1), 2);
            if (c == r + 1) return qstar_sym(1, -r - 1, si);
            return qstar_sym(2, -r - 2, si);
        }
    }
    return std::nullopt;
}

}  // namespace detail

namespace {

std::array<double, N_UNKNOWNS> unknowns_from(const ParamVector& p) {
    return {p.alpha, p.beta, p.gamma, p.delta, p.lambda, 0, 0, 0, 0};
}

}  // namespace

InceCoefficients ince_coefficients(const ParamVector& p, double E, const ModulusPair& m,
                                   InceTransform t) {
    const auto si = detail::symbolic_ince(t);
    const auto v = unknowns_from(p);
    const double k1sq = m.k1sq(), k2sq = m.k2sq();
    InceCoefficients co;
    co.denom = si.delta.eval(v, k1sq, k2sq);
    // 2 - k1^2 - k2^2 + 3/4 k1^2 k2^2 >= 3/4 on the admissible square
    if (!(co.denom > 0)) throw std::logic_error("ince_coefficients: nonpositive denominator");
    co.a1 = si.a1.eval(v, k1sq, k2sq) / co.denom;
    co.a2 = si.a2.eval(v, k1sq, k2sq) / co.denom;
    co.b1 = si.b1.eval(v, k1sq, k2sq) / co.denom;
    co.b2 = si.b2.eval(v, k1sq, k2sq) / co.denom;
    co.p1 = si.p1.eval(v, k1sq, k2sq) / co.denom;
    co.p2 = si.p2.eval(v, k1sq, k2sq) / co.denom;
    // with e0..e3 zeroed this is the E-free remainder of the cc numerator
    co.cc = (2 * E + si.cc.eval(v, k1sq, k2sq)) / co.denom;
    return co;
}

double c_to_energy(double cc, const ParamVector& p, const ModulusPair& m, InceTransform t) {
    const auto si = detail::symbolic_ince(t);
    const auto v = unknowns_from(p);
    const double k1sq = m.k1sq(), k2sq = m.k2sq();
    const double denom = si.delta.eval(v, k1sq, k2sq);
    const double rest = si.cc.eval(v, k1sq, k2sq);
    return (cc * denom - rest) / 2;
}

double q_poly(int i, double mu, const InceCoefficients& co) {
    const double a = (i == 1) ? co.a1 : co.a2;
    const double b = (i == 1) ? co.b1 : co.b2;
    const double p = (i == 1) ? co.p1 : co.p2;
    return 2 * a * mu * mu - b * mu - p / 2;
}

double qstar_poly(int i, double mu, const InceCoefficients& co) {
    const double a = (i == 1) ? co.a1 : co.a2;
    const double b = (i == 1) ? co.b1 : co.b2;
    const double p = (i == 1) ? co.p1 : co.p2;
    const double w = 2 * mu - 1;
    return a * w * w - b * w - p;
}

namespace {

std::optional<double> numeric_entry(FourierClass f, int r, int c, const InceCoefficients& co) {
    if (r < 0 || c < 0 || std::abs(r - c) > 2) return std::nullopt;
    auto q = [&](int i, double mu) { return q_poly(i, mu, co); };
    auto qs = [&](int i, double mu) { return qstar_poly(i, mu, co); };
    switch (f) {
        case FourierClass::even_pi:
            if (r == 0) {
                if (c == 0) return -co.cc;
                if (c == 1) return q(1, -1);
                return q(2, -2);
            }
            if (r == 1) {
                if (c == 0) return q(1, 0);
                if (c == 1) return 4 - co.cc + q(2, -1);
                if (c == 2) return q(1, -2);
                return q(2, -3);
            }
            if (c == r - 2) return q(2, r - 2);
            if (c == r - 1) return q(1, r - 1);
            if (c == r) return 4.0 * r * r - co.cc;
            if (c == r + 1) return q(1, -r - 1);
            return q(2, -r - 2);
        case FourierClass::odd_pi:
            if (r == 0) {
                if (c == 0) return 4 - co.cc - q(2, -1);
                if (c == 1) return q(1, -2);
                return q(2, -3);
            }
            if (c == r - 2) return q(2, r - 1);
            if (c == r - 1) return q(1, r);
            if (c == r) return 4.0 * (r + 1) * (r + 1) - co.cc;
            if (c == r + 1) return q(1, -r - 2);
            return q(2, -r - 3);
        case FourierClass::odd_2pi:
        case FourierClass::even_2pi: {
            const double fold = (f == FourierClass::even_2pi) ? 1.0 : -1.0;
            if (r == 0) {
                if (c == 0) return 2 - 2 * co.cc + fold * qs(1, 0);
                if (c == 1) return qs(1, -1) + fold * qs(2, -1);
                return qs(2, -2);
            }
            if (r == 1 && c == 0) return qs(1, 1) + fold * qs(2, 0);
            if (c == r - 2) return qs(2, r - 1);
            if (c == r - 1) return qs(1, r);
            if (c == r) return 2.0 * (2 * r + 1) * (2 * r + 1) - 2 * co.cc;
            if (c == r + 1) return qs(1, -r - 1);
            return qs(2, -r - 2);
        }
    }
    return std::nullopt;
}

}  // namespace

std::vector<double> recurrence_matrix(FourierClass f, const InceCoefficients& co, int n) {
    if (n < 5) throw std::invalid_argument("recurrence_matrix: truncation too small (n >= 5)");
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int r = 0; r < n; ++r)
        for (int c = std::max(0, r - 2); c <= std::min(n - 1, r + 2); ++c)
            if (auto e = numeric_entry(f, r, c, co)) a[r * n + c] = *e;
    return a;
}

namespace {

// Characteristic energies of the N-truncation: the diagonal carries
// -sigma * cc, so the cc values are eigenvalues of the cc = 0 matrix
// divided by sigma, and the (monotone affine) cc -> E map orders them.
//
// One wrinkle: the conventional even-pi matrix halves the constant-mode
// column (the constant couples into every other row with twice the generic
// weight).  Column scaling leaves the roots of det M(cc) = 0 alone, but the
// reduction to an ordinary eigenvalue problem needs the raw weights, so the
// sub-diagonal part of column 0 is restored here.
std::vector<double> hill_truncated(FourierClass f, const ParamVector& p, const ModulusPair& m,
                                   InceTransform t, int n) {
    const InceCoefficients co0 = ince_coefficients(p, c_to_energy(0.0, p, m, t), m, t);
    const double sigma = is_two_pi(f) ? 2.0 : 1.0;
    std::vector<double> mat = recurrence_matrix(f, co0, n);
    if (f == FourierClass::even_pi) {
        mat[1 * n + 0] *= 2;
        mat[2 * n + 0] *= 2;
    }
    const auto eig = real_matrix_eigenvalues(std::move(mat), n);
    std::vector<double> energies;
    energies.reserve(eig.size());
    for (const auto& ev : eig) {
        if (std::abs(ev.imag()) <= 1e-8 * std::max(1.0, std::abs(ev.real())))
            energies.push_back(c_to_energy(ev.real() / sigma, p, m, t));
    }
    std::sort(energies.begin(), energies.end());
    return energies;
}

}  // namespace

std::vector<double> hill_eigen_energies(FourierClass f, const ParamVector& p,
                                        const ModulusPair& m, InceTransform t, int n_trunc,
                                        int count) {
    if (count <= 0) throw std::invalid_argument("hill_eigen_energies: count must be positive");
    constexpr int n_cap = 512;
    constexpr double match_tol = 1e-8;
    int n = std::max(n_trunc, 2 * count + 8);
    std::vector<double> cur = hill_truncated(f, p, m, t, n);
    while (2 * n <= n_cap) {
        std::vector<double> next = hill_truncated(f, p, m, t, 2 * n);
        if (static_cast<int>(cur.size()) >= count && static_cast<int>(next.size()) >= count) {
            bool ok = true;
            for (int i = 0; i < count; ++i)
                if (std::abs(cur[i] - next[i]) >= match_tol) ok = false;
            if (ok) {
                next.resize(count);
                return next;
            }
        }
        n *= 2;
        cur = std::move(next);
    }
    throw ConvergenceError("hill_eigen_energies: no convergence up to truncation 512");
}

CoexistenceReport coexistence_conditions(FourierClass f, const InceCoefficients& co) {
    CoexistenceReport rep;
    rep.two_pi = is_two_pi(f);
    if (co.a2 == 0) {
        rep.degenerate_lame = true;
        rep.note = "a2 = 0 (k1 k2 = 0): five-term recurrence collapses to the classical "
                   "three-term case; coexistence analysis does not apply";
        return rep;
    }
    if (!rep.two_pi) {
        // b2 = 2 a2 (2 mu - 1)
        rep.mu = (co.b2 / (2 * co.a2) + 1) / 2;
    } else {
        // b2 = 4 a2 (mu - 1)
        rep.mu = co.b2 / (4 * co.a2) + 1;
    }
    rep.mu_integral = std::abs(rep.mu - std::round(rep.mu)) < 1e-12;
    if (!rep.mu_integral) {
        rep.note = "compatibility root mu is not integral: no coexisting pair of "
                   "periodic solutions";
        return rep;
    }
    if (!rep.two_pi && std::abs(rep.mu) < 1e-12) {
        // Q_i(0) = -p_i/2, so both remaining conditions force p1 = p2 = 0.
        rep.forces_zero_potential = true;
        rep.note = "mu = 0 admissible only with p1 = p2 = 0 (zero potential)";
        return rep;
    }
    const double r1 = rep.two_pi ? qstar_poly(1, rep.mu, co) : q_poly(1, rep.mu, co);
    const double r2 = rep.two_pi ? qstar_poly(2, rep.mu, co) : q_poly(2, rep.mu, co);
    rep.note = "integral mu; remaining conditions evaluate to " + std::to_string(r1) + ", " +
               std::to_string(r2);
    return rep;
}

unsigned vanishing_factor_mask(FourierClass f, VanishingWhich which, InceTransform t) {
    unsigned trig = 0;
    switch (f) {
        case FourierClass::even_pi: trig = 0; break;
        case FourierClass::odd_pi: trig = F_S | F_C; break;
        case FourierClass::odd_2pi: trig = F_S; break;
        case FourierClass::even_2pi: trig = F_C; break;
    }
    // A vanishing first column means the trigonometric part alone solves the
    // transformed equation; a vanishing first row corresponds to the
    // solution whose Fourier series is infinite but which is a product in
    // the original variables (d1 d2 times the trigonometric part for the
    // identity substitution).
    if (t == InceTransform::standard)
        return which == VanishingWhich::first_column ? trig : (trig | F_D1 | F_D2);
    if (t == InceTransform::d1_shifted)
        return which == VanishingWhich::first_column ? (trig | F_D1) : (trig | F_D2);
    return which == VanishingWhich::first_column ? (trig | F_D2) : (trig | F_D1);
}

namespace {

void append_poly_equations(const SymPoly& poly, std::vector<LinExpr>& eqs) {
    for (const auto& le : poly.m)
        if (!le.is_zero()) eqs.push_back(le);
}

struct SolvedTuple {
    std::array<int, 5> params;
    std::array<int, 3> energy;
};

LinearSolveResult solve_polys(const std::vector<SymPoly>& polys) {
    std::vector<LinExpr> eqs;
    for (const auto& p : polys) append_poly_equations(p, eqs);
    return solve_linear_system(std::move(eqs));
}

// Converts a consistent solve into an integer tuple.  Every consistent
// vanishing system encountered here pins all unknowns to integers with
// E affine in k1^2 and k2^2 alone; anything else would mean a transcription
// bug, so it fails loudly rather than being dropped.
SolvedTuple tuple_from(const LinearSolveResult& res, const char* what) {
    if (!res.unique) throw std::logic_error(std::string(what) + ": system underdetermined");
    for (int i = 0; i < N_UNKNOWNS; ++i)
        if (!res.value[i].is_integer())
            throw std::logic_error(std::string(what) + ": non-integral solution");
    if (!res.value[U_E3].is_zero())
        throw std::logic_error(std::string(what) + ": eigenvalue has a k1^2 k2^2 term");
    SolvedTuple out;
    for (int i = 0; i < 5; ++i) out.params[i] = static_cast<int>(res.value[i].num());
    out.energy = {static_cast<int>(res.value[U_E0].num()), static_cast<int>(res.value[U_E1].num()),
                  static_cast<int>(res.value[U_E2].num())};
    return out;
}

bool all_zero(const std::array<int, 5>& p) {
    return std::all_of(p.begin(), p.end(), [](int v) { return v == 0; });
}

}  // namespace

std::vector<VanishingSolution> enumerate_vanishing_solutions(InceTransform t,
                                                             const SearchBox& box) {
    const auto si = detail::symbolic_ince(t);
    std::vector<VanishingSolution> out;
    for (FourierClass f : all_fourier_classes) {
        for (VanishingWhich which : {VanishingWhich::first_row, VanishingWhich::first_column}) {
            std::vector<SymPoly> conds;
            for (int i = 0; i < 3; ++i) {
                const int r = which == VanishingWhich::first_row ? 0 : i;
                const int c = which == VanishingWhich::first_row ? i : 0;
                if (auto e = detail::symbolic_entry(f, r, c, si)) conds.push_back(*e);
            }
            const LinearSolveResult res = solve_polys(conds);
            if (!res.consistent) continue;
            const SolvedTuple solved = tuple_from(res, "enumerate_vanishing_solutions");
            if (all_zero(solved.params)) continue;  // zero potential, constant eigenfunction
            bool in_box = true;
            for (int i = 0; i < 5; ++i)
                if (i != 1 && (solved.params[i] < box.lo || solved.params[i] > box.hi))
                    in_box = false;
            if (!in_box) continue;
            out.push_back({solved.params, solved.energy, f, which, t,
                           vanishing_factor_mask(f, which, t)});
        }
    }
    return out;
}

std::vector<std::string> interior_vanishing_solutions(InceTransform t, int max_index) {
    const auto si = detail::symbolic_ince(t);
    std::vector<std::string> findings;
    for (FourierClass f : all_fourier_classes) {
        for (int idx = 1; idx <= max_index; ++idx) {
            for (bool row : {true, false}) {
                std::vector<SymPoly> conds;
                for (int o = -2; o <= 2; ++o) {
                    const int r = row ? idx : idx + o;
                    const int c = row ? idx + o : idx;
                    if (r < 0 || c < 0) continue;
                    if (auto e = detail::symbolic_entry(f, r, c, si)) conds.push_back(*e);
                }
                const LinearSolveResult res = solve_polys(conds);
                if (!res.consistent) continue;
                // any consistent system here (unique-nontrivial or a family)
                // would contradict the leading row/column argument
                std::string where = std::string(fourier_class_name(f)) + "/" +
                                    (row ? "row " : "column ") + std::to_string(idx);
                if (res.unique) {
                    const SolvedTuple solved = tuple_from(res, "interior_vanishing_solutions");
                    if (all_zero(solved.params)) continue;
                    findings.push_back(where + " vanishes for alpha=" +
                                       std::to_string(solved.params[0]));
                } else {
                    findings.push_back(where + " vanishes for a parameter family");
                }
            }
        }
    }
    return findings;
}

}  // namespace glame
