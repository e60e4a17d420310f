// SPDX-License-Identifier: Apache-2.0
#include "series.hpp"

#include <cmath>
#include <stdexcept>

namespace glame {

namespace {

// SymPoly with constant (parameter-free) rational coefficients on
// {1, k1^2, k2^2, k1^2 k2^2}.
SymPoly kp(Rational one, Rational k1, Rational k2, Rational k12) {
    SymPoly p;
    p.m[M_ONE] = LinExpr(one);
    p.m[M_K1SQ] = LinExpr(k1);
    p.m[M_K2SQ] = LinExpr(k2);
    p.m[M_K1SQK2SQ] = LinExpr(k12);
    return p;
}

struct FactorTriple {
    SymPoly s0, s1, s2;  // coefficients of S^0, S^1, S^2 with S = s^2
};

// w''/w for a single factor, as a quadratic in S.
FactorTriple second_derivative_ratio(unsigned factor) {
    switch (factor) {
        case F_C:
            return {kp(-1, 0, 0, 0), kp(0, 2, 2, 0), kp(0, 0, 0, -3)};
        case F_D1:
            return {kp(0, -1, 0, 0), kp(0, 2, 0, 2), kp(0, 0, 0, -3)};
        case F_D2:
            return {kp(0, 0, -1, 0), kp(0, 0, 2, 2), kp(0, 0, 0, -3)};
    }
    throw std::logic_error("second_derivative_ratio: bad factor");
}

// 2 (w'/w) s' / s for a single factor, as a quadratic in S.
FactorTriple log_derivative_term(unsigned factor) {
    switch (factor) {
        case F_C:
            return {kp(-2, 0, 0, 0), kp(0, 2, 2, 0), kp(0, 0, 0, -2)};
        case F_D1:
            return {kp(0, -2, 0, 0), kp(0, 2, 0, 2), kp(0, 0, 0, -2)};
        case F_D2:
            return {kp(0, 0, -2, 0), kp(0, 0, 2, 2), kp(0, 0, 0, -2)};
    }
    throw std::logic_error("log_derivative_term: bad factor");
}

// 2 (w1'/w1)(w2'/w2) for a pair of distinct factors.
FactorTriple cross_term(unsigned pair) {
    if (pair == (F_C | F_D1)) return {kp(0, 0, 0, 0), kp(0, 2, 0, 0), kp(0, 0, 0, -2)};
    if (pair == (F_C | F_D2)) return {kp(0, 0, 0, 0), kp(0, 0, 2, 0), kp(0, 0, 0, -2)};
    if (pair == (F_D1 | F_D2)) return {kp(0, 0, 0, 0), kp(0, 0, 0, 2), kp(0, 0, 0, -2)};
    throw std::logic_error("cross_term: bad pair");
}

FactorTriple add(const FactorTriple& a, const FactorTriple& b) {
    return {a.s0 + b.s0, a.s1 + b.s1, a.s2 + b.s2};
}

const unsigned kFactors[3] = {F_C, F_D1, F_D2};

}  // namespace

const std::vector<AnsatzKind>& all_ansatz_kinds() {
    static const std::vector<AnsatzKind> kinds = [] {
        std::vector<AnsatzKind> v;
        const unsigned prefactors[8] = {0,          F_C,        F_D1,          F_D2,
                                        F_C | F_D1, F_C | F_D2, F_D1 | F_D2,   F_C | F_D1 | F_D2};
        for (unsigned pf : prefactors)
            for (SeriesParity par : {SeriesParity::odd, SeriesParity::even})
                v.push_back({pf, par});
        return v;
    }();
    return kinds;
}

bool has_printed_band(const AnsatzKind& kind) {
    // the tabulation omits the d2-without-d1 prefactors
    return !((kind.prefactor & F_D2) && !(kind.prefactor & F_D1));
}

std::string ansatz_name(const AnsatzKind& kind) {
    return factors_to_string(kind.prefactor) +
           (kind.parity == SeriesParity::odd ? "/odd" : "/even");
}

unsigned ansatz_factor_mask(const AnsatzKind& kind) {
    return kind.prefactor | (kind.parity == SeriesParity::odd ? F_S : 0u);
}

namespace detail {

SymBandRow derived_band(const AnsatzKind& kind, int n) {
    const std::int64_t j = 2ll * n + (kind.parity == SeriesParity::odd ? 1 : 0);

    FactorTriple w = {kp(0, 0, 0, 0), kp(0, 0, 0, 0), kp(0, 0, 0, 0)};
    FactorTriple g = w;
    for (unsigned f1 : kFactors) {
        if (!(kind.prefactor & f1)) continue;
        w = add(w, second_derivative_ratio(f1));
        g = add(g, log_derivative_term(f1));
        for (unsigned f2 : kFactors) {
            if (f2 <= f1 || !(kind.prefactor & f2)) continue;
            w = add(w, cross_term(f1 | f2));
        }
    }

    SymPoly energy;
    energy.m[M_ONE] = LinExpr::unknown(U_E0);
    energy.m[M_K1SQ] = LinExpr::unknown(U_E1);
    energy.m[M_K2SQ] = LinExpr::unknown(U_E2);
    energy.m[M_K1SQK2SQ] = LinExpr::unknown(U_E3);

    SymPoly v2;  // s^2 coefficient of V
    v2.m[M_K1SQ] = LinExpr::unknown(U_GAMMA, Rational(-1));
    v2.m[M_K2SQ] = LinExpr::unknown(U_DELTA, Rational(-1));
    v2.m[M_K1SQK2SQ] = LinExpr::unknown(U_LAMBDA, Rational(-1));
    SymPoly v4;  // s^4 coefficient of V
    v4.m[M_K1SQK2SQ] = LinExpr::unknown(U_ALPHA);
    v4.m[M_K2SQ] = LinExpr::unknown(U_BETA);

    SymBandRow row;
    row.D = energy + Rational(-j * j) * kp(1, 1, 1, 0) + w.s0 + Rational(j) * g.s0;
    row.f = kp(Rational((j + 1) * (j + 2)), 0, 0, 0);
    row.M1 = Rational((j - 2) * (j - 1)) * kp(0, 1, 1, 1) + v2 + w.s1 + Rational(j - 2) * g.s1;
    row.M2 = Rational(-(j - 4) * (j - 2)) * kp(0, 0, 0, 1) + v4 + w.s2 + Rational(j - 4) * g.s2;
    return row;
}

namespace {

LinExpr num(std::int64_t v) { return LinExpr(Rational(v)); }
LinExpr minus(Unknown u, std::int64_t v) {
    return LinExpr(Rational(v)) - LinExpr::unknown(u);
}

// assembles c1*k1^2 + c2*k2^2 + c12*k1^2 k2^2
SymPoly k_combo(LinExpr c1, LinExpr c2, LinExpr c12) {
    SymPoly p;
    p.m[M_K1SQ] = std::move(c1);
    p.m[M_K2SQ] = std::move(c2);
    p.m[M_K1SQK2SQ] = std::move(c12);
    return p;
}

SymPoly e_minus(SymPoly rest) {
    SymPoly energy;
    energy.m[M_ONE] = LinExpr::unknown(U_E0);
    energy.m[M_K1SQ] = LinExpr::unknown(U_E1);
    energy.m[M_K2SQ] = LinExpr::unknown(U_E2);
    energy.m[M_K1SQK2SQ] = LinExpr::unknown(U_E3);
    return energy - rest;
}

SymPoly m2_combo(LinExpr c12, KMono mono = M_K1SQK2SQ) {
    SymPoly p;
    p.m[mono] = std::move(c12);
    p.m[M_K2SQ] = LinExpr::unknown(U_BETA);
    return p;
}

}  // namespace

// Verbatim transcription of the tabulated band entries for the twelve kinds
// that appear in the source tabulation, including its misprints (a k1^4
// where k1^2 k2^2 is meant, a dropped -gamma, a flipped sign and two wrong
// quadratic shifts).  band_discrepancies() holds these against the
// generator; the resolved forms used everywhere else are the derived ones.
std::optional<SymBandRow> printed_band(const AnsatzKind& kind, int n) {
    if (!has_printed_band(kind)) return std::nullopt;
    const std::int64_t nn = n;
    const bool odd = kind.parity == SeriesParity::odd;
    SymBandRow r;
    r.f = kp(Rational(odd ? 2 * (nn + 1) * (2 * nn + 3) : 2 * (nn + 1) * (2 * nn + 1)), 0, 0, 0);

    switch (kind.prefactor) {
        case 0:
            if (odd) {
                r.D = e_minus(Rational((2 * nn + 1) * (2 * nn + 1)) * kp(1, 1, 1, 0));
                r.M1 = k_combo(minus(U_GAMMA, 2 * nn * (2 * nn - 1)),
                               minus(U_DELTA, 2 * nn * (2 * nn - 1)),
                               minus(U_LAMBDA, 2 * nn * (2 * nn - 1)));
                r.M2 = m2_combo(LinExpr::unknown(U_ALPHA) - num((2 * nn - 3) * (2 * nn - 1)));
            } else {
                r.D = e_minus(Rational(4 * nn * nn) * kp(1, 1, 1, 0));
                r.M1 = k_combo(minus(U_GAMMA, 2 * (nn - 1) * (2 * nn - 1)),
                               minus(U_DELTA, 2 * (nn - 1) * (2 * nn - 1)),
                               minus(U_LAMBDA, 2 * (nn - 1) * (2 * nn - 1)));
                r.M2 = m2_combo(LinExpr::unknown(U_ALPHA) - num(4 * (nn - 1) * (nn - 2)));
            }
            return r;
        case F_C:
            if (odd) {
                r.D = e_minus(Rational(4 * (nn + 1) * (nn + 1)) * kp(1, 0, 0, 0) +
                              Rational((2 * nn + 1) * (2 * nn + 1)) * kp(0, 1, 1, 0));
                r.M1 = k_combo(minus(U_GAMMA, 2 + 2 * (2 * nn - 1) * (nn + 1)),
                               minus(U_DELTA, 2 + 2 * (2 * nn - 1) * (nn + 1)),
                               minus(U_LAMBDA, 2 * nn * (2 * nn - 1)));
                r.M2 = m2_combo(LinExpr::unknown(U_ALPHA) -
                                num(3 + (2 * nn - 3) * (2 * nn + 1)));
            } else {
                r.D = e_minus(Rational((2 * nn + 1) * (2 * nn + 1)) * kp(1, 0, 0, 0) +
                              Rational(4 * nn * nn) * kp(0, 1, 1, 0));
                r.M1 = k_combo(minus(U_GAMMA, 2 + 2 * (nn - 1) * (2 * nn + 1)),
                               minus(U_DELTA, 2 + 2 * (nn - 1) * (2 * nn + 1)),
                               minus(U_LAMBDA, 2 * (2 * nn - 1) * (nn - 1)));
                r.M2 = m2_combo(LinExpr::unknown(U_ALPHA) - num(3 + 4 * nn * (nn - 2)));
            }
            return r;
        case F_D1:
            if (odd) {
                r.D = e_minus(Rational(4 * (nn + 1) * (nn + 1)) * kp(0, 1, 0, 0) +
                              Rational((2 * nn + 1) * (2 * nn + 1)) * kp(1, 0, 1, 0));
                // as printed: no -gamma in the k1^2 coefficient
                r.M1 = k_combo(num(2 + 2 * (2 * nn - 1) * (nn + 1)),
                               minus(U_DELTA, 2 * nn * (2 * nn - 1)),
                               minus(U_LAMBDA, 2 + 2 * (2 * nn - 1) * (nn + 1)));
                r.M2 = m2_combo(LinExpr::unknown(U_ALPHA) -
                                num(3 + (2 * nn - 3) * (2 * nn + 1)));
            } else {
                r.D = e_minus(Rational((2 * nn + 1) * (2 * nn + 1)) * kp(0, 1, 0, 0) +
                              Rational(4 * nn * nn) * kp(1, 0, 1, 0));
                r.M1 = k_combo(minus(U_GAMMA, 2 + 2 * (nn - 1) * (2 * nn + 1)),
                               minus(U_DELTA, 2 * (nn - 1) * (2 * nn - 1)),
                               minus(U_LAMBDA, 2 + 2 * (nn - 1) * (2 * nn + 1)));
                // as printed: k1^2 * k1^2 rather than k1^2 * k2^2
                r.M2 = m2_combo(LinExpr::unknown(U_ALPHA) - num(3 + 4 * nn * (nn - 2)), M_K1_4);
            }
            return r;
        case F_C | F_D1:
            if (odd) {
                r.D = e_minus(Rational(4 * (nn + 1) * (nn + 1)) * kp(1, 1, 0, 0) +
                              Rational((2 * nn + 1) * (2 * nn + 1)) * kp(0, 0, 1, 0));
                r.M1 = k_combo(minus(U_GAMMA, 6 + 2 * (2 * nn - 1) * (nn + 2)),
                               minus(U_DELTA, 2 + 2 * (2 * nn - 1) * (nn + 1)),
                               minus(U_LAMBDA, 2 + 2 * (2 * nn - 1) * (nn + 1)));
                r.M2 = m2_combo(LinExpr::unknown(U_ALPHA) -
                                num(8 + (2 * nn - 3) * (2 * nn + 3)));
            } else {
                r.D = e_minus(Rational((2 * nn + 1) * (2 * nn + 1)) * kp(1, 1, 0, 0) +
                              Rational(4 * nn * nn) * kp(0, 0, 1, 0));
                r.M1 = k_combo(minus(U_GAMMA, 6 + 2 * (nn - 1) * (2 * nn + 3)),
                               minus(U_DELTA, 2 + 2 * (nn - 1) * (2 * nn + 1)),
                               minus(U_LAMBDA, 2 + 2 * (nn - 1) * (2 * nn + 1)));
                // as printed: 4(n-2)(n+2)
                r.M2 = m2_combo(LinExpr::unknown(U_ALPHA) -
                                num(8 + 4 * (nn - 2) * (nn + 2)));
            }
            return r;
        case F_D1 | F_D2:
            if (odd) {
                r.D = e_minus(Rational(4 * (nn + 1) * (nn + 1)) * kp(0, 1, 1, 0) +
                              Rational((2 * nn + 1) * (2 * nn + 1)) * kp(1, 0, 0, 0));
                r.M1 = k_combo(minus(U_GAMMA, 2 + 2 * (nn + 1) * (2 * nn - 1)),
                               minus(U_DELTA, 2 + 2 * (nn + 1) * (2 * nn - 1)),
                               minus(U_LAMBDA, 6 + 2 * (nn + 2) * (2 * nn - 1)));
                // as printed: + (2n-3)(2n+3)
                r.M2 = m2_combo(LinExpr::unknown(U_ALPHA) +
                                num((2 * nn - 3) * (2 * nn + 3)) - num(8));
            } else {
                r.D = e_minus(Rational((2 * nn + 1) * (2 * nn + 1)) * kp(0, 1, 1, 0) +
                              Rational(4 * nn * nn) * kp(1, 0, 0, 0));
                // as printed: (2n-3) in the lambda coefficient
                r.M1 = k_combo(minus(U_GAMMA, 2 + 2 * (nn - 1) * (2 * nn + 1)),
                               minus(U_DELTA, 2 + 2 * (nn - 1) * (2 * nn + 1)),
                               minus(U_LAMBDA, 6 + 2 * (nn - 1) * (2 * nn - 3)));
                // as printed: 4n(n-2)
                r.M2 = m2_combo(LinExpr::unknown(U_ALPHA) - num(8 + 4 * nn * (nn - 2)));
            }
            return r;
        case F_C | F_D1 | F_D2:
            if (odd) {
                r.D = e_minus(Rational(4 * (nn + 1) * (nn + 1)) * kp(1, 1, 1, 0));
                r.M1 = k_combo(minus(U_GAMMA, 6 + 2 * (2 * nn - 1) * (nn + 2)),
                               minus(U_DELTA, 6 + 2 * (2 * nn - 1) * (nn + 2)),
                               minus(U_LAMBDA, 6 + 2 * (2 * nn - 1) * (nn + 2)));
                r.M2 = m2_combo(LinExpr::unknown(U_ALPHA) -
                                num(15 + (2 * nn - 3) * (2 * nn + 5)));
            } else {
                r.D = e_minus(Rational((2 * nn + 1) * (2 * nn + 1)) * kp(1, 1, 1, 0));
                r.M1 = k_combo(minus(U_GAMMA, 6 + 2 * (nn - 1) * (2 * nn + 3)),
                               minus(U_DELTA, 6 + 2 * (nn - 1) * (2 * nn + 3)),
                               minus(U_LAMBDA, 6 + 2 * (nn - 1) * (2 * nn + 3)));
                r.M2 = m2_combo(LinExpr::unknown(U_ALPHA) -
                                num(15 + 4 * (nn - 2) * (nn + 2)));
            }
            return r;
    }
    return std::nullopt;
}

}  // namespace detail

BandRow band_row(const AnsatzKind& kind, int n, const ParamVector& p, double E,
                 const ModulusPair& m) {
    if (n < 0) throw std::invalid_argument("band_row: n must be non-negative");
    const detail::SymBandRow sym = detail::derived_band(kind, n);
    const std::array<double, N_UNKNOWNS> v = {p.alpha, p.beta, p.gamma, p.delta,
                                              p.lambda, E,     0,       0,
                                              0};
    const double k1sq = m.k1sq(), k2sq = m.k2sq();
    return {sym.D.eval(v, k1sq, k2sq), sym.f.eval(v, k1sq, k2sq), sym.M1.eval(v, k1sq, k2sq),
            sym.M2.eval(v, k1sq, k2sq)};
}

std::vector<BandDiscrepancy> band_discrepancies(int n_max) {
    std::vector<BandDiscrepancy> out;
    for (const AnsatzKind& kind : all_ansatz_kinds()) {
        if (!has_printed_band(kind)) continue;
        const char* names[4] = {"D", "f", "M1", "M2"};
        for (int e = 0; e < 4; ++e) {
            for (int n = 0; n <= n_max; ++n) {
                const detail::SymBandRow der = detail::derived_band(kind, n);
                const detail::SymBandRow pri = *detail::printed_band(kind, n);
                const SymPoly* dp[4] = {&der.D, &der.f, &der.M1, &der.M2};
                const SymPoly* pp[4] = {&pri.D, &pri.f, &pri.M1, &pri.M2};
                if (!(*dp[e] == *pp[e])) {
                    out.push_back({kind, names[e], n, pp[e]->str(), dp[e]->str(),
                                   dp[e]->str()});
                    break;
                }
            }
        }
    }
    return out;
}

std::vector<TerminationSolution> termination_search(const AnsatzKind& kind,
                                                    const SearchBox& box) {
    std::vector<SymPoly> conds = {detail::derived_band(kind, 0).D,
                                  detail::derived_band(kind, 1).M1,
                                  detail::derived_band(kind, 2).M2};
    std::vector<LinExpr> eqs;
    for (const auto& p : conds)
        for (const auto& le : p.m)
            if (!le.is_zero()) eqs.push_back(le);
    const LinearSolveResult res = solve_linear_system(std::move(eqs));
    std::vector<TerminationSolution> out;
    if (!res.consistent) return out;
    if (!res.unique) throw std::logic_error("termination_search: system underdetermined");
    std::array<int, 5> params;
    for (int i = 0; i < 5; ++i) {
        if (!res.value[i].is_integer())
            throw std::logic_error("termination_search: non-integral solution");
        params[i] = static_cast<int>(res.value[i].num());
    }
    if (!res.value[U_E3].is_zero())
        throw std::logic_error("termination_search: eigenvalue has a k1^2 k2^2 term");
    bool trivial = true, in_box = true;
    for (int i = 0; i < 5; ++i) {
        if (params[i] != 0) trivial = false;
        if (i != 1 && (params[i] < box.lo || params[i] > box.hi)) in_box = false;
    }
    if (trivial || !in_box) return out;
    for (int i = U_E0; i <= U_E2; ++i)
        if (!res.value[i].is_integer())
            throw std::logic_error("termination_search: non-integral eigenvalue");
    out.push_back({params,
                   {static_cast<int>(res.value[U_E0].num()),
                    static_cast<int>(res.value[U_E1].num()),
                    static_cast<int>(res.value[U_E2].num())},
                   kind,
                   ansatz_factor_mask(kind)});
    return out;
}

std::vector<TerminationSolution> termination_search_all(const SearchBox& box) {
    std::vector<TerminationSolution> out;
    for (const AnsatzKind& kind : all_ansatz_kinds()) {
        for (const auto& sol : termination_search(kind, box)) {
            bool dup = false;
            for (const auto& have : out)
                if (have.params == sol.params && have.energy == sol.energy) dup = true;
            if (!dup) out.push_back(sol);
        }
    }
    return out;
}

std::vector<std::string> chain_termination_solutions(const AnsatzKind& kind, int mu_max) {
    std::vector<std::string> findings;
    for (int mu = 1; mu <= mu_max; ++mu) {
        std::vector<LinExpr> eqs;
        for (const SymPoly& p : {detail::derived_band(kind, mu).M1, detail::derived_band(kind, mu).M2,
                                 detail::derived_band(kind, mu + 1).M2}) {
            for (const auto& le : p.m)
                if (!le.is_zero()) eqs.push_back(le);
        }
        // E never enters these conditions, so solve over the parameters only.
        const LinearSolveResult res = solve_linear_system(std::move(eqs), kParamUnknowns);
        if (!res.consistent) continue;
        if (res.unique) {
            bool trivial = true;
            for (int i = U_ALPHA; i <= U_LAMBDA; ++i)
                if (!res.value[i].is_zero()) trivial = false;
            if (trivial) continue;  // zero potential only
        }
        findings.push_back(ansatz_name(kind) + ": chain terminates at mu=" + std::to_string(mu));
    }
    return findings;
}

std::vector<double> series_coefficients(const AnsatzKind& kind, const ParamVector& p, double E,
                                        const ModulusPair& m, int count) {
    if (count <= 0) return {};
    std::vector<double> a(count, 0.0);
    a[0] = 1.0;
    for (int i = 0; i + 1 < count; ++i) {
        const BandRow row = band_row(kind, i, p, E, m);
        double acc = row.D * a[i];
        if (i >= 1) acc += row.M1 * a[i - 1];
        if (i >= 2) acc += row.M2 * a[i - 2];
        a[i + 1] = -acc / row.f;
    }
    return a;
}

double series_eval(const AnsatzKind& kind, std::span<const double> coeffs, double z,
                   const ModulusPair& m) {
    const GenJacobiPoint pt = eval_all(z, m);
    double w = 1.0;
    if (kind.prefactor & F_C) w *= pt.c;
    if (kind.prefactor & F_D1) w *= pt.d1;
    if (kind.prefactor & F_D2) w *= pt.d2;
    const double s2 = pt.s * pt.s;
    double powers = kind.parity == SeriesParity::odd ? pt.s : 1.0;
    double acc = 0;
    for (double a : coeffs) {
        acc += a * powers;
        powers *= s2;
    }
    return w * acc;
}

}  // namespace glame
