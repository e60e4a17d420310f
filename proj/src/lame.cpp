// SPDX-License-Identifier: Apache-2.0
#include "lame.hpp"

#include <cmath>
#include <stdexcept>

namespace glame {

std::string factors_to_string(unsigned mask) {
    if (mask == 0) return "1";
    std::string out;
    const std::pair<unsigned, const char*> parts[] = {
        {F_S, "s"}, {F_C, "c"}, {F_D1, "d1"}, {F_D2, "d2"}};
    for (const auto& [bit, name] : parts) {
        if (mask & bit) {
            if (!out.empty()) out += "*";
            out += name;
        }
    }
    return out;
}

const std::array<CatalogEntry, 15>& catalog() {
    // E written as (e0, e1, e2) with E = e0 + e1 k1^2 + e2 k2^2.
    static const std::array<CatalogEntry, 15> table = {{
        {{3, 0, 2, 2, 2}, {1, 1, 1}, F_S},
        {{3, 0, 2, 2, 0}, {1, 0, 0}, F_C},
        {{3, 0, 2, 0, 2}, {0, 1, 0}, F_D1},
        {{3, 0, 0, 2, 2}, {0, 0, 1}, F_D2},
        {{8, 0, 6, 6, 2}, {4, 1, 1}, F_S | F_C},
        {{8, 0, 2, 2, 6}, {0, 1, 1}, F_D1 | F_D2},
        {{8, 0, 6, 2, 6}, {1, 4, 1}, F_S | F_D1},
        {{8, 0, 2, 6, 6}, {1, 1, 4}, F_S | F_D2},
        {{8, 0, 6, 2, 2}, {1, 1, 0}, F_C | F_D1},
        {{8, 0, 2, 6, 2}, {1, 0, 1}, F_C | F_D2},
        {{15, 0, 6, 6, 6}, {1, 1, 1}, F_C | F_D1 | F_D2},
        {{15, 0, 12, 6, 6}, {4, 4, 1}, F_S | F_C | F_D1},
        {{15, 0, 6, 12, 6}, {4, 1, 4}, F_S | F_C | F_D2},
        {{15, 0, 6, 6, 12}, {1, 4, 4}, F_S | F_D1 | F_D2},
        {{24, 0, 12, 12, 12}, {4, 4, 4}, F_S | F_C | F_D1 | F_D2},
    }};
    return table;
}

std::string catalog_csv() {
    std::string out = "alpha,beta,gamma,delta,lambda,e0,e1,e2,factors\n";
    for (const auto& e : catalog()) {
        for (int v : e.params) out += std::to_string(v) + ",";
        for (int v : e.energy) out += std::to_string(v) + ",";
        out += factors_to_string(e.factors) + "\n";
    }
    return out;
}

double potential(double z, const ParamVector& p, const ModulusPair& m) {
    const double k1sq = m.k1sq(), k2sq = m.k2sq();
    const double s = eval_all(z, m).s;
    const double s2 = s * s;
    return (p.alpha * k1sq * k2sq + p.beta * k2sq) * s2 * s2 -
           (p.gamma * k1sq + p.delta * k2sq + p.lambda * k1sq * k2sq) * s2;
}

JacobiPoly JacobiPoly::monomial(unsigned mask) {
    JacobiPoly f;
    std::array<int, 4> e = {(mask & F_S) ? 1 : 0, (mask & F_C) ? 1 : 0, (mask & F_D1) ? 1 : 0,
                            (mask & F_D2) ? 1 : 0};
    f.terms[e] = 1.0;
    return f;
}

JacobiPoly JacobiPoly::derivative(double k1sq, double k2sq) const {
    JacobiPoly out;
    auto add = [&out](std::array<int, 4> e, double coef) {
        if (coef == 0) return;
        out.terms[e] += coef;
    };
    for (const auto& [e, coef] : terms) {
        const auto [a, b, p, q] = e;
        // (s^a)' = a s^(a-1) c d1 d2, etc.
        if (a > 0) add({a - 1, b + 1, p + 1, q + 1}, coef * a);
        if (b > 0) add({a + 1, b - 1, p + 1, q + 1}, -coef * b);
        if (p > 0) add({a + 1, b + 1, p - 1, q + 1}, -coef * p * k1sq);
        if (q > 0) add({a + 1, b + 1, p + 1, q - 1}, -coef * q * k2sq);
    }
    return out;
}

double JacobiPoly::eval(const GenJacobiPoint& pt) const {
    double acc = 0;
    for (const auto& [e, coef] : terms) {
        double t = coef;
        for (int i = 0; i < e[0]; ++i) t *= pt.s;
        for (int i = 0; i < e[1]; ++i) t *= pt.c;
        for (int i = 0; i < e[2]; ++i) t *= pt.d1;
        for (int i = 0; i < e[3]; ++i) t *= pt.d2;
        acc += t;
    }
    return acc;
}

double schrodinger_residual(const CatalogEntry& entry, const ModulusPair& m,
                            std::span<const double> grid, double e_offset) {
    if (grid.empty()) throw std::invalid_argument("schrodinger_residual: empty grid");
    const double k1sq = m.k1sq(), k2sq = m.k2sq();
    const ParamVector p = entry.param_vector();
    const double E = entry.energy_at(m) + e_offset;
    const JacobiPoly f = JacobiPoly::monomial(entry.factors);
    const JacobiPoly fpp = f.derivative(k1sq, k2sq).derivative(k1sq, k2sq);

    double worst = 0, fmax = 0;
    for (double z : grid) {
        const GenJacobiPoint pt = eval_all(z, m);
        const double fv = f.eval(pt);
        const double s2 = pt.s * pt.s;
        const double v = (p.alpha * k1sq * k2sq + p.beta * k2sq) * s2 * s2 -
                         (p.gamma * k1sq + p.delta * k2sq + p.lambda * k1sq * k2sq) * s2;
        const double r = std::abs(fpp.eval(pt) + (v + E) * fv);
        worst = std::max(worst, r);
        fmax = std::max(fmax, std::abs(fv));
    }
    if (fmax == 0) throw std::invalid_argument("schrodinger_residual: degenerate grid");
    return worst / fmax;
}

double schrodinger_residual(const std::function<double(double)>& f, const ParamVector& p, double E,
                            const ModulusPair& m, std::span<const double> grid) {
    if (grid.empty()) throw std::invalid_argument("schrodinger_residual: empty grid");
    const double h = 2e-3;  // balances h^4 truncation against eps/h^2 rounding
    double worst = 0, fmax = 0;
    for (double z : grid) {
        // 5-point second derivative
        const double fpp = (-f(z - 2 * h) + 16 * f(z - h) - 30 * f(z) + 16 * f(z + h) -
                            f(z + 2 * h)) /
                           (12 * h * h);
        const double fv = f(z);
        const double r = std::abs(fpp + (potential(z, p, m) + E) * fv);
        worst = std::max(worst, r);
        fmax = std::max(fmax, std::abs(fv));
    }
    if (fmax == 0) throw std::invalid_argument("schrodinger_residual: degenerate grid");
    return worst / fmax;
}

double algebraic_residual(double x, const ParamVector& p, double E, const ModulusPair& m, double f,
                          double fp, double fpp) {
    const double k1sq = m.k1sq(), k2sq = m.k2sq();
    if (k1sq == 0 || k2sq == 0)
        throw std::domain_error("algebraic_residual: needs k1, k2 > 0");
    const double k1m2 = 1 / k1sq, k2m2 = 1 / k2sq;
    if (x == 0 || x == 1 || x == k1m2 || x == k2m2)
        throw std::domain_error("algebraic_residual: x is a singular point");
    const double a_coef = p.alpha + p.beta * k1m2;
    const double b_coef = p.gamma * k2m2 + p.delta * k1m2 + p.lambda;
    const double half_sum =
        0.5 * (1 / x + 1 / (x - 1) + 1 / (x - k1m2) + 1 / (x - k2m2));
    const double denom = 4 * x * (x - 1) * (x - k1m2) * (x - k2m2);
    return fpp + half_sum * fp - (E * k1m2 * k2m2 + a_coef * x * x - b_coef * x) / denom * f;
}

std::vector<double> uniform_grid(double start, double stop, int count) {
    if (count <= 0) throw std::invalid_argument("uniform_grid: count must be positive");
    std::vector<double> g(count);
    if (count == 1) {
        g[0] = start;
        return g;
    }
    for (int i = 0; i < count; ++i) g[i] = start + (stop - start) * i / (count - 1);
    return g;
}

}  // namespace glame
