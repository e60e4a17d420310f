// SPDX-License-Identifier: Apache-2.0
#include "rational.hpp"

namespace glame {

std::string LinExpr::str(const std::array<const char*, N_UNKNOWNS>& names) const {
    std::string out;
    auto push = [&out](const Rational& c, const std::string& sym) {
        if (c.is_zero()) return;
        std::string mag;
        Rational a = c.num() < 0 ? -c : c;
        if (sym.empty()) {
            mag = a.str();
        } else if (a == Rational(1)) {
            mag = sym;
        } else {
            mag = a.str() + "*" + sym;
        }
        if (out.empty()) {
            out = (c.num() < 0 ? "-" : "") + mag;
        } else {
            out += (c.num() < 0 ? " - " : " + ") + mag;
        }
    };
    for (int i = 0; i < N_UNKNOWNS; ++i) push(coeff[i], names[i]);
    push(constant, "");
    return out.empty() ? "0" : out;
}

std::string SymPoly::str() const {
    static const std::array<const char*, N_UNKNOWNS> names = {
        "alpha", "beta", "gamma", "delta", "lambda", "e0", "e1", "e2", "e3"};
    static const char* monos[N_MONOS] = {"1", "k1^2", "k2^2", "k1^2*k2^2", "k1^4"};
    std::string out;
    for (int i = 0; i < N_MONOS; ++i) {
        if (m[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + m[i].str(names) + ")*" + monos[i];
    }
    return out.empty() ? "0" : out;
}

LinearSolveResult solve_linear_system(std::vector<LinExpr> eqs, unsigned unknown_mask) {
    LinearSolveResult res;
    const int n = N_UNKNOWNS;
    int selected = 0;
    for (int col = 0; col < n; ++col) {
        if (unknown_mask & (1u << col)) {
            ++selected;
            continue;
        }
        for (const auto& e : eqs)
            if (!e.coeff[col].is_zero())
                throw std::logic_error("solve_linear_system: equation touches a masked unknown");
    }
    std::vector<int> pivot_col;
    std::size_t row = 0;
    for (int col = 0; col < n && row < eqs.size(); ++col) {
        if (!(unknown_mask & (1u << col))) continue;
        std::size_t piv = row;
        while (piv < eqs.size() && eqs[piv].coeff[col].is_zero()) ++piv;
        if (piv == eqs.size()) continue;
        std::swap(eqs[row], eqs[piv]);
        Rational inv = Rational(1) / eqs[row].coeff[col];
        eqs[row] = inv * eqs[row];
        for (std::size_t r = 0; r < eqs.size(); ++r) {
            if (r == row || eqs[r].coeff[col].is_zero()) continue;
            eqs[r] = eqs[r] - (eqs[r].coeff[col] * eqs[row]);
        }
        pivot_col.push_back(col);
        ++row;
    }
    // Rows below the pivot block must reduce to 0 = 0; a leftover constant
    // means the conditions contradict each other.
    for (std::size_t r = row; r < eqs.size(); ++r) {
        if (!eqs[r].constant.is_zero()) {
            res.consistent = false;
            return res;
        }
    }
    res.consistent = true;
    res.unique = (static_cast<int>(pivot_col.size()) == selected);
    if (res.unique) {
        for (std::size_t i = 0; i < pivot_col.size(); ++i) {
            // eq: x_col + constant = 0
            res.value[pivot_col[i]] = -eqs[i].constant;
        }
    }
    return res;
}

}  // namespace glame
