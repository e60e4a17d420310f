// Exact rational arithmetic and small symbolic helpers used to solve
// vanishing conditions as identities in the moduli (coefficient matching
// over the monomials 1, k1^2, k2^2, k1^2*k2^2) instead of numerically at
// fixed modulus values.
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace glame {

class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }
    friend Rational operator+(const Rational& a, const Rational& b) {
        return from128(w(a.num_) * b.den_ + w(b.num_) * a.den_, w(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from128(w(a.num_) * b.num_, w(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return from128(w(a.num_) * b.den_, w(a.den_) * b.num_);
    }
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    using i128 = __int128;
    static i128 w(std::int64_t v) { return static_cast<i128>(v); }

    static Rational from128(i128 n, i128 d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        i128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        constexpr i128 lim = INT64_MAX;
        if (n > lim || n < -lim || d > lim)
            throw std::overflow_error("Rational: overflow");
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }
    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) { i128 t = a % b; a = b; b = t; }
        return a < 0 ? -a : a;
    }
    void normalize() { *this = from128(num_, den_); }

    std::int64_t num_, den_;
};

// Unknowns of the vanishing-condition linear systems: the five potential
// parameters and the coefficients of E = e0 + e1 k1^2 + e2 k2^2 + e3 k1^2 k2^2.
enum Unknown : int { U_ALPHA = 0, U_BETA, U_GAMMA, U_DELTA, U_LAMBDA, U_E0, U_E1, U_E2, U_E3, N_UNKNOWNS };

// Affine expression c0 + sum_i c[i] * unknown_i with exact coefficients.
struct LinExpr {
    Rational constant;
    std::array<Rational, N_UNKNOWNS> coeff{};

    LinExpr() = default;
    explicit LinExpr(Rational c) : constant(c) {}
    static LinExpr unknown(Unknown u, Rational scale = Rational(1)) {
        LinExpr e;
        e.coeff[u] = scale;
        return e;
    }
    bool is_zero() const {
        if (!constant.is_zero()) return false;
        for (const auto& c : coeff)
            if (!c.is_zero()) return false;
        return true;
    }
    friend LinExpr operator+(const LinExpr& a, const LinExpr& b) {
        LinExpr r = a;
        r.constant += b.constant;
        for (int i = 0; i < N_UNKNOWNS; ++i) r.coeff[i] += b.coeff[i];
        return r;
    }
    friend LinExpr operator-(const LinExpr& a, const LinExpr& b) {
        LinExpr r = a;
        r.constant -= b.constant;
        for (int i = 0; i < N_UNKNOWNS; ++i) r.coeff[i] -= b.coeff[i];
        return r;
    }
    friend LinExpr operator*(const Rational& s, const LinExpr& a) {
        LinExpr r = a;
        r.constant *= s;
        for (auto& c : r.coeff) c *= s;
        return r;
    }
    double eval(const std::array<double, N_UNKNOWNS>& v) const {
        double acc = constant.to_double();
        for (int i = 0; i < N_UNKNOWNS; ++i)
            if (!coeff[i].is_zero()) acc += coeff[i].to_double() * v[i];
        return acc;
    }
    std::string str(const std::array<const char*, N_UNKNOWNS>& names) const;
};

// Monomial basis for identities in the two squared moduli.  K1_4 appears only
// in transcriptions of misprinted source formulas, never in derived ones.
enum KMono : int { M_ONE = 0, M_K1SQ, M_K2SQ, M_K1SQK2SQ, M_K1_4, N_MONOS };

// Polynomial in the moduli monomials whose coefficients are affine in the
// unknown parameters.  This is the representation in which "entry vanishes
// identically in k1, k2" becomes a small exact linear system.
struct SymPoly {
    std::array<LinExpr, N_MONOS> m{};

    static SymPoly constant(Rational c) {
        SymPoly p;
        p.m[M_ONE] = LinExpr(c);
        return p;
    }
    static SymPoly mono(KMono k, LinExpr e) {
        SymPoly p;
        p.m[k] = std::move(e);
        return p;
    }
    friend SymPoly operator+(const SymPoly& a, const SymPoly& b) {
        SymPoly r;
        for (int i = 0; i < N_MONOS; ++i) r.m[i] = a.m[i] + b.m[i];
        return r;
    }
    friend SymPoly operator-(const SymPoly& a, const SymPoly& b) {
        SymPoly r;
        for (int i = 0; i < N_MONOS; ++i) r.m[i] = a.m[i] - b.m[i];
        return r;
    }
    friend SymPoly operator*(const Rational& s, const SymPoly& a) {
        SymPoly r;
        for (int i = 0; i < N_MONOS; ++i) r.m[i] = s * a.m[i];
        return r;
    }
    bool operator==(const SymPoly& b) const {
        for (int i = 0; i < N_MONOS; ++i)
            if (!(m[i] - b.m[i]).is_zero()) return false;
        return true;
    }
    // Numeric value for fixed unknowns and moduli.
    double eval(const std::array<double, N_UNKNOWNS>& v, double k1sq, double k2sq) const {
        const double w[N_MONOS] = {1.0, k1sq, k2sq, k1sq * k2sq, k1sq * k1sq};
        double acc = 0;
        for (int i = 0; i < N_MONOS; ++i)
            if (!(m[i].is_zero())) acc += m[i].eval(v) * w[i];
        return acc;
    }
    std::string str() const;
};

// Exact Gaussian elimination for the systems produced by coefficient
// matching.  unknown_mask selects the columns in play (bit i = unknown i);
// equations must not reference unselected unknowns.  `unique` means every
// selected unknown is pinned.
struct LinearSolveResult {
    bool consistent = false;
    bool unique = false;
    std::array<Rational, N_UNKNOWNS> value{};
};

constexpr unsigned kAllUnknowns = (1u << N_UNKNOWNS) - 1;
constexpr unsigned kParamUnknowns =
    (1u << U_ALPHA) | (1u << U_BETA) | (1u << U_GAMMA) | (1u << U_DELTA) | (1u << U_LAMBDA);

LinearSolveResult solve_linear_system(std::vector<LinExpr> equations,
                                      unsigned unknown_mask = kAllUnknowns);

}  // namespace glame
