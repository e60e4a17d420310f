// Trigonometric form of the two-modulus operator.  The substitution
// t = a(z) (generalized amplitude) turns f'' + (V + E) f = 0 into
//
//   (1 + a1 cos 2t + a2 cos 4t) f'' + (b1 sin 2t + b2 sin 4t) f'
//     + (c + p1 cos 2t + p2 cos 4t) f = 0,
//
// a generalized Ince equation (coefficients named p1, p2 here to avoid a
// clash with the functions d1, d2).  Periodic solutions have period pi or
// 2 pi, giving four Fourier classes whose coefficient recurrences are
// pentadiagonal; leading row/column vanishing conditions, solved exactly as
// identities in the moduli, enumerate every product eigenfunction.
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gen_jacobi.hpp"
#include "lame.hpp"
#include "rational.hpp"

namespace glame {

enum class FourierClass { even_pi, odd_pi, odd_2pi, even_2pi };
constexpr std::array<FourierClass, 4> all_fourier_classes = {
    FourierClass::even_pi, FourierClass::odd_pi, FourierClass::odd_2pi, FourierClass::even_2pi};

const char* fourier_class_name(FourierClass f);
bool is_two_pi(FourierClass f);

// Which substitution produced the trigonometric form: f itself, f = d1 g,
// or f = d2 g.  The d2 variant only rediscovers solutions the first two
// already produce; it is kept for that equivalence check.
enum class InceTransform { standard, d1_shifted, d2_shifted };
const char* transform_name(InceTransform t);

struct InceCoefficients {
    double a1, a2, b1, b2, cc, p1, p2;
    double denom;  // 2 - k1^2 - k2^2 + 3/4 k1^2 k2^2
};

InceCoefficients ince_coefficients(const ParamVector& p, double E, const ModulusPair& m,
                                   InceTransform t);

// Exact affine inverse of the cc formula: recovers E from cc.
double c_to_energy(double cc, const ParamVector& p, const ModulusPair& m, InceTransform t);

// Q_i(mu) = 2 a_i mu^2 - b_i mu - p_i / 2 (pi classes).
double q_poly(int i, double mu, const InceCoefficients& co);
// Q*_i(mu) = a_i (2 mu - 1)^2 - b_i (2 mu - 1) - p_i (2 pi classes).
double qstar_poly(int i, double mu, const InceCoefficients& co);

// N x N truncation of the five-term recurrence for the given class,
// row-major.  Entries vanish for |row - col| > 2; the diagonal is affine in
// cc with slope -1 (pi classes) or -2 (2 pi classes).  Requires N >= 5.
std::vector<double> recurrence_matrix(FourierClass f, const InceCoefficients& co, int n);

// Lowest `count` characteristic energies of the truncated recurrence,
// with a truncation-doubling convergence check (each value stable to
// 1e-8, truncation capped at 512).
std::vector<double> hill_eigen_energies(FourierClass f, const ParamVector& p,
                                        const ModulusPair& m, InceTransform t, int n_trunc,
                                        int count);

struct CoexistenceReport {
    bool degenerate_lame = false;   // a2 = 0 (k1 k2 = 0): recurrence is three-term
    bool two_pi = false;
    double mu = 0;                  // root of the compatibility relation
    bool mu_integral = false;
    bool forces_zero_potential = false;  // integral mu admissible only with p1 = p2 = 0
    std::string note;
};

// Whether two independent periodic solutions of the same period can coexist:
// the pi-class relation is b2 = 2 a2 (2 mu - 1), the 2 pi-class relation is
// b2 = 4 a2 (mu - 1), and coexistence needs an integral root mu.
CoexistenceReport coexistence_conditions(FourierClass f, const InceCoefficients& co);

enum class VanishingWhich { first_row, first_column };

struct VanishingSolution {
    std::array<int, 5> params;   // alpha, beta, gamma, delta, lambda
    std::array<int, 3> energy;   // E = e0 + e1 k1^2 + e2 k2^2
    FourierClass fourier_class;
    VanishingWhich which;
    InceTransform transform;
    unsigned factors;            // product eigenfunction mask
};

struct SearchBox {
    int lo = 0;
    int hi = 30;
};

// All parameter tuples for which the leading row or column of some Fourier
// class vanishes identically in the moduli.  The vanishing conditions are
// solved exactly by matching coefficients of {1, k1^2, k2^2, k1^2 k2^2};
// results outside the box, non-integral tuples, and the zero-potential
// tuple (constant eigenfunction) are discarded.
std::vector<VanishingSolution> enumerate_vanishing_solutions(InceTransform t,
                                                             const SearchBox& box = {});

// Re-derivation of the "no other row or column can vanish" argument: solves
// the vanishing system for every interior row/column up to max_index and
// returns a description of any nontrivial solution found (expected empty).
std::vector<std::string> interior_vanishing_solutions(InceTransform t, int max_index);

// Eigenfunction factor mask implied by (class, which, transform).
unsigned vanishing_factor_mask(FourierClass f, VanishingWhich which, InceTransform t);

namespace detail {
// Numerators (multiplied by the common denominator) of the trigonometric
// coefficients, with the eigenvalue expanded as e0 + e1 k1^2 + e2 k2^2 +
// e3 k1^2 k2^2.  Shared by the numeric evaluator and the exact enumerator.
struct SymbolicInce {
    SymPoly a1, a2, b1, b2, cc, p1, p2, delta;
};
SymbolicInce symbolic_ince(InceTransform t);

// Entry (r, c) of the recurrence matrix over numerators (`one` = delta).
std::optional<SymPoly> symbolic_entry(FourierClass f, int r, int c, const SymbolicInce& si);
}  // namespace detail

}  // namespace glame
