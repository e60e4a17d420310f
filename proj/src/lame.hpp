// The two-modulus Schroedinger operator
//   f''(z) + V(z) f(z) = -E f(z),
//   V(z) = (alpha k1^2 k2^2 + beta k2^2) s^4 - (gamma k1^2 + delta k2^2 + lambda k1^2 k2^2) s^2,
// its algebraic (Fuchsian, five regular singular points) form under
// x = s^2(z), and the catalog of the fifteen parameter tuples for which the
// eigenfunction is a product of the functions s, c, d1, d2.
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "gen_jacobi.hpp"

namespace glame {

struct ParamVector {
    double alpha = 0, beta = 0, gamma = 0, delta = 0, lambda = 0;
};

// Factor bitmask for eigenfunctions that are products of s, c, d1, d2.
enum Factor : unsigned { F_S = 1u, F_C = 2u, F_D1 = 4u, F_D2 = 8u };

std::string factors_to_string(unsigned mask);

struct CatalogEntry {
    std::array<int, 5> params;  // alpha, beta, gamma, delta, lambda
    std::array<int, 3> energy;  // E = e0 + e1 k1^2 + e2 k2^2
    unsigned factors;           // product eigenfunction

    ParamVector param_vector() const {
        return {double(params[0]), double(params[1]), double(params[2]), double(params[3]),
                double(params[4])};
    }
    double energy_at(const ModulusPair& m) const {
        return energy[0] + energy[1] * m.k1sq() + energy[2] * m.k2sq();
    }
};

// The fifteen product eigenpairs, in canonical order.
const std::array<CatalogEntry, 15>& catalog();

// CSV export, header alpha,beta,gamma,delta,lambda,e0,e1,e2,factors.
std::string catalog_csv();

double potential(double z, const ParamVector& p, const ModulusPair& m);

// --- products of s, c, d1, d2 as an exact differential algebra ---
//
// Monomials s^a c^b d1^e d2^g are closed under differentiation via the
// first-derivative products, which makes the second derivative of any
// catalog eigenfunction available in closed form (no finite differences).
struct JacobiPoly {
    // exponents (s, c, d1, d2) -> coefficient
    std::map<std::array<int, 4>, double> terms;

    static JacobiPoly monomial(unsigned factor_mask);
    JacobiPoly derivative(double k1sq, double k2sq) const;
    double eval(const GenJacobiPoint& p) const;
};

// Max over the grid of |f'' + (V + E) f| / max|f| for a catalog entry, with
// f'' evaluated through the differential algebra.  e_offset shifts the
// catalog eigenvalue (used to demonstrate detection of wrong energies).
double schrodinger_residual(const CatalogEntry& entry, const ModulusPair& m,
                            std::span<const double> grid, double e_offset = 0.0);

// Same residual for an arbitrary function, with f'' from central finite
// differences (5-point stencil); accuracy is limited to ~1e-8 of max|f|.
double schrodinger_residual(const std::function<double(double)>& f, const ParamVector& p, double E,
                            const ModulusPair& m, std::span<const double> grid);

// Left-hand side of the algebraic form at x (not a singular point):
//   f'' + 1/2 (1/x + 1/(x-1) + 1/(x-k1^-2) + 1/(x-k2^-2)) f'
//       - (E k1^-2 k2^-2 + A x^2 - B x) / (4 x (x-1)(x-k1^-2)(x-k2^-2)) f,
// with A = alpha + beta k1^-2 and B = gamma k2^-2 + delta k1^-2 + lambda.
double algebraic_residual(double x, const ParamVector& p, double E, const ModulusPair& m, double f,
                          double fp, double fpp);

// Uniform grid helper: count points from start to stop inclusive.
std::vector<double> uniform_grid(double start, double stop, int count);

}  // namespace glame
