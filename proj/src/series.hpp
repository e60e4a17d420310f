// Power-series expansions of eigenfunctions in the generalized Jacobi
// functions: f(z) = w(z) * sum a_i s^{2i+rho}(z), where the prefactor w is a
// product over {c, d1, d2} and rho in {0, 1} fixes the parity.  Substituting
// into f'' + (V + E) f = 0 and eliminating derivatives through the
// first/second-derivative closure yields a four-term band recurrence
//
//   M2(n) a_{n-2} + M1(n) a_{n-1} + D(n) a_n + f(n) a_{n+1} = 0
//
// with f(n) > 0 for every kind, so a chain can only terminate when the
// leading column vanishes: D(0) = M1(1) = M2(2) = 0.  Solving those three
// conditions exactly per kind rediscovers every product eigenfunction.
//
// The band tables for twelve of the sixteen kinds are transcribed verbatim
// from the published tabulation (which contains several misprints); the
// runtime entries always come from the product-rule generator, and
// band_discrepancies() reports every place the two disagree.
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gen_jacobi.hpp"
#include "ince.hpp"
#include "lame.hpp"
#include "rational.hpp"

namespace glame {

enum class SeriesParity { even, odd };

struct AnsatzKind {
    unsigned prefactor = 0;  // mask over F_C | F_D1 | F_D2
    SeriesParity parity = SeriesParity::even;
    bool operator==(const AnsatzKind&) const = default;
};

// The sixteen admissible kinds (8 prefactors x 2 parities), canonical order.
const std::vector<AnsatzKind>& all_ansatz_kinds();

// True for the twelve kinds whose band table exists in the source
// tabulation (prefactors not containing d2 without d1).
bool has_printed_band(const AnsatzKind& kind);

std::string ansatz_name(const AnsatzKind& kind);  // e.g. "d1*d2,odd"

// Factor mask of the product solution a terminating chain produces.
unsigned ansatz_factor_mask(const AnsatzKind& kind);

struct BandRow {
    double D, f, M1, M2;
};

// Band entries at index n, from the derivation generator.
BandRow band_row(const AnsatzKind& kind, int n, const ParamVector& p, double E,
                 const ModulusPair& m);

struct BandDiscrepancy {
    AnsatzKind kind;
    std::string entry;    // "D", "f", "M1" or "M2"
    int first_n;          // smallest index at which the forms differ
    std::string printed;  // transcription, rendered at first_n
    std::string derived;  // generator output, rendered at first_n
    std::string resolved; // the form the implementation uses
};

// Compares the verbatim transcriptions against the generator for indices
// 0..n_max and reports every mismatch.
std::vector<BandDiscrepancy> band_discrepancies(int n_max = 8);

struct TerminationSolution {
    std::array<int, 5> params;
    std::array<int, 3> energy;
    AnsatzKind kind;
    unsigned factors;
};

// Leading-column termination conditions of one kind, solved exactly by
// monomial matching; the zero-potential tuple is excluded.
std::vector<TerminationSolution> termination_search(const AnsatzKind& kind,
                                                    const SearchBox& box = {});

// Union over all kinds, deduplicated on (params, energy).
std::vector<TerminationSolution> termination_search_all(const SearchBox& box = {});

// Re-derivation of "M2 cannot vanish at two consecutive indices": solves
// M1(mu) = M2(mu) = M2(mu+1) = 0 for mu = 1..mu_max and describes any
// consistent case (expected empty for every kind).
std::vector<std::string> chain_termination_solutions(const AnsatzKind& kind, int mu_max = 12);

// First `count` series coefficients with a_0 = 1, by forward recurrence
// (f(n) > 0 makes this well defined for every kind).
std::vector<double> series_coefficients(const AnsatzKind& kind, const ParamVector& p, double E,
                                        const ModulusPair& m, int count);

// Evaluates w(z) * sum a_i s^{2i+rho}(z).  Partial sums converge where
// |s(z)| < 1, i.e. away from the odd quarter-period points.
double series_eval(const AnsatzKind& kind, std::span<const double> coeffs, double z,
                   const ModulusPair& m);

namespace detail {
struct SymBandRow {
    SymPoly D, f, M1, M2;
};
SymBandRow derived_band(const AnsatzKind& kind, int n);
std::optional<SymBandRow> printed_band(const AnsatzKind& kind, int n);
}  // namespace detail

}  // namespace glame
