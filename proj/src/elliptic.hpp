// Complete elliptic integrals and Jacobi elliptic functions for real
// argument, implemented from first principles (AGM iteration and the
// descending Landen transformation; see DLMF 19.8 and 22.20).
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace glame {

// Arithmetic-geometric mean of a, b >= 0.  Quadratic convergence; throws
// std::runtime_error if the fixed iteration cap is exhausted.
double agm(double a, double b);

// Complete elliptic integral of the first kind,
//   K(k) = int_0^1 dt / sqrt((1 - t^2)(1 - k^2 t^2)),
// computed as pi / (2 agm(1, k')).  Requires 0 <= k < 1 (K diverges
// logarithmically as k -> 1).
double complete_k(double k);

struct JacobiTriple {
    double sn, cn, dn;
};

// Jacobi elliptic functions sn, cn, dn for real u and modulus 0 <= k <= 1.
// Bulirsch's sncndn scheme: build the AGM ladder, evaluate the trigonometric
// base case at the top, and descend.  k = 1 is the hyperbolic limit
// sn = tanh u, cn = dn = sech u.
JacobiTriple jacobi_scd(double u, double k);

// Inverse of cn on [0, K(k)]: the unique u with cn(u, k) = x, for x in [0, 1]
// and 0 <= k < 1.
double inverse_cn(double x, double k);

}  // namespace glame
