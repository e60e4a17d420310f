// The two-modulus generalization of the Jacobi elliptic functions.
//
// s(u, k1, k2) inverts the pseudo-hyperelliptic integral
//   u(y) = int_0^y dt / sqrt((1 - t^2)(1 - k1^2 t^2)(1 - k2^2 t^2)),
// and the companions are defined by
//   c^2 = 1 - s^2,   d1^2 = 1 - k1^2 s^2,   d2^2 = 1 - k2^2 s^2,
// so that s' = c d1 d2, c' = -s d1 d2, d1' = -k1^2 s c d2, d2' = -k2^2 s c d1.
// For k2 = 0 they reduce to sn, cn, dn, 1.  On the real axis s, c have
// period 4 K(kappa)/k2' and d1, d2 have period 2 K(kappa)/k2', where
// kappa^2 = (k1^2 - k2^2)/(1 - k2^2) and k2' = sqrt(1 - k2^2).
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>

namespace glame {

struct ModulusPair {
    double k1 = 0, k2 = 0;  // moduli, 0 <= k2 <= k1 <= 1 (k2 < 1)
    double kappa = 0;       // reduced modulus
    double k2p = 1;         // complementary k2' = sqrt(1 - k2^2)

    ModulusPair() = default;
    ModulusPair(double k1_, double k2_);

    double k1sq() const { return k1 * k1; }
    double k2sq() const { return k2 * k2; }
};

struct GenJacobiPoint {
    double s, c, d1, d2;
};

struct GenJacobiDerivatives {
    double ds, dc, dd1, dd2;
};

struct GenJacobiSecondDerivatives {
    double dss, dcc, dd1d1;
};

struct BranchData {
    std::complex<double> u1, u2, u3, u4;  // endpoints of the two branch cuts
    double real_period_s;                 // 4 K(kappa)/k2'
    double real_period_c;                 // 4 K(kappa)/k2'
    double real_period_d;                 // 2 K(kappa)/k2'
};

// All four functions at real argument u, via the quotient representation in
// standard Jacobi functions.  c carries the sign of cn(k2' u, kappa); d1 and
// d2 are positive on the real axis.  Near k1 = k2 the quotients for d1, d2
// lose accuracy to cancellation and the equivalent forms sqrt(1 - ki^2 s^2)
// are used instead.
GenJacobiPoint eval_all(double u, const ModulusPair& m);

// First derivatives assembled from the product rules above.
GenJacobiDerivatives eval_derivatives(double u, const ModulusPair& m);

// Second derivatives of s, c, d1 as quintic polynomials in the respective
// function:
//   s''  = -3 k1^2 k2^2 s^5 + 2(k1^2 + k2^2 + k1^2 k2^2) s^3 - (1 + k1^2 + k2^2) s
//   c''  = -3 k1^2 k2^2 c^5 - 2(k1^2 + k2^2 - 3 k1^2 k2^2) c^3
//          + (-1 + 2 k1^2 + 2 k2^2 - 3 k1^2 k2^2) c
//   d1'' = -3 k2^2 k1^-2 d1^5 - 2(1 + k2^2 - 3 k2^2 k1^-2) d1^3
//          + (2 - k1^2 + 2 k2^2 - 3 k2^2 k1^-2) d1
GenJacobiSecondDerivatives eval_second_derivatives(double u, const ModulusPair& m);

// Branch points and real quasi-period lengths; requires 0 < k2 < k1 < 1
// (otherwise the cut lattice degenerates).  With kappa' = sqrt(1 - kappa^2):
//   u1 = i cn^-1(k2, kappa')/k2',  u2 = -u1 + 2i K(kappa')/k2',
//   u3 = u1 + 2 K(kappa)/k2',      u4 = u2 + 2 K(kappa)/k2'.
BranchData branch_data(const ModulusPair& m);

// Generalized amplitude t = a(z): solution of
//   dt/dz = sqrt((1 - k1^2 sin^2 t)(1 - k2^2 sin^2 t)),  t(0) = 0,
// so that sin(a(z)) = s(z).  Computed by adaptive embedded Runge-Kutta.
double amplitude(double z, const ModulusPair& m);

// u(y) by adaptive quadrature of the defining integral; the independent
// inversion oracle for s.  Requires |y| < 1.
double invert_hyperelliptic(double y, const ModulusPair& m);

}  // namespace glame
