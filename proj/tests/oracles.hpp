// Independent numerical oracles used by the test suites.  Each one avoids
// the closed-form evaluation path it is meant to check: the function values
// come from direct ODE integration of the defining first-order system, and
// the complete integral from direct quadrature of its defining integral.
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

#include "elliptic.hpp"
#include "gen_jacobi.hpp"
#include "lame.hpp"

namespace glame::oracle {

// (s, c, d1, d2)(u) by fixed-step RK4 on s' = c d1 d2, c' = -s d1 d2,
// d1' = -k1^2 s c d2, d2' = -k2^2 s c d1 from (0, 1, 1, 1).
GenJacobiPoint gen_jacobi_ode(double u, const ModulusPair& m, double step = 1e-4);

// (sn, cn, dn)(u) by RK4 on the classical system from (0, 1, 1).
JacobiTriple jacobi_ode(double u, double k, double step = 1e-4);

// K(k) by adaptive Simpson quadrature of the defining integral in the
// trigonometric substitution.
double complete_k_quadrature(double k);

// Central difference helpers.
double fd1(const std::function<double(double)>& f, double x, double h = 1e-5);
double fd2(const std::function<double(double)>& f, double x, double h = 1e-5);

// f(z) solving f'' = -(V + E) f from f(0) = f0, f'(0) = fp0, by RK4.
double schrodinger_ode(const ParamVector& p, double E, const ModulusPair& m, double f0,
                       double fp0, double z, double step = 1e-5);

// Same integration, returning (f, f') at z.
std::array<double, 2> schrodinger_ode_state(const ParamVector& p, double E,
                                            const ModulusPair& m, double f0, double fp0,
                                            double z, double step = 1e-5);

}  // namespace glame::oracle
