// Quadrature and ODE stepping used by the function evaluators and by the
// independent verification paths.
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>

namespace glame {

// Adaptive Gauss-Kronrod (G7, K15) quadrature with interval bisection.
// The |K15 - G7| gap drives refinement until it drops below
// max(abs_tol, rel_tol * |I|) on every subinterval.
double integrate_gk(const std::function<double(double)>& f, double a, double b,
                    double abs_tol = 1e-13, double rel_tol = 1e-13, int max_depth = 48);

// Classical fixed-step RK4 for a first-order system.  Integrates from t0 to
// t1 with steps of size at most h (the last step is shortened to land
// exactly on t1); negative direction is handled.
template <std::size_t N>
std::array<double, N> rk4_integrate(
    const std::function<void(double, const std::array<double, N>&, std::array<double, N>&)>& rhs,
    std::array<double, N> y, double t0, double t1, double h);

// Embedded Cash-Karp 4(5) integration of a scalar ODE y' = f(t, y) with
// adaptive step-size control; local tolerance abs_tol per step.
double rk45_scalar(const std::function<double(double, double)>& rhs, double y0, double t0,
                   double t1, double abs_tol = 1e-12);

// --- implementation of the template ---

template <std::size_t N>
std::array<double, N> rk4_integrate(
    const std::function<void(double, const std::array<double, N>&, std::array<double, N>&)>& rhs,
    std::array<double, N> y, double t0, double t1, double h) {
    const double len = t1 - t0;
    if (len == 0) return y;
    long steps = static_cast<long>(std::abs(len) / h) + 1;
    const double dt = len / static_cast<double>(steps);
    std::array<double, N> k1, k2, k3, k4, tmp;
    double t = t0;
    for (long i = 0; i < steps; ++i) {
        rhs(t, y, k1);
        for (std::size_t j = 0; j < N; ++j) tmp[j] = y[j] + 0.5 * dt * k1[j];
        rhs(t + 0.5 * dt, tmp, k2);
        for (std::size_t j = 0; j < N; ++j) tmp[j] = y[j] + 0.5 * dt * k2[j];
        rhs(t + 0.5 * dt, tmp, k3);
        for (std::size_t j = 0; j < N; ++j) tmp[j] = y[j] + dt * k3[j];
        rhs(t + dt, tmp, k4);
        for (std::size_t j = 0; j < N; ++j)
            y[j] += dt / 6.0 * (k1[j] + 2 * (k2[j] + k3[j]) + k4[j]);
        t = t0 + (i + 1) * dt;
    }
    return y;
}

}  // namespace glame
