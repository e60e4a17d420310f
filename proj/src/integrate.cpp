// SPDX-License-Identifier: Apache-2.0
#include "integrate.hpp"

#include <cmath>
#include <stdexcept>

namespace glame {

namespace {

// Kronrod 15-point nodes/weights on [-1, 1] and the embedded Gauss 7-point
// weights (QUADPACK dqk15 constants).
constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct GkResult {
    double integral;
    double error;
};

GkResult gk15(const std::function<double(double)>& f, double a, double b) {
    const double hlgth = (b - a) / 2;
    const double centr = (a + b) / 2;
    const double fc = f(centr);
    double resg = fc * wg[3];
    double resk = fc * wgk[7];
    for (int j = 0; j < 7; ++j) {
        const double absc = hlgth * xgk[j];
        const double fsum = f(centr - absc) + f(centr + absc);
        resk += wgk[j] * fsum;
        if (j % 2 == 1) resg += wg[j / 2] * fsum;
    }
    return {resk * hlgth, std::abs((resk - resg) * hlgth)};
}

double gk_adaptive(const std::function<double(double)>& f, double a, double b, double abs_tol,
                   double rel_tol, int depth, int max_depth) {
    GkResult r = gk15(f, a, b);
    if (r.error <= std::max(abs_tol, rel_tol * std::abs(r.integral)) || depth >= max_depth)
        return r.integral;
    const double mid = (a + b) / 2;
    return gk_adaptive(f, a, mid, abs_tol / 2, rel_tol, depth + 1, max_depth) +
           gk_adaptive(f, mid, b, abs_tol / 2, rel_tol, depth + 1, max_depth);
}

}  // namespace

double integrate_gk(const std::function<double(double)>& f, double a, double b, double abs_tol,
                    double rel_tol, int max_depth) {
    if (a == b) return 0;
    return gk_adaptive(f, a, b, abs_tol, rel_tol, 0, max_depth);
}

double rk45_scalar(const std::function<double(double, double)>& rhs, double y0, double t0,
                   double t1, double abs_tol) {
    // Cash-Karp tableau.
    static const double a2 = 0.2, a3 = 0.3, a4 = 0.6, a5 = 1.0, a6 = 0.875;
    static const double b21 = 0.2;
    static const double b31 = 3.0 / 40, b32 = 9.0 / 40;
    static const double b41 = 0.3, b42 = -0.9, b43 = 1.2;
    static const double b51 = -11.0 / 54, b52 = 2.5, b53 = -70.0 / 27, b54 = 35.0 / 27;
    static const double b61 = 1631.0 / 55296, b62 = 175.0 / 512, b63 = 575.0 / 13824,
                        b64 = 44275.0 / 110592, b65 = 253.0 / 4096;
    static const double c1 = 37.0 / 378, c3 = 250.0 / 621, c4 = 125.0 / 594, c6 = 512.0 / 1771;
    static const double d1 = c1 - 2825.0 / 27648, d3 = c3 - 18575.0 / 48384,
                        d4 = c4 - 13525.0 / 55296, d5 = -277.0 / 14336, d6 = c6 - 0.25;

    if (t1 == t0) return y0;
    const double dir = t1 > t0 ? 1.0 : -1.0;
    double t = t0, y = y0;
    double h = dir * std::min(0.1, std::abs(t1 - t0));
    int steps = 0;
    while (dir * (t1 - t) > 0) {
        if (++steps > 1000000) throw std::runtime_error("rk45_scalar: step limit exceeded");
        if (dir * (t + h - t1) > 0) h = t1 - t;
        const double k1 = rhs(t, y);
        const double k2 = rhs(t + a2 * h, y + h * b21 * k1);
        const double k3 = rhs(t + a3 * h, y + h * (b31 * k1 + b32 * k2));
        const double k4 = rhs(t + a4 * h, y + h * (b41 * k1 + b42 * k2 + b43 * k3));
        const double k5 = rhs(t + a5 * h, y + h * (b51 * k1 + b52 * k2 + b53 * k3 + b54 * k4));
        const double k6 =
            rhs(t + a6 * h, y + h * (b61 * k1 + b62 * k2 + b63 * k3 + b64 * k4 + b65 * k5));
        const double ynew = y + h * (c1 * k1 + c3 * k3 + c4 * k4 + c6 * k6);
        const double err = std::abs(h * (d1 * k1 + d3 * k3 + d4 * k4 + d5 * k5 + d6 * k6));
        if (err <= abs_tol || std::abs(h) < 1e-14) {
            t += h;
            y = ynew;
            if (err < abs_tol / 32) h *= 2;
        } else {
            h *= std::max(0.1, 0.9 * std::pow(abs_tol / err, 0.25));
        }
    }
    return y;
}

}  // namespace glame
