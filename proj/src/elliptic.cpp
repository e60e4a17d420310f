// SPDX-License-Identifier: Apache-2.0
#include "elliptic.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace glame {

namespace {
constexpr int kMaxIter = 32;
const double kEps = std::numeric_limits<double>::epsilon();
}  // namespace

double agm(double a, double b) {
    if (a < 0 || b < 0) throw std::domain_error("agm: negative argument");
    if (a == 0 || b == 0) return 0;
    for (int i = 0; i < kMaxIter; ++i) {
        if (std::abs(a - b) <= 2 * kEps * a) return (a + b) / 2;
        double an = (a + b) / 2;
        b = std::sqrt(a * b);
        a = an;
    }
    throw std::runtime_error("agm: no convergence");
}

double complete_k(double k) {
    if (!(k >= 0 && k < 1))
        throw std::domain_error("complete_k: modulus must satisfy 0 <= k < 1");
    const double kp = std::sqrt((1 - k) * (1 + k));
    const double pi = 3.14159265358979323846;
    return pi / (2 * agm(1.0, kp));
}

JacobiTriple jacobi_scd(double u, double k) {
    if (!(k >= 0 && k <= 1))
        throw std::domain_error("jacobi_scd: modulus must satisfy 0 <= k <= 1");
    if (k == 1) return {std::tanh(u), 1 / std::cosh(u), 1 / std::cosh(u)};

    double mc = (1 - k) * (1 + k);  // complementary parameter k'^2
    // AGM ladder (Bulirsch sncndn, Numer. Math. 7, 78-90).  Stopping at
    // sqrt(eps) still delivers full accuracy: the next mean is already
    // correct to O(eps).
    const double tol = std::sqrt(kEps);
    double m_arr[kMaxIter], n_arr[kMaxIter];
    double a = 1, c = 0;
    int l = 0;
    bool converged = false;
    for (; l < kMaxIter; ++l) {
        m_arr[l] = a;
        n_arr[l] = mc = std::sqrt(mc);
        c = (a + mc) / 2;
        if (std::abs(a - mc) <= tol * a) {
            ++l;
            converged = true;
            break;
        }
        mc *= a;
        a = c;
    }
    if (!converged) throw std::runtime_error("jacobi_scd: no convergence");

    double x = u * c;
    double sn = std::sin(x), cn = std::cos(x), dn = 1;
    if (sn != 0) {
        double aa = cn / sn;
        c *= aa;
        while (l--) {
            double b = m_arr[l];
            aa *= c;
            c *= dn;
            dn = (n_arr[l] + aa) / (b + aa);
            aa = c / b;
        }
        aa = 1 / std::sqrt(c * c + 1);
        sn = sn < 0 ? -aa : aa;
        cn = c * sn;
    }
    return {sn, cn, dn};
}

double inverse_cn(double x, double k) {
    if (!(x >= 0 && x <= 1)) throw std::domain_error("inverse_cn: x must lie in [0, 1]");
    if (x == 1) return 0;
    double lo = 0, hi = complete_k(k);
    if (x == 0) return hi;
    // cn decreases monotonically from 1 to 0 on [0, K]; plain bisection.
    for (int i = 0; i < 200; ++i) {
        double mid = (lo + hi) / 2;
        if (mid == lo || mid == hi) break;
        if (jacobi_scd(mid, k).cn > x)
            lo = mid;
        else
            hi = mid;
    }
    return (lo + hi) / 2;
}

}  // namespace glame
