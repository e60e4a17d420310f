// SPDX-License-Identifier: Apache-2.0
#include "gen_jacobi.hpp"

#include <cmath>
#include <stdexcept>

#include "elliptic.hpp"
#include "integrate.hpp"

namespace glame {

ModulusPair::ModulusPair(double k1_, double k2_) : k1(k1_), k2(k2_) {
    if (!(0 <= k2 && k2 <= k1 && k1 <= 1))
        throw std::domain_error("ModulusPair: need 0 <= k2 <= k1 <= 1");
    if (k2 == 1) throw std::domain_error("ModulusPair: k2 = 1 is degenerate");
    k2p = std::sqrt((1 - k2) * (1 + k2));
    kappa = std::sqrt((k1 - k2) * (k1 + k2)) / k2p;
    if (kappa > 1) kappa = 1;  // guard against rounding when k1 = 1
}

GenJacobiPoint eval_all(double u, const ModulusPair& m) {
    const double k1sq = m.k1sq(), k2sq = m.k2sq();
    const JacobiTriple j = jacobi_scd(m.k2p * u, m.kappa);
    const double sn2 = j.sn * j.sn;
    GenJacobiPoint p;
    p.s = j.sn / std::sqrt(1 - k2sq + k2sq * sn2);
    p.c = m.k2p * j.cn / std::sqrt(1 - k2sq * j.cn * j.cn);
    if (m.k1 - m.k2 > 1e-6) {
        const double dd = k1sq - k2sq;
        const double denom = std::sqrt(dd / (k1sq - k2sq * j.dn * j.dn));
        p.d1 = j.dn * denom;
        p.d2 = denom;
    } else {
        const double s2 = p.s * p.s;
        p.d1 = std::sqrt(1 - k1sq * s2);
        p.d2 = std::sqrt(1 - k2sq * s2);
    }
    return p;
}

GenJacobiDerivatives eval_derivatives(double u, const ModulusPair& m) {
    const GenJacobiPoint p = eval_all(u, m);
    GenJacobiDerivatives d;
    d.ds = p.c * p.d1 * p.d2;
    d.dc = -p.s * p.d1 * p.d2;
    d.dd1 = -m.k1sq() * p.s * p.c * p.d2;
    d.dd2 = -m.k2sq() * p.s * p.c * p.d1;
    return d;
}

GenJacobiSecondDerivatives eval_second_derivatives(double u, const ModulusPair& m) {
    const double k1sq = m.k1sq(), k2sq = m.k2sq();
    const GenJacobiPoint p = eval_all(u, m);
    GenJacobiSecondDerivatives d;
    const double s = p.s, c = p.c, d1 = p.d1;
    d.dss = -3 * k1sq * k2sq * s * s * s * s * s + 2 * (k1sq + k2sq + k1sq * k2sq) * s * s * s -
            (1 + k1sq + k2sq) * s;
    d.dcc = -3 * k1sq * k2sq * c * c * c * c * c - 2 * (k1sq + k2sq - 3 * k1sq * k2sq) * c * c * c +
            (-1 + 2 * k1sq + 2 * k2sq - 3 * k1sq * k2sq) * c;
    if (k1sq == 0) {
        // k1 = 0 forces k2 = 0 and d1 is identically 1.
        d.dd1d1 = 0;
    } else {
        const double r = k2sq / k1sq;
        d.dd1d1 = -3 * r * d1 * d1 * d1 * d1 * d1 - 2 * (1 + k2sq - 3 * r) * d1 * d1 * d1 +
                  (2 - k1sq + 2 * k2sq - 3 * r) * d1;
    }
    return d;
}

BranchData branch_data(const ModulusPair& m) {
    if (!(0 < m.k2 && m.k2 < m.k1 && m.k1 < 1))
        throw std::domain_error("branch_data: need 0 < k2 < k1 < 1");
    const double kappa_p = std::sqrt((1 - m.kappa) * (1 + m.kappa));
    const double kk = complete_k(m.kappa);
    const double kkp = complete_k(kappa_p);
    BranchData b;
    b.u1 = std::complex<double>(0, inverse_cn(m.k2, kappa_p) / m.k2p);
    b.u2 = -b.u1 + std::complex<double>(0, 2 * kkp / m.k2p);
    b.u3 = b.u1 + 2 * kk / m.k2p;
    b.u4 = b.u2 + 2 * kk / m.k2p;
    b.real_period_d = 2 * kk / m.k2p;
    b.real_period_s = b.real_period_c = 4 * kk / m.k2p;
    return b;
}

double amplitude(double z, const ModulusPair& m) {
    const double k1sq = m.k1sq(), k2sq = m.k2sq();
    auto rhs = [k1sq, k2sq](double, double t) {
        const double st = std::sin(t), s2 = st * st;
        return std::sqrt((1 - k1sq * s2) * (1 - k2sq * s2));
    };
    return rk45_scalar(rhs, 0.0, 0.0, z, 1e-12);
}

double invert_hyperelliptic(double y, const ModulusPair& m) {
    if (!(std::abs(y) < 1)) throw std::domain_error("invert_hyperelliptic: need |y| < 1");
    const double k1sq = m.k1sq(), k2sq = m.k2sq();
    auto f = [k1sq, k2sq](double t) {
        const double t2 = t * t;
        return 1.0 / std::sqrt((1 - t2) * (1 - k1sq * t2) * (1 - k2sq * t2));
    };
    return integrate_gk(f, 0.0, y, 1e-13, 1e-13);
}

}  // namespace glame
