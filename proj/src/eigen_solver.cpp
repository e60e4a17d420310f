// SPDX-License-Identifier: Apache-2.0
#include "eigen_solver.hpp"

#include <cmath>
#include <stdexcept>

namespace glame {

namespace {

inline double& at(std::vector<double>& a, int n, int i, int j) { return a[i * n + j]; }

// Radix-2 balancing (EISPACK balanc): similarity scaling by powers of two so
// that row and column norms are comparable.  Exact in floating point.
void balance(std::vector<double>& a, int n) {
    const double radix = 2.0, sqrdx = radix * radix;
    bool last = false;
    while (!last) {
        last = true;
        for (int i = 0; i < n; ++i) {
            double r = 0, c = 0;
            for (int j = 0; j < n; ++j) {
                if (j != i) {
                    c += std::abs(at(a, n, j, i));
                    r += std::abs(at(a, n, i, j));
                }
            }
            if (c == 0 || r == 0) continue;
            double g = r / radix, f = 1, s = c + r;
            while (c < g) {
                f *= radix;
                c *= sqrdx;
            }
            g = r * radix;
            while (c > g) {
                f /= radix;
                c /= sqrdx;
            }
            if ((c + r) / f < 0.95 * s) {
                last = false;
                g = 1 / f;
                for (int j = 0; j < n; ++j) at(a, n, i, j) *= g;
                for (int j = 0; j < n; ++j) at(a, n, j, i) *= f;
            }
        }
    }
}

// Reduction to upper Hessenberg form by stabilized elementary similarity
// transformations (EISPACK elmhes).
void to_hessenberg(std::vector<double>& a, int n) {
    for (int m = 1; m < n - 1; ++m) {
        double x = 0;
        int i = m;
        for (int j = m; j < n; ++j) {
            if (std::abs(at(a, n, j, m - 1)) > std::abs(x)) {
                x = at(a, n, j, m - 1);
                i = j;
            }
        }
        if (i != m) {
            for (int j = m - 1; j < n; ++j) std::swap(at(a, n, i, j), at(a, n, m, j));
            for (int j = 0; j < n; ++j) std::swap(at(a, n, j, i), at(a, n, j, m));
        }
        if (x != 0) {
            for (i = m + 1; i < n; ++i) {
                double y = at(a, n, i, m - 1);
                if (y != 0) {
                    y /= x;
                    at(a, n, i, m - 1) = y;
                    for (int j = m; j < n; ++j) at(a, n, i, j) -= y * at(a, n, m, j);
                    for (int j = 0; j < n; ++j) at(a, n, j, m) += y * at(a, n, j, i);
                }
            }
        }
    }
    // Zero out the part below the subdiagonal (holds multipliers otherwise).
    for (int i = 2; i < n; ++i)
        for (int j = 0; j < i - 1; ++j) at(a, n, i, j) = 0;
}

// Francis double-shift QR on an upper Hessenberg matrix; eigenvalues only.
std::vector<std::complex<double>> hqr(std::vector<double>& a, int n) {
    std::vector<std::complex<double>> wri(n);
    double anorm = 0;
    for (int i = 0; i < n; ++i)
        for (int j = std::max(i - 1, 0); j < n; ++j) anorm += std::abs(at(a, n, i, j));

    int nn = n - 1;
    double t = 0;
    while (nn >= 0) {
        int its = 0;
        int l;
        do {
            for (l = nn; l > 0; --l) {
                double s = std::abs(at(a, n, l - 1, l - 1)) + std::abs(at(a, n, l, l));
                if (s == 0) s = anorm;
                if (std::abs(at(a, n, l, l - 1)) + s == s) {
                    at(a, n, l, l - 1) = 0;
                    break;
                }
            }
            double x = at(a, n, nn, nn);
            if (l == nn) {
                wri[nn--] = x + t;
            } else {
                double y = at(a, n, nn - 1, nn - 1);
                double w = at(a, n, nn, nn - 1) * at(a, n, nn - 1, nn);
                if (l == nn - 1) {
                    double p = 0.5 * (y - x);
                    double q = p * p + w;
                    double z = std::sqrt(std::abs(q));
                    x += t;
                    if (q >= 0) {
                        z = p + (p >= 0 ? z : -z);
                        wri[nn - 1] = wri[nn] = x + z;
                        if (z != 0) wri[nn] = x - w / z;
                    } else {
                        wri[nn] = std::complex<double>(x + p, -z);
                        wri[nn - 1] = std::conj(wri[nn]);
                    }
                    nn -= 2;
                } else {
                    if (its == 60) throw std::runtime_error("hqr: too many iterations");
                    double x2 = x, y2 = y, w2 = w;
                    if (its == 10 || its == 20 || its == 30 || its == 40 || its == 50) {
                        // exceptional shift
                        t += x2;
                        for (int i = 0; i <= nn; ++i) at(a, n, i, i) -= x2;
                        double s = std::abs(at(a, n, nn, nn - 1)) +
                                   std::abs(at(a, n, nn - 1, nn - 2));
                        y2 = x2 = 0.75 * s;
                        w2 = -0.4375 * s * s;
                    }
                    ++its;
                    int m;
                    double p = 0, q = 0, z = 0, r = 0, s = 0;
                    for (m = nn - 2; m >= l; --m) {
                        z = at(a, n, m, m);
                        r = x2 - z;
                        s = y2 - z;
                        p = (r * s - w2) / at(a, n, m + 1, m) + at(a, n, m, m + 1);
                        q = at(a, n, m + 1, m + 1) - z - r - s;
                        r = at(a, n, m + 2, m + 1);
                        s = std::abs(p) + std::abs(q) + std::abs(r);
                        p /= s;
                        q /= s;
                        r /= s;
                        if (m == l) break;
                        double u = std::abs(at(a, n, m, m - 1)) * (std::abs(q) + std::abs(r));
                        double v = std::abs(p) * (std::abs(at(a, n, m - 1, m - 1)) +
                                                  std::abs(z) + std::abs(at(a, n, m + 1, m + 1)));
                        if (u + v == v) break;
                    }
                    for (int i = m; i < nn - 1; ++i) {
                        at(a, n, i + 2, i) = 0;
                        if (i != m) at(a, n, i + 2, i - 1) = 0;
                    }
                    for (int k = m; k < nn; ++k) {
                        if (k != m) {
                            p = at(a, n, k, k - 1);
                            q = at(a, n, k + 1, k - 1);
                            r = 0;
                            if (k + 1 != nn) r = at(a, n, k + 2, k - 1);
                            x2 = std::abs(p) + std::abs(q) + std::abs(r);
                            if (x2 != 0) {
                                p /= x2;
                                q /= x2;
                                r /= x2;
                            }
                        }
                        s = std::sqrt(p * p + q * q + r * r);
                        if (p < 0) s = -s;
                        if (s == 0) continue;
                        if (k == m) {
                            if (l != m) at(a, n, k, k - 1) = -at(a, n, k, k - 1);
                        } else {
                            at(a, n, k, k - 1) = -s * x2;
                        }
                        p += s;
                        x2 = p / s;
                        y2 = q / s;
                        z = r / s;
                        q /= p;
                        r /= p;
                        for (int j = k; j <= nn; ++j) {
                            p = at(a, n, k, j) + q * at(a, n, k + 1, j);
                            if (k + 1 != nn) {
                                p += r * at(a, n, k + 2, j);
                                at(a, n, k + 2, j) -= p * z;
                            }
                            at(a, n, k + 1, j) -= p * y2;
                            at(a, n, k, j) -= p * x2;
                        }
                        int mmin = nn < k + 3 ? nn : k + 3;
                        for (int i = l; i <= mmin; ++i) {
                            p = x2 * at(a, n, i, k) + y2 * at(a, n, i, k + 1);
                            if (k + 1 != nn) {
                                p += z * at(a, n, i, k + 2);
                                at(a, n, i, k + 2) -= p * r;
                            }
                            at(a, n, i, k + 1) -= p * q;
                            at(a, n, i, k) -= p;
                        }
                    }
                }
            }
        } while (l + 1 < nn);  // l was reached without deflating the block
    }
    return wri;
}

}  // namespace

std::vector<std::complex<double>> real_matrix_eigenvalues(std::vector<double> a, int n) {
    if (n <= 0) return {};
    if (static_cast<int>(a.size()) != n * n)
        throw std::invalid_argument("real_matrix_eigenvalues: size mismatch");
    if (n == 1) return {std::complex<double>(a[0], 0)};
    balance(a, n);
    to_hessenberg(a, n);
    return hqr(a, n);
}

}  // namespace glame
