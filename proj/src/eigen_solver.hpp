// Eigenvalues of a real dense (generally nonsymmetric) matrix: balancing,
// elimination to upper Hessenberg form, then Francis double-shift QR.
// Follows the EISPACK balanc/elmhes/hqr lineage; eigenvalues only.
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <vector>

namespace glame {

// a is n x n, row-major; consumed by the reduction.  Throws
// std::runtime_error if the QR iteration fails to converge.
std::vector<std::complex<double>> real_matrix_eigenvalues(std::vector<double> a, int n);

}  // namespace glame
