// Copyright 2026 The anticonc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ANTICONC_RANDOM_MATRIX_HPP_
#define ANTICONC_RANDOM_MATRIX_HPP_

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "anticonc/rng.hpp"

namespace anticonc {

/// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

  static ComplexMatrix identity(int n);

  int dim() const { return n_; }
  std::complex<double>& at(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
  const std::complex<double>& at(int r, int c) const {
    return a_[static_cast<std::size_t>(r) * n_ + c];
  }

  ComplexMatrix adjoint() const;
  ComplexMatrix operator*(const ComplexMatrix& rhs) const;

  /// max-norm of U^dag U - I.
  double unitarity_error() const;
  /// max-norm of A - A^dag.
  double hermiticity_error() const;

 private:
  int n_ = 0;
  std::vector<std::complex<double>> a_;
};

/// Ginibre draw: i.i.d. complex Gaussian entries with E|z|^2 = 1
/// (real and imaginary parts each N(0, 1/2)).
ComplexMatrix sample_ginibre(int n, Rng& rng);

/// Haar unitary from the phase-fixed QR factorisation of a Ginibre draw.
/// Q's columns are rescaled so the R diagonal is real positive; without
/// that correction the QR output is not Haar.
ComplexMatrix haar_via_qr(int n, Rng& rng);

/// GUE draw with the constructive convention H = D + R + R^dag:
/// D real diagonal N(0,1), strict upper triangle complex Gaussian with
/// E|R_ij|^2 = 1.
ComplexMatrix sample_gue(int n, Rng& rng);

/// Haar unitary from GUE eigenvectors, each column multiplied by an
/// independent uniform phase.
ComplexMatrix haar_via_gue(int n, Rng& rng);

/// In-place QR by Householder reflections. Returns {Q, R} with diag(R)
/// real positive.
std::pair<ComplexMatrix, ComplexMatrix> householder_qr(const ComplexMatrix& a);

/// Cyclic-Jacobi eigendecomposition of a Hermitian matrix. Returns
/// {eigenvalues, V} with A V = V diag(lambda); sweeps until the
/// off-diagonal Frobenius norm drops below 1e-12 (relative to the input
/// scale). Throws on non-convergence.
std::pair<std::vector<double>, ComplexMatrix> jacobi_hermitian_eig(const ComplexMatrix& a);

/// Density of a fixed output probability of a Haar unitary:
/// (N-1)(1-p)^{N-2}. Requires N >= 2, p in [0,1].
double porter_thomas_pdf(double p, std::uint64_t dim);

/// CDF 1 - (1-p)^{N-1}.
double porter_thomas_cdf(double p, std::uint64_t dim);

/// Draw p with the Porter-Thomas law by inverse CDF.
double porter_thomas_sample(std::uint64_t dim, Rng& rng);

/// (E[p], E[p^2]) = (1/N, 2/(N(N+1))).
std::pair<double, double> haar_moments(std::uint64_t dim);

}  // namespace anticonc

#endif  // ANTICONC_RANDOM_MATRIX_HPP_
