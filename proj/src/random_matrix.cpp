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

#include "anticonc/random_matrix.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace anticonc {

using cdouble = std::complex<double>;

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(n_);
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) out.at(r, c) = std::conj(at(c, r));
  return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
  if (n_ != rhs.n_) throw std::invalid_argument("matrix dimension mismatch");
  ComplexMatrix out(n_);
  for (int r = 0; r < n_; ++r) {
    for (int k = 0; k < n_; ++k) {
      const cdouble v = at(r, k);
      if (v == cdouble{}) continue;
      for (int c = 0; c < n_; ++c) out.at(r, c) += v * rhs.at(k, c);
    }
  }
  return out;
}

double ComplexMatrix::unitarity_error() const {
  double worst = 0.0;
  for (int r = 0; r < n_; ++r) {
    for (int c = 0; c < n_; ++c) {
      cdouble s = 0.0;
      for (int k = 0; k < n_; ++k) s += std::conj(at(k, r)) * at(k, c);
      if (r == c) s -= 1.0;
      worst = std::max(worst, std::abs(s));
    }
  }
  return worst;
}

double ComplexMatrix::hermiticity_error() const {
  double worst = 0.0;
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c)
      worst = std::max(worst, std::abs(at(r, c) - std::conj(at(c, r))));
  return worst;
}

namespace {

// Complex Gaussian with E|z|^2 = 1.
cdouble gaussian_entry(Rng& rng) {
  const double s = 1.0 / std::numbers::sqrt2;
  return {s * rng.next_gaussian(), s * rng.next_gaussian()};
}

}  // namespace

ComplexMatrix sample_ginibre(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("dimension must be >= 1");
  ComplexMatrix z(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) z.at(r, c) = gaussian_entry(rng);
  return z;
}

std::pair<ComplexMatrix, ComplexMatrix> householder_qr(const ComplexMatrix& a) {
  const int n = a.dim();
  ComplexMatrix r = a;
  ComplexMatrix q = ComplexMatrix::identity(n);
  std::vector<cdouble> v(static_cast<std::size_t>(n));

  for (int k = 0; k < n; ++k) {
    double norm2 = 0.0;
    for (int i = k; i < n; ++i) norm2 += std::norm(r.at(i, k));
    const double norm = std::sqrt(norm2);
    if (norm == 0.0) throw std::domain_error("rank-deficient matrix in QR");

    // Reflect column k onto alpha*e_k with alpha = -e^{i arg} * |x| (the
    // cancellation-free sign choice).
    const cdouble x0 = r.at(k, k);
    const cdouble phase = (x0 == cdouble{}) ? cdouble{1.0} : x0 / std::abs(x0);
    const cdouble alpha = -phase * norm;

    double vnorm2 = 0.0;
    for (int i = k; i < n; ++i) {
      v[static_cast<std::size_t>(i)] = r.at(i, k);
      if (i == k) v[static_cast<std::size_t>(i)] -= alpha;
      vnorm2 += std::norm(v[static_cast<std::size_t>(i)]);
    }
    if (vnorm2 == 0.0) continue;
    const double tau = 2.0 / vnorm2;

    for (int c = k; c < n; ++c) {
      cdouble dot = 0.0;
      for (int i = k; i < n; ++i) dot += std::conj(v[static_cast<std::size_t>(i)]) * r.at(i, c);
      dot *= tau;
      for (int i = k; i < n; ++i) r.at(i, c) -= dot * v[static_cast<std::size_t>(i)];
    }
    for (int row = 0; row < n; ++row) {
      cdouble dot = 0.0;
      for (int i = k; i < n; ++i) dot += q.at(row, i) * v[static_cast<std::size_t>(i)];
      dot *= tau;
      for (int i = k; i < n; ++i) q.at(row, i) -= dot * std::conj(v[static_cast<std::size_t>(i)]);
    }
  }

  // Fix the gauge: rotate column phases so diag(R) is real positive.
  for (int k = 0; k < n; ++k) {
    const cdouble d = r.at(k, k);
    const double mag = std::abs(d);
    if (mag == 0.0) throw std::domain_error("rank-deficient matrix in QR");
    const cdouble ph = d / mag;
    for (int i = 0; i < n; ++i) q.at(i, k) *= ph;
    for (int c = k; c < n; ++c) r.at(k, c) *= std::conj(ph);
  }
  return {std::move(q), std::move(r)};
}

ComplexMatrix haar_via_qr(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("dimension must be >= 1");
  for (int attempt = 0; attempt < 8; ++attempt) {
    const ComplexMatrix z = sample_ginibre(n, rng);
    try {
      return householder_qr(z).first;
    } catch (const std::domain_error&) {
      continue;  // probability-zero degenerate draw
    }
  }
  throw std::runtime_error("haar_via_qr: repeated rank-deficient Ginibre draws");
}

ComplexMatrix sample_gue(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("dimension must be >= 1");
  ComplexMatrix h(n);
  for (int i = 0; i < n; ++i) h.at(i, i) = rng.next_gaussian();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const cdouble z = gaussian_entry(rng);
      h.at(i, j) = z;
      h.at(j, i) = std::conj(z);
    }
  }
  return h;
}

std::pair<std::vector<double>, ComplexMatrix> jacobi_hermitian_eig(const ComplexMatrix& a) {
  constexpr double kOffTol = 1e-12;  // off-diagonal Frobenius norm target
  constexpr int kMaxSweeps = 60;
  const int n = a.dim();
  if (a.hermiticity_error() > 1e-10) {
    throw std::invalid_argument("jacobi_hermitian_eig expects a Hermitian matrix");
  }

  ComplexMatrix h = a;
  ComplexMatrix v = ComplexMatrix::identity(n);
  if (n == 1) return {{h.at(0, 0).real()}, std::move(v)};

  auto off_norm = [&]() {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) s += std::norm(h.at(i, j));
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_norm() <= kOffTol) {
      std::vector<double> eig(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) eig[static_cast<std::size_t>(i)] = h.at(i, i).real();
      return {std::move(eig), std::move(v)};
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cdouble hpq = h.at(p, q);
        const double mag = std::abs(hpq);
        if (mag == 0.0) continue;
        const cdouble phase = hpq / mag;
        const double app = h.at(p, p).real();
        const double aqq = h.at(q, q).real();
        // Real Jacobi angle after rotating the off-diagonal phase away.
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // G acts on columns (p, q):
        //   [  c            s          ]
        //   [ -s conj(ph)   c conj(ph) ]
        const cdouble g00 = c, g01 = s;
        const cdouble g10 = -s * std::conj(phase), g11 = c * std::conj(phase);

        for (int i = 0; i < n; ++i) {  // H <- H G, V <- V G
          const cdouble hip = h.at(i, p), hiq = h.at(i, q);
          h.at(i, p) = hip * g00 + hiq * g10;
          h.at(i, q) = hip * g01 + hiq * g11;
          const cdouble vip = v.at(i, p), viq = v.at(i, q);
          v.at(i, p) = vip * g00 + viq * g10;
          v.at(i, q) = vip * g01 + viq * g11;
        }
        for (int j = 0; j < n; ++j) {  // H <- G^dag H
          const cdouble hpj = h.at(p, j), hqj = h.at(q, j);
          h.at(p, j) = std::conj(g00) * hpj + std::conj(g10) * hqj;
          h.at(q, j) = std::conj(g01) * hpj + std::conj(g11) * hqj;
        }
        h.at(p, q) = std::conj(h.at(q, p));  // keep exact Hermitian symmetry
      }
    }
  }
  throw std::runtime_error("jacobi_hermitian_eig: no convergence after " +
                           std::to_string(kMaxSweeps) +
                           " sweeps (off-diagonal norm " + std::to_string(off_norm()) + ")");
}

ComplexMatrix haar_via_gue(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("dimension must be >= 1");
  const ComplexMatrix h = sample_gue(n, rng);
  auto [eig, vecs] = jacobi_hermitian_eig(h);
  (void)eig;
  for (int c = 0; c < n; ++c) {
    const cdouble ph = std::polar(1.0, 2.0 * std::numbers::pi * rng.next_double());
    for (int r = 0; r < n; ++r) vecs.at(r, c) *= ph;
  }
  return vecs;
}

namespace {

void check_pt_args(double p, std::uint64_t dim) {
  if (dim < 2) throw std::invalid_argument("Porter-Thomas law needs dimension >= 2");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("probability outside [0, 1]");
}

}  // namespace

double porter_thomas_pdf(double p, std::uint64_t dim) {
  check_pt_args(p, dim);
  const double nm1 = static_cast<double>(dim - 1);
  return nm1 * std::pow(1.0 - p, static_cast<double>(dim) - 2.0);
}

double porter_thomas_cdf(double p, std::uint64_t dim) {
  check_pt_args(p, dim);
  if (p >= 1.0) return 1.0;
  const double nm1 = static_cast<double>(dim - 1);
  return -std::expm1(nm1 * std::log1p(-p));
}

double porter_thomas_sample(std::uint64_t dim, Rng& rng) {
  if (dim < 2) throw std::invalid_argument("Porter-Thomas law needs dimension >= 2");
  const double u = rng.next_double();
  const double nm1 = static_cast<double>(dim - 1);
  return -std::expm1(std::log1p(-u) / nm1);
}

std::pair<double, double> haar_moments(std::uint64_t dim) {
  if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
  const double n = static_cast<double>(dim);
  return {1.0 / n, 2.0 / (n * (n + 1.0))};
}

}  // namespace anticonc
