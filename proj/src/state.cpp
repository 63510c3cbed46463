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

#include "anticonc/state.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace anticonc {

namespace {

constexpr double kUnitarityTol = 1e-10;

void check_qubit_count(int n) {
  if (n < 1 || n > 24) {
    throw std::invalid_argument("qubit count must be in [1, 24], got " + std::to_string(n));
  }
}

}  // namespace

std::uint64_t bitstring_to_index(int n, std::string_view bits) {
  if (static_cast<int>(bits.size()) != n) {
    throw std::invalid_argument("bitstring length " + std::to_string(bits.size()) +
                                " does not match qubit count " + std::to_string(n));
  }
  std::uint64_t idx = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("bitstring may contain only '0' and '1'");
    }
    idx = (idx << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return idx;
}

std::string index_to_bitstring(int n, std::uint64_t index) {
  std::string bits(static_cast<std::size_t>(n), '0');
  for (int q = 0; q < n; ++q) {
    if ((index >> bit_position(n, q)) & 1u) bits[static_cast<std::size_t>(q)] = '1';
  }
  return bits;
}

GateMatrix::GateMatrix(int dim) : dim_(dim) {
  if (dim != 2 && dim != 4) {
    throw std::invalid_argument("gate dimension must be 2 or 4");
  }
}

GateMatrix GateMatrix::adjoint() const {
  GateMatrix out(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) out.at(r, c) = std::conj(at(c, r));
  return out;
}

GateMatrix GateMatrix::operator*(const GateMatrix& rhs) const {
  if (dim_ != rhs.dim_) throw std::invalid_argument("gate dimension mismatch");
  GateMatrix out(dim_);
  for (int r = 0; r < dim_; ++r) {
    for (int k = 0; k < dim_; ++k) {
      const cdouble v = at(r, k);
      for (int c = 0; c < dim_; ++c) out.at(r, c) += v * rhs.at(k, c);
    }
  }
  return out;
}

double GateMatrix::unitarity_error() const {
  double worst = 0.0;
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) {
      cdouble s = 0.0;
      for (int k = 0; k < dim_; ++k) s += std::conj(at(k, r)) * at(k, c);
      if (r == c) s -= 1.0;
      worst = std::max(worst, std::abs(s));
    }
  }
  return worst;
}

double GateMatrix::distance_up_to_phase(const GateMatrix& a, const GateMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("gate dimension mismatch");
  // Align on b's largest entry to avoid dividing by a near-zero phase.
  int rmax = 0, cmax = 0;
  double best = -1.0;
  for (int r = 0; r < b.dim(); ++r)
    for (int c = 0; c < b.dim(); ++c)
      if (std::abs(b.at(r, c)) > best) {
        best = std::abs(b.at(r, c));
        rmax = r;
        cmax = c;
      }
  if (best <= 0.0) throw std::invalid_argument("zero matrix in phase comparison");
  const cdouble phase = (a.at(rmax, cmax) / std::abs(a.at(rmax, cmax))) /
                        (b.at(rmax, cmax) / std::abs(b.at(rmax, cmax)));
  double worst = 0.0;
  for (int r = 0; r < b.dim(); ++r)
    for (int c = 0; c < b.dim(); ++c)
      worst = std::max(worst, std::abs(a.at(r, c) - phase * b.at(r, c)));
  return worst;
}

namespace gates {

GateMatrix identity2() {
  GateMatrix g(2);
  g.at(0, 0) = 1.0;
  g.at(1, 1) = 1.0;
  return g;
}

GateMatrix pauli_x() {
  GateMatrix g(2);
  g.at(0, 1) = 1.0;
  g.at(1, 0) = 1.0;
  return g;
}

GateMatrix pauli_y() {
  GateMatrix g(2);
  g.at(0, 1) = cdouble(0.0, -1.0);
  g.at(1, 0) = cdouble(0.0, 1.0);
  return g;
}

GateMatrix pauli_z() {
  GateMatrix g(2);
  g.at(0, 0) = 1.0;
  g.at(1, 1) = -1.0;
  return g;
}

GateMatrix hadamard() {
  const double s = 1.0 / std::numbers::sqrt2;
  GateMatrix g(2);
  g.at(0, 0) = s;
  g.at(0, 1) = s;
  g.at(1, 0) = s;
  g.at(1, 1) = -s;
  return g;
}

GateMatrix sqrt_x() {
  // Principal square root: ((1+i)/2) I + ((1-i)/2) X.
  GateMatrix g(2);
  const cdouble a(0.5, 0.5), b(0.5, -0.5);
  g.at(0, 0) = a;
  g.at(0, 1) = b;
  g.at(1, 0) = b;
  g.at(1, 1) = a;
  return g;
}

GateMatrix sqrt_y() {
  GateMatrix g(2);
  const cdouble a(0.5, 0.5);
  g.at(0, 0) = a;
  g.at(0, 1) = -a;
  g.at(1, 0) = a;
  g.at(1, 1) = a;
  return g;
}

GateMatrix t_gate() { return phase(std::numbers::pi / 4.0); }

GateMatrix phase(double phi) {
  GateMatrix g(2);
  g.at(0, 0) = 1.0;
  g.at(1, 1) = std::polar(1.0, phi);
  return g;
}

GateMatrix cz() { return cphase(std::numbers::pi); }

GateMatrix cphase(double phi) {
  GateMatrix g(4);
  g.at(0, 0) = 1.0;
  g.at(1, 1) = 1.0;
  g.at(2, 2) = 1.0;
  g.at(3, 3) = std::polar(1.0, phi);
  return g;
}

GateMatrix kron(const GateMatrix& a, const GateMatrix& b) {
  if (a.dim() != 2 || b.dim() != 2) throw std::invalid_argument("kron expects 2x2 factors");
  GateMatrix g(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) g.at(2 * i + k, 2 * j + l) = a.at(i, j) * b.at(k, l);
  return g;
}

}  // namespace gates

void Circuit::add(const GateMatrix& g, int q) {
  if (g.dim() != 2) throw std::invalid_argument("single-qubit add needs a 2x2 gate");
  ops.push_back(GateOp{g, {q, 0}, 1});
}

void Circuit::add(const GateMatrix& g, int qa, int qb) {
  if (g.dim() != 4) throw std::invalid_argument("two-qubit add needs a 4x4 gate");
  ops.push_back(GateOp{g, {qa, qb}, 2});
}

State::State(int n) : n_(n) {
  check_qubit_count(n);
  amps_.assign(std::size_t{1} << n, cdouble{});
  amps_[0] = 1.0;
}

double State::norm_squared() const {
  double s = 0.0;
  for (const cdouble& a : amps_) s += std::norm(a);
  return s;
}

State init_basis_state(int n, std::string_view bits) {
  check_qubit_count(n);
  const std::uint64_t idx = bitstring_to_index(n, bits);
  State s(n);
  s.amplitudes_mut()[0] = 0.0;
  s.amplitudes_mut()[idx] = 1.0;
  return s;
}

namespace {

void apply_1q(State& state, const GateMatrix& g, int q) {
  const int n = state.num_qubits();
  auto amps = state.amplitudes_mut();
  const std::uint64_t step = std::uint64_t{1} << bit_position(n, q);
  const std::uint64_t dim = state.dimension();
  const cdouble u00 = g.at(0, 0), u01 = g.at(0, 1), u10 = g.at(1, 0), u11 = g.at(1, 1);
  for (std::uint64_t base = 0; base < dim; base += step << 1) {
    for (std::uint64_t off = 0; off < step; ++off) {
      const std::uint64_t i0 = base + off;
      const std::uint64_t i1 = i0 + step;
      const cdouble a = amps[i0], b = amps[i1];
      amps[i0] = u00 * a + u01 * b;
      amps[i1] = u10 * a + u11 * b;
    }
  }
}

void apply_2q(State& state, const GateMatrix& g, int qa, int qb) {
  const int n = state.num_qubits();
  auto amps = state.amplitudes_mut();
  const std::uint64_t pa = bit_position(n, qa);  // high bit of the gate basis
  const std::uint64_t pb = bit_position(n, qb);
  const std::uint64_t ma = std::uint64_t{1} << pa;
  const std::uint64_t mb = std::uint64_t{1} << pb;
  const std::uint64_t lo = std::min(pa, pb);
  const std::uint64_t hi = std::max(pa, pb);
  const std::uint64_t quarter = state.dimension() >> 2;

  cdouble u[4][4];
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) u[r][c] = g.at(r, c);

  for (std::uint64_t k = 0; k < quarter; ++k) {
    // Spread k over the index bits that are neither pa nor pb.
    std::uint64_t base = ((k >> lo) << (lo + 1)) | (k & ((std::uint64_t{1} << lo) - 1));
    base = ((base >> hi) << (hi + 1)) | (base & ((std::uint64_t{1} << hi) - 1));
    const std::uint64_t i0 = base;            // |a b> = |0 0>
    const std::uint64_t i1 = base | mb;       // |0 1>
    const std::uint64_t i2 = base | ma;       // |1 0>
    const std::uint64_t i3 = base | ma | mb;  // |1 1>
    const cdouble v0 = amps[i0], v1 = amps[i1], v2 = amps[i2], v3 = amps[i3];
    amps[i0] = u[0][0] * v0 + u[0][1] * v1 + u[0][2] * v2 + u[0][3] * v3;
    amps[i1] = u[1][0] * v0 + u[1][1] * v1 + u[1][2] * v2 + u[1][3] * v3;
    amps[i2] = u[2][0] * v0 + u[2][1] * v1 + u[2][2] * v2 + u[2][3] * v3;
    amps[i3] = u[3][0] * v0 + u[3][1] * v1 + u[3][2] * v2 + u[3][3] * v3;
  }
}

}  // namespace

void apply_gate(State& state, const GateMatrix& g, std::span<const int> targets, bool validate) {
  const int n = state.num_qubits();
  const int arity = g.dim() == 2 ? 1 : 2;
  if (static_cast<int>(targets.size()) != arity) {
    throw std::invalid_argument("target count does not match gate arity");
  }
  for (int q : targets) {
    if (q < 0 || q >= n) throw std::invalid_argument("target qubit out of range");
  }
  if (arity == 2 && targets[0] == targets[1]) {
    throw std::invalid_argument("two-qubit gate targets must be distinct");
  }
  if (validate && !g.is_unitary(kUnitarityTol)) {
    throw std::invalid_argument("gate matrix failed unitarity validation");
  }
  if (arity == 1) {
    apply_1q(state, g, targets[0]);
  } else {
    apply_2q(state, g, targets[0], targets[1]);
  }
}

void apply_gate(State& state, const GateMatrix& g, int q, bool validate) {
  const int t[1] = {q};
  apply_gate(state, g, std::span<const int>(t, 1), validate);
}

void apply_gate(State& state, const GateMatrix& g, int qa, int qb, bool validate) {
  const int t[2] = {qa, qb};
  apply_gate(state, g, std::span<const int>(t, 2), validate);
}

void apply_circuit(State& state, const Circuit& c, bool validate) {
  if (c.n != state.num_qubits()) {
    throw std::invalid_argument("circuit qubit count does not match state");
  }
  for (const GateOp& op : c.ops) {
    apply_gate(state, op.gate, std::span<const int>(op.targets.data(),
                                                    static_cast<std::size_t>(op.arity)),
               validate);
  }
}

void hadamard_all(State& state) {
  const GateMatrix h = gates::hadamard();
  for (int q = 0; q < state.num_qubits(); ++q) apply_1q(state, h, q);
}

double output_probability(const State& state, std::string_view bits) {
  const std::uint64_t idx = bitstring_to_index(state.num_qubits(), bits);
  return std::norm(state.amplitudes()[idx]);
}

std::vector<double> full_distribution(const State& state) {
  std::vector<double> probs(state.dimension());
  auto amps = state.amplitudes();
  for (std::uint64_t i = 0; i < state.dimension(); ++i) probs[i] = std::norm(amps[i]);
  return probs;
}

std::string sample_outcome(const State& state, Rng& rng) {
  const double r = rng.next_double();
  auto amps = state.amplitudes();
  double cum = 0.0;
  std::uint64_t idx = state.dimension() - 1;
  for (std::uint64_t i = 0; i < state.dimension(); ++i) {
    cum += std::norm(amps[i]);
    if (r < cum) {
      idx = i;
      break;
    }
  }
  return index_to_bitstring(state.num_qubits(), idx);
}

}  // namespace anticonc
