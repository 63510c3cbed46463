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

#ifndef ANTICONC_STATE_HPP_
#define ANTICONC_STATE_HPP_

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "anticonc/rng.hpp"

namespace anticonc {

using cdouble = std::complex<double>;

/// Bit ordering convention used throughout: qubit 0 is the MOST significant
/// bit of the amplitude index, so a bitstring read left to right is the
/// binary expansion of the index ("010" on three qubits is index 2).
inline std::uint64_t bit_position(int n, int qubit) {
  return static_cast<std::uint64_t>(n - 1 - qubit);
}

std::uint64_t bitstring_to_index(int n, std::string_view bits);
std::string index_to_bitstring(int n, std::uint64_t index);

/// Dense 2x2 or 4x4 unitary acting on one or two qubits.
class GateMatrix {
 public:
  GateMatrix() : dim_(0) {}
  explicit GateMatrix(int dim);  // zero-initialised; dim must be 2 or 4

  int dim() const { return dim_; }
  cdouble& at(int r, int c) { return m_[static_cast<std::size_t>(r * dim_ + c)]; }
  const cdouble& at(int r, int c) const { return m_[static_cast<std::size_t>(r * dim_ + c)]; }

  GateMatrix adjoint() const;
  GateMatrix operator*(const GateMatrix& rhs) const;

  /// max-norm of U^dag U - I.
  double unitarity_error() const;
  bool is_unitary(double tol = 1e-10) const { return unitarity_error() <= tol; }

  /// max_ij |a_ij - e^{i theta} b_ij| minimised over the global phase theta
  /// (phase fixed from the largest-modulus entry of b).
  static double distance_up_to_phase(const GateMatrix& a, const GateMatrix& b);

 private:
  int dim_;
  std::array<cdouble, 16> m_{};
};

namespace gates {

GateMatrix identity2();
GateMatrix pauli_x();
GateMatrix pauli_y();
GateMatrix pauli_z();
GateMatrix hadamard();
GateMatrix sqrt_x();
GateMatrix sqrt_y();
GateMatrix t_gate();
GateMatrix phase(double phi);      // diag(1, e^{i phi})
GateMatrix cz();                   // diag(1, 1, 1, -1)
GateMatrix cphase(double phi);     // diag(1, 1, 1, e^{i phi})
GateMatrix kron(const GateMatrix& a, const GateMatrix& b);  // 2x2 ⊗ 2x2

}  // namespace gates

/// One gate application: |targets| matches g.dim() (1 or 2 qubits). For
/// two-qubit gates targets[0] indexes the more significant bit of the
/// gate's 4-dimensional basis.
struct GateOp {
  GateMatrix gate;
  std::array<int, 2> targets{0, 0};
  int arity = 1;
};

struct Circuit {
  int n = 0;
  std::vector<GateOp> ops;

  void add(const GateMatrix& g, int q);
  void add(const GateMatrix& g, int qa, int qb);
  std::size_t size() const { return ops.size(); }
};

/// Dense statevector over n qubits, amplitudes indexed per the bit ordering
/// convention above. Not thread-safe; confine to one worker at a time.
class State {
 public:
  explicit State(int n);  // |0...0>

  int num_qubits() const { return n_; }
  std::uint64_t dimension() const { return std::uint64_t{1} << n_; }
  std::span<const cdouble> amplitudes() const { return amps_; }
  std::span<cdouble> amplitudes_mut() { return amps_; }

  double norm_squared() const;

 private:
  int n_;
  std::vector<cdouble> amps_;
};

State init_basis_state(int n, std::string_view bits);

/// Applies g to the target qubits in place; everything else is untouched.
/// Unitarity of g is validated unless validate is false (hot loops may skip
/// it after validating at the ensemble level).
void apply_gate(State& state, const GateMatrix& g, std::span<const int> targets,
                bool validate = true);
void apply_gate(State& state, const GateMatrix& g, int q, bool validate = true);
void apply_gate(State& state, const GateMatrix& g, int qa, int qb, bool validate = true);

void apply_circuit(State& state, const Circuit& c, bool validate = true);

/// H on every qubit (X-basis change).
void hadamard_all(State& state);

double output_probability(const State& state, std::string_view bits);

/// All 2^n probabilities, index order = bitstring order.
std::vector<double> full_distribution(const State& state);

/// One computational-basis sample; deterministic given the Rng stream.
std::string sample_outcome(const State& state, Rng& rng);

}  // namespace anticonc

#endif  // ANTICONC_STATE_HPP_
