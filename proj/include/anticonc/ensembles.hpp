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

#ifndef ANTICONC_ENSEMBLES_HPP_
#define ANTICONC_ENSEMBLES_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "anticonc/random_matrix.hpp"
#include "anticonc/rng.hpp"
#include "anticonc/state.hpp"

namespace anticonc {

struct NamedGate {
  std::string name;
  GateMatrix matrix;
};

/// A finite gate set of one- and two-qubit unitaries.
struct GateSet {
  std::string name;
  std::vector<NamedGate> elements;
  bool closed_under_inverse = false;

  /// Checks element unitarity and, when flagged, that each inverse is an
  /// element of the set (entrywise within 1e-10). Throws on violation.
  void validate() const;
};

/// {CZ, H, sqrt(X), sqrt(Y), T}. Not closed under inverse as a literal set
/// (T^-1 and the root inverses are only in the generated group).
GateSet gate_set_bis();

enum class BrickworkSource { haar_u4, gate_set };

/// 1D parallel random circuit family: each layer is a full row of
/// nearest-neighbour two-qubit gates at even or odd offset (fair coin per
/// layer), gates drawn i.i.d. from the layer source.
struct BrickworkSpec {
  int n = 0;
  int depth = 0;
  BrickworkSource source = BrickworkSource::haar_u4;
  GateSet set;            // used when source == gate_set
  double epsilon = 0.1;   // design accuracy target, only consumed by design_depth

  void validate() const;
};

Circuit sample_brickwork_circuit(const BrickworkSpec& spec, Rng& rng);

/// ceil(c * n * ln(1/epsilon)). The default c is calibrated so that the
/// depth returned for epsilon = 0.1 sits at or beyond the empirically
/// converged depth of the Haar-local family (see design_convergence_scan).
extern const double kDefaultDesignDepthConstant;
int design_depth(int n, double epsilon, double c = kDefaultDesignDepthConstant);

/// Dense IQP circuit on m qubits: an X rotation on every site and every
/// pair, with angles that are multiples of pi/8 stored as indices in Z_8.
/// Pair parameters are ordered lexicographically: (0,1), (0,2), ...,
/// (m-2, m-1).
struct IqpCircuit {
  int m = 0;
  std::vector<std::uint8_t> single_angles;  // size m
  std::vector<std::uint8_t> pair_angles;    // size m(m-1)/2

  static IqpCircuit zero(int m);
  std::size_t pair_index(int i, int j) const;  // i < j
};

IqpCircuit sample_dense_iqp(int m, Rng& rng);

/// Applies V = prod_i exp(i a_i pi/8 X_i) prod_{i<j} exp(i a_ij pi/8 X_i X_j)
/// to the state, via H^(x)m . (Z-diagonal phases) . H^(x)m.
void iqp_unitary_apply(const IqpCircuit& c, State& state);

double iqp_output_probability(const IqpCircuit& c, std::string_view bits);

/// Group product: component-wise angle-index addition mod 8.
IqpCircuit compose_iqp(const IqpCircuit& a, const IqpCircuit& b);
IqpCircuit inverse_iqp(const IqpCircuit& a);

/// Discrete diagonal-unitary ensemble: controlled-phase gates with
/// phi in {0, pi} on the structure pairs and single-qubit phase gates with
/// phi in {0, 2pi/3, 4pi/3} on the structure sites; intended input |+>^n.
struct DiagonalSpec {
  int n = 0;
  std::vector<std::pair<int, int>> pairs;  // empty => all pairs
  std::vector<int> sites;                  // empty => all sites

  void validate() const;
  std::vector<std::pair<int, int>> effective_pairs() const;
  std::vector<int> effective_sites() const;
};

Circuit sample_diagonal_circuit(const DiagonalSpec& spec, Rng& rng);

/// GateMatrix view of a sampled Haar-U(4) block.
GateMatrix haar_u4_gate(Rng& rng);

}  // namespace anticonc

#endif  // ANTICONC_ENSEMBLES_HPP_
