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

#include "anticonc/ensembles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace anticonc {

// Calibrated against the n=6 depth scan: |delta2| drops below 0.1 around
// depth 4n, and c = 3.0 puts design_depth(n, 0.1) = ceil(6.9 n) safely past
// it while keeping the linear-in-n shape.
const double kDefaultDesignDepthConstant = 3.0;

void GateSet::validate() const {
  for (const NamedGate& g : elements) {
    if (!g.matrix.is_unitary(1e-10)) {
      throw std::invalid_argument("gate set element '" + g.name + "' is not unitary");
    }
  }
  if (!closed_under_inverse) return;
  for (const NamedGate& g : elements) {
    const GateMatrix inv = g.matrix.adjoint();
    bool found = false;
    for (const NamedGate& other : elements) {
      if (other.matrix.dim() != inv.dim()) continue;
      double worst = 0.0;
      for (int r = 0; r < inv.dim(); ++r)
        for (int c = 0; c < inv.dim(); ++c)
          worst = std::max(worst, std::abs(inv.at(r, c) - other.matrix.at(r, c)));
      if (worst <= 1e-10) {
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::invalid_argument("gate set '" + name + "' flagged closed_under_inverse but '" +
                                  g.name + "' has no inverse element");
    }
  }
}

GateSet gate_set_bis() {
  GateSet g;
  g.name = "bis";
  g.closed_under_inverse = false;
  g.elements.push_back({"CZ", gates::cz()});
  g.elements.push_back({"H", gates::hadamard()});
  g.elements.push_back({"sqrtX", gates::sqrt_x()});
  g.elements.push_back({"sqrtY", gates::sqrt_y()});
  g.elements.push_back({"T", gates::t_gate()});
  return g;
}

void BrickworkSpec::validate() const {
  if (n < 2) throw std::invalid_argument("brickwork needs n >= 2");
  if (depth < 0) throw std::invalid_argument("depth must be >= 0");
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must be in (0, 1)");
  }
  if (source == BrickworkSource::haar_u4 && n % 2 != 0) {
    throw std::invalid_argument("Haar-local brickwork assumes an even qubit count");
  }
  if (source == BrickworkSource::gate_set && set.elements.empty()) {
    throw std::invalid_argument("gate-set brickwork needs a non-empty set");
  }
}

GateMatrix haar_u4_gate(Rng& rng) {
  const ComplexMatrix u = haar_via_qr(4, rng);
  GateMatrix g(4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) g.at(r, c) = u.at(r, c);
  return g;
}

namespace {

// The uniform layer measure over the gate set lifted to U(4): two-qubit
// elements count once, single-qubit elements as all ordered pairs g (x) g'.
struct LiftedGateSet {
  std::vector<const GateMatrix*> two_qubit;
  std::vector<const GateMatrix*> one_qubit;

  explicit LiftedGateSet(const GateSet& set) {
    for (const NamedGate& g : set.elements) {
      (g.matrix.dim() == 4 ? two_qubit : one_qubit).push_back(&g.matrix);
    }
  }

  std::uint64_t size() const {
    return two_qubit.size() + one_qubit.size() * one_qubit.size();
  }

  GateMatrix draw(Rng& rng) const {
    const std::uint64_t idx = rng.next_below(size());
    if (idx < two_qubit.size()) return *two_qubit[idx];
    const std::uint64_t pair = idx - two_qubit.size();
    const std::uint64_t a = pair / one_qubit.size();
    const std::uint64_t b = pair % one_qubit.size();
    return gates::kron(*one_qubit[a], *one_qubit[b]);
  }
};

}  // namespace

Circuit sample_brickwork_circuit(const BrickworkSpec& spec, Rng& rng) {
  spec.validate();
  Circuit circuit;
  circuit.n = spec.n;

  const LiftedGateSet lifted(spec.source == BrickworkSource::gate_set ? spec.set : GateSet{});

  for (int layer = 0; layer < spec.depth; ++layer) {
    const int offset = rng.next_u64() & 1u;  // even or odd pairing, fair coin
    for (int a = offset; a + 1 < spec.n; a += 2) {
      GateMatrix g = spec.source == BrickworkSource::haar_u4 ? haar_u4_gate(rng)
                                                             : lifted.draw(rng);
      circuit.add(g, a, a + 1);
    }
  }
  return circuit;
}

int design_depth(int n, double epsilon, double c) {
  if (c <= 0.0) throw std::invalid_argument("calibration constant must be positive");
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must be in (0, 1)");
  }
  return static_cast<int>(std::ceil(c * n * std::log(1.0 / epsilon)));
}

IqpCircuit IqpCircuit::zero(int m) {
  if (m < 1) throw std::invalid_argument("IQP circuit needs m >= 1");
  IqpCircuit c;
  c.m = m;
  c.single_angles.assign(static_cast<std::size_t>(m), 0);
  c.pair_angles.assign(static_cast<std::size_t>(m) * (m - 1) / 2, 0);
  return c;
}

std::size_t IqpCircuit::pair_index(int i, int j) const {
  // Lexicographic order of pairs (i, j), i < j.
  return static_cast<std::size_t>(i) * m - static_cast<std::size_t>(i) * (i + 1) / 2 +
         static_cast<std::size_t>(j - i - 1);
}

IqpCircuit sample_dense_iqp(int m, Rng& rng) {
  IqpCircuit c = IqpCircuit::zero(m);
  for (auto& a : c.single_angles) a = static_cast<std::uint8_t>(rng.next_below(8));
  for (auto& a : c.pair_angles) a = static_cast<std::uint8_t>(rng.next_below(8));
  return c;
}

void iqp_unitary_apply(const IqpCircuit& c, State& state) {
  if (state.num_qubits() != c.m) {
    throw std::invalid_argument("IQP circuit size does not match state");
  }
  const int m = c.m;
  hadamard_all(state);
  // exp(i a X) = H exp(i a Z) H, so between the Hadamard layers every gate
  // is a Z-diagonal phase: basis state x picks up
  // exp(i sum_i a_i z_i + i sum_{i<j} a_ij z_i z_j), z = +-1.
  auto amps = state.amplitudes_mut();
  const double unit = std::numbers::pi / 8.0;
  for (std::uint64_t x = 0; x < state.dimension(); ++x) {
    double angle = 0.0;
    for (int i = 0; i < m; ++i) {
      const double zi = ((x >> bit_position(m, i)) & 1u) ? -1.0 : 1.0;
      angle += unit * c.single_angles[static_cast<std::size_t>(i)] * zi;
      for (int j = i + 1; j < m; ++j) {
        const double zj = ((x >> bit_position(m, j)) & 1u) ? -1.0 : 1.0;
        angle += unit * c.pair_angles[c.pair_index(i, j)] * zi * zj;
      }
    }
    amps[x] *= std::polar(1.0, angle);
  }
  hadamard_all(state);
}

double iqp_output_probability(const IqpCircuit& c, std::string_view bits) {
  State state(c.m);
  iqp_unitary_apply(c, state);
  return output_probability(state, bits);
}

IqpCircuit compose_iqp(const IqpCircuit& a, const IqpCircuit& b) {
  if (a.m != b.m) throw std::invalid_argument("IQP circuit size mismatch");
  IqpCircuit out = a;
  for (std::size_t i = 0; i < out.single_angles.size(); ++i) {
    out.single_angles[i] = static_cast<std::uint8_t>((a.single_angles[i] + b.single_angles[i]) % 8);
  }
  for (std::size_t i = 0; i < out.pair_angles.size(); ++i) {
    out.pair_angles[i] = static_cast<std::uint8_t>((a.pair_angles[i] + b.pair_angles[i]) % 8);
  }
  return out;
}

IqpCircuit inverse_iqp(const IqpCircuit& a) {
  IqpCircuit out = a;
  for (auto& v : out.single_angles) v = static_cast<std::uint8_t>((8 - v) % 8);
  for (auto& v : out.pair_angles) v = static_cast<std::uint8_t>((8 - v) % 8);
  return out;
}

void DiagonalSpec::validate() const {
  if (n < 1) throw std::invalid_argument("diagonal ensemble needs n >= 1");
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) {
      throw std::invalid_argument("diagonal structure pair out of range");
    }
  }
  for (int s : sites) {
    if (s < 0 || s >= n) throw std::invalid_argument("diagonal structure site out of range");
  }
}

std::vector<std::pair<int, int>> DiagonalSpec::effective_pairs() const {
  if (!pairs.empty()) return pairs;
  std::vector<std::pair<int, int>> all;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) all.emplace_back(i, j);
  return all;
}

std::vector<int> DiagonalSpec::effective_sites() const {
  if (!sites.empty()) return sites;
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
  return all;
}

Circuit sample_diagonal_circuit(const DiagonalSpec& spec, Rng& rng) {
  spec.validate();
  constexpr double kTwoThirdsPi = 2.0 * std::numbers::pi / 3.0;
  Circuit circuit;
  circuit.n = spec.n;
  for (auto [a, b] : spec.effective_pairs()) {
    const double phi = (rng.next_u64() & 1u) ? std::numbers::pi : 0.0;
    circuit.add(gates::cphase(phi), a, b);
  }
  for (int s : spec.effective_sites()) {
    const double phi = static_cast<double>(rng.next_below(3)) * kTwoThirdsPi;
    circuit.add(gates::phase(phi), s);
  }
  return circuit;
}

}  // namespace anticonc
