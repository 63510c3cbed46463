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

#ifndef ANTICONC_QUENCH_HPP_
#define ANTICONC_QUENCH_HPP_

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "anticonc/rng.hpp"
#include "anticonc/state.hpp"

namespace anticonc {

/// m-row, (2m+1)-column square lattice; site [i,j] is 1-based with row-major
/// qubit index (i-1)(2m+1) + (j-1).
struct LatticeSpec {
  int m = 0;
  int rows = 0;
  int cols = 0;
  int n = 0;

  int site_index(int i, int j) const { return (i - 1) * cols + (j - 1); }
  int row_of(int site) const { return site / cols + 1; }
  int col_of(int site) const { return site % cols + 1; }
};

LatticeSpec build_lattice(int m);

enum class SiteRole : std::uint8_t { blue, yellow, pink };

struct SiteRoles {
  std::vector<SiteRole> role;  // indexed by site

  std::vector<int> sites_with(SiteRole r) const;
};

/// Conventions left open by the architecture; both are plumbed through to
/// the CLI. Defaults are the ones under which the uniform-marginal and
/// conditional-equivalence checks pass.
struct QuenchOptions {
  bool flip_coloring_parity = false;  // swap blue/yellow checkerboard parity
  int column_base = 1;                // 1-based or 0-based j in the mod-4 rule
};

/// Pink sites are the even-row boundary-column sites; the rest is a
/// checkerboard with no blue site in columns 1 and 2m+1. Deterministic.
SiteRoles assign_roles(const LatticeSpec& lattice, const QuenchOptions& opt = {});

struct GridEdge {
  int a = 0;  // site indices, a < b
  int b = 0;
};

struct InteractionSublattice {
  std::vector<GridEdge> edges;  // E_I
  std::vector<int> degree;      // deg_I per site
};

/// All nearest-neighbour grid edges of the lattice (horizontal then
/// vertical, row-major).
std::vector<GridEdge> grid_edges(const LatticeSpec& lattice);

/// Keeps a grid edge ([i,j],[k,l]), i<=k, j<=l, unless it is vertical and
/// its upper endpoint [i,j] is blue in a column with j = 0 (mod 4) or
/// yellow in a column with j = 2 (mod 4); column indices per opt.column_base.
InteractionSublattice build_interaction_sublattice(const LatticeSpec& lattice,
                                                   const SiteRoles& roles,
                                                   const QuenchOptions& opt = {});

/// Random input-state parameters: a bit per pink site and k in {0,1,2,3}
/// per yellow site, both ordered by site index.
struct BetaSample {
  std::vector<std::uint8_t> pink_bits;
  std::vector<std::uint8_t> yellow_k;
};

BetaSample sample_beta(const SiteRoles& roles, Rng& rng);

/// log2 of the input-state family size: #pink + 2 * #yellow.
int beta_family_log2_size(const SiteRoles& roles);

struct QuenchInstance {
  LatticeSpec lattice;
  SiteRoles roles;
  InteractionSublattice interactions;
  BetaSample beta;
};

QuenchInstance sample_quench_instance(int m, Rng& rng, const QuenchOptions& opt = {});

/// Product state: pink b -> |b>, blue -> |+>, yellow k -> |0> + e^{ik pi/4}|1>
/// (normalised).
State prepare_input_state(const QuenchInstance& instance);

/// CZ on every interaction edge (order irrelevant, the gates commute).
void evolve(const QuenchInstance& instance, State& state);

/// Per-basis-state phases of e^{-iH} for the quench Hamiltonian
/// H = sum_edges (pi/4) z_a z_b - sum_v (pi/4) deg(v) z_v with z = +-1 read
/// off the bitstring (bit 0 -> +1). Retained as the verification oracle for
/// the CZ evolution path.
std::vector<std::complex<double>> hamiltonian_phases(int n, const std::vector<GridEdge>& edges,
                                                     const std::vector<int>& degree);
std::vector<std::complex<double>> hamiltonian_unitary(const LatticeSpec& lattice,
                                                      const SiteRoles& roles,
                                                      const QuenchOptions& opt = {});

/// Max modulus deviation between two phase vectors after aligning the
/// global phase on the first component of nonzero modulus.
double phase_vector_deviation(const std::vector<std::complex<double>>& a,
                              const std::vector<std::complex<double>>& b);

/// Deviation of the CZ evolution from the Hamiltonian exponential for the
/// given lattice size (both are diagonal; compared up to a global phase).
double evolve_vs_hamiltonian_deviation(int m, const QuenchOptions& opt = {});

/// Output distribution over measurement outcomes x, conditioned on the
/// instance's beta: prepare, evolve, measure every site in the X basis.
/// Exact dense computation; refuses m > 3.
std::vector<double> q_ac_distribution(const QuenchInstance& instance);

/// x_R = bits of the rightmost column (rows top to bottom), x_L = the rest
/// in row-major order.
struct OutcomeSplit {
  std::string x_l;
  std::string x_r;
};

OutcomeSplit split_outcome(const LatticeSpec& lattice, std::string_view x);
std::string recombine_outcome(const LatticeSpec& lattice, const OutcomeSplit& split);

/// Index maps between the full outcome index and the (x_L, x_R) pair.
struct OutcomeIndexer {
  explicit OutcomeIndexer(const LatticeSpec& lattice);

  std::uint64_t xl_of(std::uint64_t x) const;
  std::uint64_t xr_of(std::uint64_t x) const;
  std::uint64_t combine(std::uint64_t xl, std::uint64_t xr) const;

  int n = 0;
  int m = 0;
  std::vector<std::uint64_t> xl_bit;  // per x_L bit: mask in the full index
  std::vector<std::uint64_t> xr_bit;  // per x_R bit: mask in the full index
};

/// Marginal of q_ac(.|beta) over x_R; length 2^(n-m).
std::vector<double> marginal_xL(const QuenchInstance& instance);
std::vector<double> marginal_xL_from(const LatticeSpec& lattice, const std::vector<double>& q);

/// Conditional distribution over x_R given x_L; length 2^m. Throws if the
/// x_L marginal vanishes (that would falsify the uniform-marginal law).
std::vector<double> conditional_xR(const QuenchInstance& instance, std::uint64_t xl_index);
std::vector<double> conditional_xR_from(const LatticeSpec& lattice, const std::vector<double>& q,
                                        std::uint64_t xl_index);

}  // namespace anticonc

#endif  // ANTICONC_QUENCH_HPP_
