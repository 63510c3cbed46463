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

#include "anticonc/quench.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace anticonc {

namespace {

constexpr int kMaxExactM = 3;  // m = 3 is 21 qubits; m = 4 would be 36

void check_m(int m) {
  if (m < 1) throw std::invalid_argument("lattice width parameter m must be >= 1");
}

void check_exact_m(int m) {
  check_m(m);
  if (m > kMaxExactM) {
    throw std::runtime_error("exact quench computation refuses m > " +
                             std::to_string(kMaxExactM) + " (" +
                             std::to_string(m * (2 * m + 1)) + " qubits)");
  }
}

}  // namespace

LatticeSpec build_lattice(int m) {
  check_m(m);
  LatticeSpec spec;
  spec.m = m;
  spec.rows = m;
  spec.cols = 2 * m + 1;
  spec.n = m * (2 * m + 1);
  return spec;
}

std::vector<int> SiteRoles::sites_with(SiteRole r) const {
  std::vector<int> out;
  for (std::size_t s = 0; s < role.size(); ++s) {
    if (role[s] == r) out.push_back(static_cast<int>(s));
  }
  return out;
}

SiteRoles assign_roles(const LatticeSpec& lattice, const QuenchOptions& opt) {
  SiteRoles roles;
  roles.role.assign(static_cast<std::size_t>(lattice.n), SiteRole::yellow);
  // Checkerboard parity that keeps blue away from the boundary columns:
  // those columns are odd (1 and 2m+1) and their non-pink sites sit on odd
  // rows, so "blue iff (i+j) odd" leaves them yellow.
  const int blue_parity = opt.flip_coloring_parity ? 0 : 1;
  for (int i = 1; i <= lattice.rows; ++i) {
    for (int j = 1; j <= lattice.cols; ++j) {
      const std::size_t s = static_cast<std::size_t>(lattice.site_index(i, j));
      if (i % 2 == 0 && (j == 1 || j == lattice.cols)) {
        roles.role[s] = SiteRole::pink;
      } else {
        roles.role[s] = ((i + j) % 2 == blue_parity) ? SiteRole::blue : SiteRole::yellow;
      }
    }
  }
  return roles;
}

std::vector<GridEdge> grid_edges(const LatticeSpec& lattice) {
  std::vector<GridEdge> edges;
  for (int i = 1; i <= lattice.rows; ++i) {
    for (int j = 1; j < lattice.cols; ++j) {
      edges.push_back({lattice.site_index(i, j), lattice.site_index(i, j + 1)});
    }
  }
  for (int i = 1; i < lattice.rows; ++i) {
    for (int j = 1; j <= lattice.cols; ++j) {
      edges.push_back({lattice.site_index(i, j), lattice.site_index(i + 1, j)});
    }
  }
  return edges;
}

InteractionSublattice build_interaction_sublattice(const LatticeSpec& lattice,
                                                   const SiteRoles& roles,
                                                   const QuenchOptions& opt) {
  InteractionSublattice sub;
  sub.degree.assign(static_cast<std::size_t>(lattice.n), 0);
  for (const GridEdge& e : grid_edges(lattice)) {
    const int i = lattice.row_of(e.a);
    const int j = lattice.col_of(e.a);
    const int k = lattice.row_of(e.b);
    const bool vertical = (i != k);
    const int jmod = (j - 1 + opt.column_base) % 4;  // column index in the chosen base
    const SiteRole upper = roles.role[static_cast<std::size_t>(e.a)];
    bool keep = true;
    if (vertical && jmod == 0 && upper == SiteRole::blue) keep = false;
    if (vertical && jmod == 2 && upper == SiteRole::yellow) keep = false;
    if (keep) {
      sub.edges.push_back(e);
      ++sub.degree[static_cast<std::size_t>(e.a)];
      ++sub.degree[static_cast<std::size_t>(e.b)];
    }
  }
  return sub;
}

BetaSample sample_beta(const SiteRoles& roles, Rng& rng) {
  BetaSample beta;
  for (SiteRole r : roles.role) {
    if (r == SiteRole::pink) {
      beta.pink_bits.push_back(static_cast<std::uint8_t>(rng.next_u64() & 1u));
    } else if (r == SiteRole::yellow) {
      beta.yellow_k.push_back(static_cast<std::uint8_t>(rng.next_below(4)));
    }
  }
  return beta;
}

int beta_family_log2_size(const SiteRoles& roles) {
  int pink = 0, yellow = 0;
  for (SiteRole r : roles.role) {
    if (r == SiteRole::pink) ++pink;
    if (r == SiteRole::yellow) ++yellow;
  }
  return pink + 2 * yellow;
}

QuenchInstance sample_quench_instance(int m, Rng& rng, const QuenchOptions& opt) {
  QuenchInstance inst;
  inst.lattice = build_lattice(m);
  inst.roles = assign_roles(inst.lattice, opt);
  inst.interactions = build_interaction_sublattice(inst.lattice, inst.roles, opt);
  inst.beta = sample_beta(inst.roles, rng);
  return inst;
}

State prepare_input_state(const QuenchInstance& instance) {
  const LatticeSpec& lattice = instance.lattice;
  check_exact_m(lattice.m);
  if (instance.roles.role.size() != static_cast<std::size_t>(lattice.n)) {
    throw std::invalid_argument("instance roles inconsistent with lattice");
  }

  // Per-site single-qubit amplitudes (a0, a1).
  std::vector<std::array<cdouble, 2>> site_amp(static_cast<std::size_t>(lattice.n));
  const double s = 1.0 / std::numbers::sqrt2;
  std::size_t ipink = 0, iyellow = 0;
  for (int site = 0; site < lattice.n; ++site) {
    switch (instance.roles.role[static_cast<std::size_t>(site)]) {
      case SiteRole::pink: {
        if (ipink >= instance.beta.pink_bits.size()) {
          throw std::invalid_argument("beta sample has too few pink bits");
        }
        const bool one = instance.beta.pink_bits[ipink++] != 0;
        site_amp[static_cast<std::size_t>(site)] = {one ? cdouble{0.0} : cdouble{1.0},
                                                    one ? cdouble{1.0} : cdouble{0.0}};
        break;
      }
      case SiteRole::blue:
        site_amp[static_cast<std::size_t>(site)] = {cdouble{s}, cdouble{s}};
        break;
      case SiteRole::yellow: {
        if (iyellow >= instance.beta.yellow_k.size()) {
          throw std::invalid_argument("beta sample has too few yellow parameters");
        }
        const int k = instance.beta.yellow_k[iyellow++];
        site_amp[static_cast<std::size_t>(site)] = {
            cdouble{s}, s * std::polar(1.0, k * std::numbers::pi / 4.0)};
        break;
      }
    }
  }
  if (ipink != instance.beta.pink_bits.size() || iyellow != instance.beta.yellow_k.size()) {
    throw std::invalid_argument("beta sample size inconsistent with roles");
  }

  // Kronecker build, site 0 as the most significant bit.
  State state(lattice.n);
  auto amps = state.amplitudes_mut();
  amps[0] = 1.0;
  std::uint64_t filled = 1;
  for (int site = 0; site < lattice.n; ++site) {
    const auto [a0, a1] = site_amp[static_cast<std::size_t>(site)];
    for (std::uint64_t idx = filled; idx-- > 0;) {
      const cdouble base = amps[idx];
      amps[2 * idx] = base * a0;
      amps[2 * idx + 1] = base * a1;
    }
    filled <<= 1;
  }
  return state;
}

void evolve(const QuenchInstance& instance, State& state) {
  if (state.num_qubits() != instance.lattice.n) {
    throw std::invalid_argument("state size does not match quench lattice");
  }
  const GateMatrix cz = gates::cz();
  for (const GridEdge& e : instance.interactions.edges) {
    apply_gate(state, cz, e.a, e.b, /*validate=*/false);
  }
}

std::vector<cdouble> hamiltonian_phases(int n, const std::vector<GridEdge>& edges,
                                        const std::vector<int>& degree) {
  if (n > 24) throw std::runtime_error("hamiltonian_phases refuses n > 24");
  if (degree.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("degree vector size mismatch");
  }
  const std::uint64_t dim = std::uint64_t{1} << n;
  std::vector<cdouble> phases(dim);
  const double quarter_pi = std::numbers::pi / 4.0;
  for (std::uint64_t x = 0; x < dim; ++x) {
    double h = 0.0;
    for (const GridEdge& e : edges) {
      const double za = ((x >> bit_position(n, e.a)) & 1u) ? -1.0 : 1.0;
      const double zb = ((x >> bit_position(n, e.b)) & 1u) ? -1.0 : 1.0;
      h += quarter_pi * za * zb;
    }
    for (int v = 0; v < n; ++v) {
      const double zv = ((x >> bit_position(n, v)) & 1u) ? -1.0 : 1.0;
      h -= quarter_pi * degree[static_cast<std::size_t>(v)] * zv;
    }
    phases[x] = std::polar(1.0, -h);
  }
  return phases;
}

std::vector<cdouble> hamiltonian_unitary(const LatticeSpec& lattice, const SiteRoles& roles,
                                         const QuenchOptions& opt) {
  check_exact_m(lattice.m);
  const InteractionSublattice sub = build_interaction_sublattice(lattice, roles, opt);
  return hamiltonian_phases(lattice.n, sub.edges, sub.degree);
}

double phase_vector_deviation(const std::vector<cdouble>& a, const std::vector<cdouble>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("phase vector length mismatch");
  cdouble align{1.0};
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i]) > 1e-12 && std::abs(b[i]) > 1e-12) {
      align = (a[i] / std::abs(a[i])) / (b[i] / std::abs(b[i]));
      break;
    }
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - align * b[i]));
  }
  return worst;
}

double evolve_vs_hamiltonian_deviation(int m, const QuenchOptions& opt) {
  check_exact_m(m);
  const LatticeSpec lattice = build_lattice(m);
  const SiteRoles roles = assign_roles(lattice, opt);
  const InteractionSublattice sub = build_interaction_sublattice(lattice, roles, opt);

  // Diagonal induced by the CZ product: start from all-ones and evolve.
  QuenchInstance inst;
  inst.lattice = lattice;
  inst.roles = roles;
  inst.interactions = sub;
  State state(lattice.n);
  {
    auto amps = state.amplitudes_mut();
    const double scale = 1.0;  // unnormalised diagonal probe
    for (std::uint64_t i = 0; i < state.dimension(); ++i) amps[i] = scale;
  }
  evolve(inst, state);
  std::vector<cdouble> cz_diag(state.amplitudes().begin(), state.amplitudes().end());

  const std::vector<cdouble> ham = hamiltonian_phases(lattice.n, sub.edges, sub.degree);
  return phase_vector_deviation(ham, cz_diag);
}

std::vector<double> q_ac_distribution(const QuenchInstance& instance) {
  check_exact_m(instance.lattice.m);
  State state = prepare_input_state(instance);
  evolve(instance, state);
  hadamard_all(state);
  return full_distribution(state);
}

OutcomeSplit split_outcome(const LatticeSpec& lattice, std::string_view x) {
  if (static_cast<int>(x.size()) != lattice.n) {
    throw std::invalid_argument("outcome length does not match lattice size");
  }
  OutcomeSplit split;
  split.x_r.reserve(static_cast<std::size_t>(lattice.m));
  split.x_l.reserve(static_cast<std::size_t>(lattice.n - lattice.m));
  for (int site = 0; site < lattice.n; ++site) {
    if (lattice.col_of(site) == lattice.cols) {
      split.x_r.push_back(x[static_cast<std::size_t>(site)]);
    } else {
      split.x_l.push_back(x[static_cast<std::size_t>(site)]);
    }
  }
  return split;
}

std::string recombine_outcome(const LatticeSpec& lattice, const OutcomeSplit& split) {
  if (static_cast<int>(split.x_r.size()) != lattice.m ||
      static_cast<int>(split.x_l.size()) != lattice.n - lattice.m) {
    throw std::invalid_argument("split sizes do not match lattice");
  }
  std::string x(static_cast<std::size_t>(lattice.n), '0');
  std::size_t il = 0, ir = 0;
  for (int site = 0; site < lattice.n; ++site) {
    x[static_cast<std::size_t>(site)] = lattice.col_of(site) == lattice.cols
                                            ? split.x_r[ir++]
                                            : split.x_l[il++];
  }
  return x;
}

OutcomeIndexer::OutcomeIndexer(const LatticeSpec& lattice) : n(lattice.n), m(lattice.m) {
  for (int site = 0; site < lattice.n; ++site) {
    const std::uint64_t mask = std::uint64_t{1} << bit_position(lattice.n, site);
    if (lattice.col_of(site) == lattice.cols) {
      xr_bit.push_back(mask);
    } else {
      xl_bit.push_back(mask);
    }
  }
}

std::uint64_t OutcomeIndexer::xl_of(std::uint64_t x) const {
  std::uint64_t out = 0;
  for (const std::uint64_t mask : xl_bit) out = (out << 1) | ((x & mask) != 0);
  return out;
}

std::uint64_t OutcomeIndexer::xr_of(std::uint64_t x) const {
  std::uint64_t out = 0;
  for (const std::uint64_t mask : xr_bit) out = (out << 1) | ((x & mask) != 0);
  return out;
}

std::uint64_t OutcomeIndexer::combine(std::uint64_t xl, std::uint64_t xr) const {
  std::uint64_t x = 0;
  for (std::size_t i = 0; i < xl_bit.size(); ++i) {
    if ((xl >> (xl_bit.size() - 1 - i)) & 1u) x |= xl_bit[i];
  }
  for (std::size_t i = 0; i < xr_bit.size(); ++i) {
    if ((xr >> (xr_bit.size() - 1 - i)) & 1u) x |= xr_bit[i];
  }
  return x;
}

std::vector<double> marginal_xL_from(const LatticeSpec& lattice, const std::vector<double>& q) {
  const OutcomeIndexer idx(lattice);
  std::vector<double> marg(std::uint64_t{1} << (lattice.n - lattice.m), 0.0);
  for (std::uint64_t x = 0; x < q.size(); ++x) marg[idx.xl_of(x)] += q[x];
  return marg;
}

std::vector<double> marginal_xL(const QuenchInstance& instance) {
  return marginal_xL_from(instance.lattice, q_ac_distribution(instance));
}

std::vector<double> conditional_xR_from(const LatticeSpec& lattice, const std::vector<double>& q,
                                        std::uint64_t xl_index) {
  const OutcomeIndexer idx(lattice);
  const std::uint64_t dim_r = std::uint64_t{1} << lattice.m;
  std::vector<double> cond(dim_r);
  double marg = 0.0;
  for (std::uint64_t xr = 0; xr < dim_r; ++xr) {
    cond[xr] = q[idx.combine(xl_index, xr)];
    marg += cond[xr];
  }
  if (marg <= 0.0) {
    throw std::runtime_error("vanishing x_L marginal: uniform-marginal law violated");
  }
  for (double& v : cond) v /= marg;
  return cond;
}

std::vector<double> conditional_xR(const QuenchInstance& instance, std::uint64_t xl_index) {
  return conditional_xR_from(instance.lattice, q_ac_distribution(instance), xl_index);
}

}  // namespace anticonc
