// Copyright 2026 The fewcopy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fewcopy/states.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fewcopy {

namespace {

// H P H on one qubit: swaps the X and Z bits; a Y on that qubit flips sign.
PauliString conjugate_hadamard(const PauliString& p, int qubit) {
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  const bool x = p.x_bits() & bit;
  const bool z = p.z_bits() & bit;
  std::uint64_t new_x = p.x_bits();
  std::uint64_t new_z = p.z_bits();
  int sign = p.sign();
  if (x != z) {
    new_x ^= bit;
    new_z ^= bit;
  } else if (x && z) {
    sign = -sign;
  }
  return PauliString(p.n_qubits(), new_x, new_z, sign);
}

std::vector<std::pair<int, int>> normalize_edges(
    std::vector<std::pair<int, int>> edges, int n) {
  std::set<std::pair<int, int>> seen;
  std::vector<std::pair<int, int>> out;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("graph edge endpoint out of range");
    }
    if (u == v) {
      throw std::invalid_argument("graph edge is a self-loop");
    }
    if (u > v) std::swap(u, v);
    if (seen.insert({u, v}).second) out.emplace_back(u, v);
  }
  return out;
}

StabilizerGroup derive_generators(int n,
                                  const std::vector<std::pair<int, int>>& edges,
                                  const std::vector<LocalClifford>& tags) {
  std::vector<std::uint64_t> neighbor_mask(n, 0);
  for (const auto& [u, v] : edges) {
    neighbor_mask[u] |= std::uint64_t{1} << v;
    neighbor_mask[v] |= std::uint64_t{1} << u;
  }
  std::vector<PauliString> gens;
  gens.reserve(n);
  for (int a = 0; a < n; ++a) {
    PauliString g(n, std::uint64_t{1} << a, neighbor_mask[a], +1);
    for (int q = 0; q < n; ++q) {
      if (tags[q] == LocalClifford::Hadamard) g = conjugate_hadamard(g, q);
    }
    gens.push_back(g);
  }
  return StabilizerGroup(std::move(gens));
}

}  // namespace

GraphState::GraphState(int n_qubits, std::vector<std::pair<int, int>> edges,
                       std::vector<LocalClifford> local_cliffords)
    : n_qubits_(n_qubits),
      edges_(normalize_edges(std::move(edges), n_qubits)),
      local_cliffords_(std::move(local_cliffords)),
      generators_(derive_generators(n_qubits_, edges_, local_cliffords_)) {
  if (static_cast<int>(local_cliffords_.size()) != n_qubits_) {
    throw std::invalid_argument("GraphState: one local Clifford tag per qubit");
  }
}

GraphState build_linear_cluster(int n) {
  if (n < 2) throw std::invalid_argument("build_linear_cluster: n must be >= 2");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return GraphState(n, std::move(edges),
                    std::vector<LocalClifford>(n, LocalClifford::Identity));
}

GraphState build_c4_state() {
  std::vector<LocalClifford> tags(4, LocalClifford::Identity);
  tags[0] = LocalClifford::Hadamard;
  tags[3] = LocalClifford::Hadamard;
  return GraphState(4, {{0, 1}, {1, 2}, {2, 3}}, std::move(tags));
}

GraphState build_graph_state(std::vector<std::pair<int, int>> edges, int n) {
  if (n < 1) throw std::invalid_argument("build_graph_state: n must be >= 1");
  return GraphState(n, std::move(edges),
                    std::vector<LocalClifford>(n, LocalClifford::Identity));
}

GraphState parse_edge_list(std::istream& in, int n_qubits_hint) {
  std::vector<std::pair<int, int>> edges;
  int max_vertex = -1;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    int u, v;
    if (!(fields >> u)) continue;  // blank or comment-only line
    std::string trailing;
    if (!(fields >> v) || (fields >> trailing)) {
      throw std::invalid_argument("edge list parse error at line " +
                                  std::to_string(line_number) +
                                  ": expected \"u v\"");
    }
    if (u < 0 || v < 0) {
      throw std::invalid_argument("edge list parse error at line " +
                                  std::to_string(line_number) +
                                  ": negative vertex index");
    }
    edges.emplace_back(u, v);
    max_vertex = std::max({max_vertex, u, v});
  }
  const int n = std::max(n_qubits_hint, max_vertex + 1);
  if (n < 1) {
    throw std::invalid_argument("edge list parse error: no vertices");
  }
  return build_graph_state(std::move(edges), n);
}

GraphState parse_graph_spec(const std::string& spec) {
  if (spec == "c4") return build_c4_state();
  if (spec.rfind("linear:", 0) == 0) {
    const std::string arg = spec.substr(7);
    std::size_t used = 0;
    int n = 0;
    try {
      n = std::stoi(arg, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad graph spec '" + spec + "'");
    }
    if (used != arg.size()) {
      throw std::invalid_argument("bad graph spec '" + spec + "'");
    }
    return build_linear_cluster(n);
  }
  std::ifstream file(spec);
  if (!file) {
    throw std::invalid_argument("cannot open graph file '" + spec + "'");
  }
  return parse_edge_list(file);
}

NoisyState::NoisyState(GraphState target_state, double noise_lambda)
    : target(std::move(target_state)), lambda(noise_lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw std::invalid_argument("NoisyState: lambda must lie in [0, 1]");
  }
}

ObservableSet::ObservableSet(StabilizerGroup source_group,
                             double separable_bound)
    : source_group_(std::move(source_group)),
      separable_bound_(separable_bound) {
  if (!(separable_bound > 0.0 && separable_bound < 1.0)) {
    throw std::invalid_argument("ObservableSet: p_s must lie in (0, 1)");
  }
}

ObservableSet::ObservableSet(StabilizerGroup source_group,
                             double separable_bound,
                             std::vector<double> weights)
    : ObservableSet(std::move(source_group), separable_bound) {
  if (weights.size() != n_observables()) {
    throw std::invalid_argument("ObservableSet: weights must have length 2^n");
  }
  double sum = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw std::invalid_argument("ObservableSet: negative weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("ObservableSet: weights must sum to 1");
  }
  weights_ = std::move(weights);
}

double ObservableSet::weight(std::uint64_t mask) const {
  if (mask >= n_observables()) {
    throw std::invalid_argument("ObservableSet::weight: mask out of range");
  }
  if (weights_.empty()) {
    return 1.0 / static_cast<double>(n_observables());
  }
  return weights_[mask];
}

ObservableSet observable_set_from_witness(const GraphState& g) {
  return ObservableSet(g.generators(), kStabilizerSeparableBound);
}

double outcome_probability(const NoisyState& s, std::uint64_t obs_mask) {
  if (obs_mask >= s.target.generators().size()) {
    throw std::invalid_argument("outcome_probability: mask out of range");
  }
  if (obs_mask == 0) return 1.0;
  return 1.0 - s.lambda / 2.0;
}

double outcome_probability_oracle(const DenseState& target,
                                  const StabilizerGroup& group, double lambda,
                                  std::uint64_t obs_mask) {
  const PauliString s_i = group.element(obs_mask);
  // Tr[S_i]/2^n vanishes unless the string body is the identity.
  const double tr_term = s_i.is_identity_body() ? s_i.sign() : 0.0;
  const double target_term = target.expectation(s_i);
  return (1.0 + lambda * tr_term + (1.0 - lambda) * target_term) / 2.0;
}

double outcome_probability_oracle(const NoisyState& s, std::uint64_t obs_mask) {
  if (s.target.n_qubits() > DenseState::kMaxQubits) {
    throw std::invalid_argument("outcome_probability_oracle: n too large");
  }
  const DenseState psi = dense_statevector(s.target);
  return outcome_probability_oracle(psi, s.target.generators(), s.lambda,
                                    obs_mask);
}

double expected_p_e(double lambda, int n) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw std::invalid_argument("expected_p_e: lambda must lie in [0, 1]");
  }
  if (n < 1 || n > 62) throw std::invalid_argument("expected_p_e: bad n");
  const double pow2n = std::ldexp(1.0, n);
  return 1.0 + lambda * (1.0 - pow2n) / (2.0 * pow2n);
}

double lambda_limit(int n) {
  if (n < 1 || n > 62) throw std::invalid_argument("lambda_limit: bad n");
  const double pow2n = std::ldexp(1.0, n);
  return 0.5 + 0.5 / (pow2n - 1.0);
}

DenseState dense_statevector(const GraphState& g) {
  if (g.n_qubits() > DenseState::kMaxQubits) {
    throw std::invalid_argument("dense_statevector: n too large");
  }
  DenseState psi = DenseState::plus_state(g.n_qubits());
  for (const auto& [u, v] : g.edges()) psi.apply_cz(u, v);
  for (int q = 0; q < g.n_qubits(); ++q) {
    if (g.local_cliffords()[q] == LocalClifford::Hadamard) {
      psi.apply_hadamard(q);
    }
  }
  return psi;
}

}  // namespace fewcopy
