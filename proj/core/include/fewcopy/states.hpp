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

#ifndef FEWCOPY_STATES_HPP
#define FEWCOPY_STATES_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fewcopy/dense.hpp"
#include "fewcopy/pauli.hpp"

namespace fewcopy {

/// Per-qubit local Clifford tag applied on top of the plain graph-state
/// construction. Hadamard is enough to express cluster-equivalent states
/// such as the four-qubit state built by build_c4_state().
enum class LocalClifford : std::uint8_t { Identity, Hadamard };

/// A graph state: adjacency plus the derived stabilizer generators. The
/// generator for vertex a is X_a * prod_{b in N(a)} Z_b, conjugated by the
/// declared local Cliffords.
class GraphState {
 public:
  GraphState(int n_qubits, std::vector<std::pair<int, int>> edges,
             std::vector<LocalClifford> local_cliffords);

  int n_qubits() const { return n_qubits_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<LocalClifford>& local_cliffords() const {
    return local_cliffords_;
  }
  const StabilizerGroup& generators() const { return generators_; }

 private:
  int n_qubits_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<LocalClifford> local_cliffords_;
  StabilizerGroup generators_;
};

/// Path graph 0-1-2-...-(n-1). Requires n >= 2.
GraphState build_linear_cluster(int n);

/// The four-qubit state (|0000>+|0011>+|1100>-|1111>)/2: the linear
/// 4-cluster with Hadamards on the first and last qubit.
GraphState build_c4_state();

/// Graph state over an arbitrary edge list. Endpoints must lie in [0, n);
/// self-loops are rejected; duplicate edges collapse to one.
GraphState build_graph_state(std::vector<std::pair<int, int>> edges, int n);

/// Parses a plain-text edge list: one "u v" pair per line, 0-indexed,
/// '#' comments and blank lines allowed. Throws with the offending line
/// number on malformed input. n is inferred as max endpoint + 1 unless a
/// larger value is given.
GraphState parse_edge_list(std::istream& in, int n_qubits_hint = 0);

/// Resolves a graph spec: "linear:N", "c4", or a path to an edge-list file.
GraphState parse_graph_spec(const std::string& spec);

/// White-noise mixture lambda * I/2^n + (1-lambda) |C><C|.
struct NoisyState {
  NoisyState(GraphState target_state, double noise_lambda);
  GraphState target;
  double lambda;
};

/// The observable set M derived from a stabilizer witness: one binary
/// observable M_i = (I + S_i)/2 per group element, with sampling weights and
/// the separable bound p_s.
class ObservableSet {
 public:
  /// Uniform weights 1/2^n.
  ObservableSet(StabilizerGroup source_group, double separable_bound);

  /// Explicit weights; must have length 2^n and sum to 1 within 1e-12.
  ObservableSet(StabilizerGroup source_group, double separable_bound,
                std::vector<double> weights);

  int n_qubits() const { return source_group_.n_qubits(); }
  std::uint64_t n_observables() const { return source_group_.size(); }
  const StabilizerGroup& source_group() const { return source_group_; }
  double separable_bound() const { return separable_bound_; }
  bool uniform_weights() const { return weights_.empty(); }
  double weight(std::uint64_t mask) const;
  const std::vector<double>& explicit_weights() const { return weights_; }

 private:
  StabilizerGroup source_group_;
  double separable_bound_;
  std::vector<double> weights_;  // empty means uniform
};

/// Separable bound of the stabilizer-projector witness construction.
inline constexpr double kStabilizerSeparableBound = 0.75;

/// Uniform observable set over the 2^n stabilizers with p_s = 3/4.
ObservableSet observable_set_from_witness(const GraphState& g);

/// Analytic Tr[M_i rho] for the white-noise model: 1 for the identity
/// element (mask 0), 1 - lambda/2 otherwise.
double outcome_probability(const NoisyState& s, std::uint64_t obs_mask);

/// Statevector cross-check of outcome_probability, n <= 12:
/// (1 + lambda Tr[S_i]/2^n + (1-lambda) <C|S_i|C>) / 2.
double outcome_probability_oracle(const NoisyState& s, std::uint64_t obs_mask);

/// Same computation against a precomputed statevector, for hot loops.
double outcome_probability_oracle(const DenseState& target,
                                  const StabilizerGroup& group, double lambda,
                                  std::uint64_t obs_mask);

/// Expected S/N under uniform sampling: 1 + lambda (1 - 2^n) / (2 * 2^n).
double expected_p_e(double lambda, int n);

/// Largest noise fraction with positive expected deviation:
/// 2^n / (2 (2^n - 1)).
double lambda_limit(int n);

/// Dense statevector of a graph state, n <= 12.
DenseState dense_statevector(const GraphState& g);

}  // namespace fewcopy

#endif  // FEWCOPY_STATES_HPP
