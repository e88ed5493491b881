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

#ifndef FEWCOPY_DENSE_HPP
#define FEWCOPY_DENSE_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "fewcopy/pauli.hpp"

namespace fewcopy {

/// Small dense statevector used as an independent check of the analytic
/// paths. Basis index convention: qubit q maps to bit (n-1-q), so the index
/// of |b_0 b_1 ... b_{n-1}> reads like the ket string (|0011> has index 3).
class DenseState {
 public:
  static constexpr int kMaxQubits = 12;

  /// |0...0>.
  explicit DenseState(int n_qubits);

  /// |+>^n, the starting point of graph-state construction.
  static DenseState plus_state(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  std::uint64_t dim() const { return std::uint64_t{1} << n_qubits_; }
  std::complex<double> amplitude(std::uint64_t basis_index) const {
    return amplitudes_.at(basis_index);
  }
  const std::vector<std::complex<double>>& amplitudes() const {
    return amplitudes_;
  }

  void apply_cz(int a, int b);
  void apply_hadamard(int q);

  /// Returns p |psi> as a new state (phases and sign included).
  DenseState applied(const PauliString& p) const;

  std::complex<double> inner(const DenseState& other) const;

  /// <psi| P |psi>; asserts the imaginary part is negligible.
  double expectation(const PauliString& p) const;

  double norm() const;

 private:
  int n_qubits_;
  std::vector<std::complex<double>> amplitudes_;
};

}  // namespace fewcopy

#endif  // FEWCOPY_DENSE_HPP
