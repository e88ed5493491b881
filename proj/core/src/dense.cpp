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

#include "fewcopy/dense.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace fewcopy {

namespace {

void check_qubit(int q, int n) {
  if (q < 0 || q >= n) throw std::invalid_argument("DenseState: qubit out of range");
}

}  // namespace

DenseState::DenseState(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("DenseState: n_qubits out of range");
  }
  amplitudes_.assign(dim(), {0.0, 0.0});
  amplitudes_[0] = {1.0, 0.0};
}

DenseState DenseState::plus_state(int n_qubits) {
  DenseState s(n_qubits);
  const double amp = std::pow(0.5, 0.5 * n_qubits);
  s.amplitudes_.assign(s.dim(), {amp, 0.0});
  return s;
}

void DenseState::apply_cz(int a, int b) {
  check_qubit(a, n_qubits_);
  check_qubit(b, n_qubits_);
  if (a == b) throw std::invalid_argument("apply_cz: identical qubits");
  const std::uint64_t bit_a = std::uint64_t{1} << (n_qubits_ - 1 - a);
  const std::uint64_t bit_b = std::uint64_t{1} << (n_qubits_ - 1 - b);
  for (std::uint64_t i = 0; i < dim(); ++i) {
    if ((i & bit_a) && (i & bit_b)) amplitudes_[i] = -amplitudes_[i];
  }
}

void DenseState::apply_hadamard(int q) {
  check_qubit(q, n_qubits_);
  const std::uint64_t bit = std::uint64_t{1} << (n_qubits_ - 1 - q);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::uint64_t i = 0; i < dim(); ++i) {
    if (i & bit) continue;
    const auto a0 = amplitudes_[i];
    const auto a1 = amplitudes_[i | bit];
    amplitudes_[i] = inv_sqrt2 * (a0 + a1);
    amplitudes_[i | bit] = inv_sqrt2 * (a0 - a1);
  }
}

DenseState DenseState::applied(const PauliString& p) const {
  if (p.n_qubits() != n_qubits_) {
    throw std::invalid_argument("DenseState::applied: dimension mismatch");
  }
  // Map the little-endian symplectic masks onto this basis-index convention.
  std::uint64_t x_mask = 0, z_mask = 0;
  for (int q = 0; q < n_qubits_; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << (n_qubits_ - 1 - q);
    if ((p.x_bits() >> q) & 1) x_mask |= bit;
    if ((p.z_bits() >> q) & 1) z_mask |= bit;
  }
  // P = sign * i^{#Y} * X^x * Z^z with Z acting first.
  const int n_y = std::popcount(p.x_bits() & p.z_bits());
  std::complex<double> prefactor(static_cast<double>(p.sign()), 0.0);
  static const std::complex<double> i_powers[4] = {
      {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  prefactor *= i_powers[n_y & 3];

  DenseState out(n_qubits_);
  out.amplitudes_.assign(dim(), {0.0, 0.0});
  for (std::uint64_t i = 0; i < dim(); ++i) {
    const double z_phase = (std::popcount(i & z_mask) & 1) ? -1.0 : 1.0;
    out.amplitudes_[i ^ x_mask] = prefactor * z_phase * amplitudes_[i];
  }
  return out;
}

std::complex<double> DenseState::inner(const DenseState& other) const {
  if (other.n_qubits_ != n_qubits_) {
    throw std::invalid_argument("DenseState::inner: dimension mismatch");
  }
  std::complex<double> acc{0.0, 0.0};
  for (std::uint64_t i = 0; i < dim(); ++i) {
    acc += std::conj(amplitudes_[i]) * other.amplitudes_[i];
  }
  return acc;
}

double DenseState::expectation(const PauliString& p) const {
  const std::complex<double> val = inner(applied(p));
  if (std::abs(val.imag()) > 1e-9) {
    throw std::domain_error("DenseState::expectation: non-real expectation");
  }
  return val.real();
}

double DenseState::norm() const {
  double acc = 0.0;
  for (const auto& a : amplitudes_) acc += std::norm(a);
  return std::sqrt(acc);
}

}  // namespace fewcopy
