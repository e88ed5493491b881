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

#ifndef FEWCOPY_PAULI_HPP
#define FEWCOPY_PAULI_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fewcopy {

/// An n-qubit Pauli operator stored in symplectic form: qubit q carries an X
/// factor iff bit q of x_bits is set, and a Z factor iff bit q of z_bits is
/// set (both set means Y). Hermitian stabilizer elements carry a real sign;
/// multiplication tracks the i-phase internally and refuses to expose a
/// product whose accumulated phase is imaginary.
class PauliString {
 public:
  PauliString(int n_qubits, std::uint64_t x_bits, std::uint64_t z_bits,
              int sign = +1);

  static PauliString identity(int n_qubits);

  /// Parses the textual form "±[IXYZ]{n}", e.g. "+XZII". A missing leading
  /// sign means +. Character k names the Pauli on qubit k.
  static PauliString parse(std::string_view text);

  int n_qubits() const { return n_qubits_; }
  std::uint64_t x_bits() const { return x_bits_; }
  std::uint64_t z_bits() const { return z_bits_; }
  int sign() const { return sign_; }

  /// True iff the operator content is the identity (sign ignored).
  bool is_identity_body() const { return x_bits_ == 0 && z_bits_ == 0; }

  /// Renders "±[IXYZ]{n}" with qubit 0 first.
  std::string str() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  int n_qubits_;
  std::uint64_t x_bits_;
  std::uint64_t z_bits_;
  int sign_;
};

/// Product with the i-phase exposed: a·b = i^phase · body, body sign +1.
struct PhasedPauli {
  PauliString body;
  int phase;  // power of i, mod 4
};

/// Full operator product, valid for any pair (anticommuting included).
PhasedPauli multiply_tracking_phase(const PauliString& a, const PauliString& b);

/// Operator product a·b. Throws std::invalid_argument on dimension mismatch
/// and std::domain_error if the product's phase is not real (the inputs were
/// not commuting Hermitian stabilizers).
PauliString multiply(const PauliString& a, const PauliString& b);

/// True iff the symplectic inner product of (x,z) vectors is even.
bool commutes(const PauliString& a, const PauliString& b);

/// An abelian group of 2^n Pauli strings given by n independent, pairwise
/// commuting generators. Elements are computed on demand from subset masks;
/// full enumeration is available for small n.
class StabilizerGroup {
 public:
  /// Validates commutation and GF(2) independence of the generators and
  /// requires exactly one generator per qubit.
  explicit StabilizerGroup(std::vector<PauliString> generators);

  int n_qubits() const { return n_qubits_; }
  const std::vector<PauliString>& generators() const { return generators_; }

  /// Number of group elements, 2^n.
  std::uint64_t size() const { return std::uint64_t{1} << n_qubits_; }

  /// Product of the generators selected by the bits of mask; mask 0 is the
  /// identity. Throws std::invalid_argument if mask >= 2^n.
  PauliString element(std::uint64_t mask) const;

  /// All 2^n elements in mask order. Limited to n <= 20 to bound memory.
  std::vector<PauliString> enumerate() const;

 private:
  int n_qubits_;
  std::vector<PauliString> generators_;
};

}  // namespace fewcopy

#endif  // FEWCOPY_PAULI_HPP
