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

#include "fewcopy/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace fewcopy {

namespace {

constexpr int kMaxQubits = 63;

std::uint64_t mask_for(int n_qubits) {
  return (std::uint64_t{1} << n_qubits) - 1;
}

// Phase exponent t (power of i) of the single-qubit product P_a P_b = i^t P_c,
// where codes are 2*x + z: 0=I, 1=Z, 2=X, 3=Y and c = a XOR b.
// Cyclic order XY=iZ, YZ=iX, ZX=iY gives t=1; the reversed pairs give t=3.
constexpr int kPhaseTable[4][4] = {
    {0, 0, 0, 0},
    {0, 0, 1, 3},
    {0, 3, 0, 1},
    {0, 1, 3, 0},
};

}  // namespace

PauliString::PauliString(int n_qubits, std::uint64_t x_bits,
                         std::uint64_t z_bits, int sign)
    : n_qubits_(n_qubits), x_bits_(x_bits), z_bits_(z_bits), sign_(sign) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("PauliString: n_qubits out of range");
  }
  if ((x_bits & ~mask_for(n_qubits)) != 0 || (z_bits & ~mask_for(n_qubits)) != 0) {
    throw std::invalid_argument("PauliString: bits beyond n_qubits");
  }
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("PauliString: sign must be +1 or -1");
  }
}

PauliString PauliString::identity(int n_qubits) {
  return PauliString(n_qubits, 0, 0, +1);
}

PauliString PauliString::parse(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("PauliString::parse: empty string");
  }
  int sign = +1;
  if (text.front() == '+' || text.front() == '-') {
    sign = text.front() == '-' ? -1 : +1;
    text.remove_prefix(1);
  }
  if (text.empty() || text.size() > kMaxQubits) {
    throw std::invalid_argument("PauliString::parse: bad length");
  }
  std::uint64_t x = 0, z = 0;
  for (std::size_t q = 0; q < text.size(); ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (text[q]) {
      case 'I': break;
      case 'X': x |= bit; break;
      case 'Z': z |= bit; break;
      case 'Y': x |= bit; z |= bit; break;
      default:
        throw std::invalid_argument(
            "PauliString::parse: invalid character '" +
            std::string(1, text[q]) + "'");
    }
  }
  return PauliString(static_cast<int>(text.size()), x, z, sign);
}

std::string PauliString::str() const {
  std::string out;
  out.reserve(static_cast<std::size_t>(n_qubits_) + 1);
  out.push_back(sign_ < 0 ? '-' : '+');
  for (int q = 0; q < n_qubits_; ++q) {
    const bool x = (x_bits_ >> q) & 1;
    const bool z = (z_bits_ >> q) & 1;
    out.push_back(x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I'));
  }
  return out;
}

PhasedPauli multiply_tracking_phase(const PauliString& a,
                                    const PauliString& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("multiply: dimension mismatch");
  }
  int phase = 0;  // power of i, mod 4
  if (a.sign() < 0) phase += 2;
  if (b.sign() < 0) phase += 2;
  for (int q = 0; q < a.n_qubits(); ++q) {
    const int code_a = static_cast<int>(((a.x_bits() >> q) & 1) * 2 +
                                        ((a.z_bits() >> q) & 1));
    const int code_b = static_cast<int>(((b.x_bits() >> q) & 1) * 2 +
                                        ((b.z_bits() >> q) & 1));
    phase += kPhaseTable[code_a][code_b];
  }
  return PhasedPauli{PauliString(a.n_qubits(), a.x_bits() ^ b.x_bits(),
                                 a.z_bits() ^ b.z_bits(), +1),
                     phase & 3};
}

PauliString multiply(const PauliString& a, const PauliString& b) {
  const PhasedPauli p = multiply_tracking_phase(a, b);
  if (p.phase & 1) {
    throw std::domain_error(
        "multiply: product has imaginary phase (operands do not commute)");
  }
  return PauliString(p.body.n_qubits(), p.body.x_bits(), p.body.z_bits(),
                     p.phase == 2 ? -1 : +1);
}

bool commutes(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("commutes: dimension mismatch");
  }
  const int parity = (std::popcount(a.x_bits() & b.z_bits()) +
                      std::popcount(a.z_bits() & b.x_bits())) & 1;
  return parity == 0;
}

StabilizerGroup::StabilizerGroup(std::vector<PauliString> generators)
    : generators_(std::move(generators)) {
  if (generators_.empty()) {
    throw std::invalid_argument("StabilizerGroup: no generators");
  }
  n_qubits_ = generators_[0].n_qubits();
  if (static_cast<int>(generators_.size()) != n_qubits_) {
    throw std::invalid_argument(
        "StabilizerGroup: expected one generator per qubit");
  }
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].n_qubits() != n_qubits_) {
      throw std::invalid_argument("StabilizerGroup: mixed qubit counts");
    }
    for (std::size_t j = i + 1; j < generators_.size(); ++j) {
      if (!commutes(generators_[i], generators_[j])) {
        throw std::invalid_argument(
            "StabilizerGroup: generators do not all commute");
      }
    }
  }
  // Independence over GF(2): the 2n-bit symplectic rows must have full rank.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> rows;
  rows.reserve(generators_.size());
  for (const auto& g : generators_) rows.emplace_back(g.x_bits(), g.z_bits());
  int rank = 0;
  for (int col = 0; col < 2 * n_qubits_ && rank < static_cast<int>(rows.size());
       ++col) {
    auto bit_of = [&](const std::pair<std::uint64_t, std::uint64_t>& r) {
      return col < n_qubits_ ? (r.first >> col) & 1
                             : (r.second >> (col - n_qubits_)) & 1;
    };
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (bit_of(rows[r])) { pivot = r; break; }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r != rank && bit_of(rows[r])) {
        rows[r].first ^= rows[rank].first;
        rows[r].second ^= rows[rank].second;
      }
    }
    ++rank;
  }
  if (rank != static_cast<int>(rows.size())) {
    throw std::invalid_argument("StabilizerGroup: generators are dependent");
  }
}

PauliString StabilizerGroup::element(std::uint64_t mask) const {
  if (mask >= size()) {
    throw std::invalid_argument("StabilizerGroup::element: mask out of range");
  }
  PauliString out = PauliString::identity(n_qubits_);
  for (int k = 0; k < n_qubits_; ++k) {
    if ((mask >> k) & 1) out = multiply(out, generators_[k]);
  }
  return out;
}

std::vector<PauliString> StabilizerGroup::enumerate() const {
  if (n_qubits_ > 20) {
    throw std::invalid_argument(
        "StabilizerGroup::enumerate: n > 20, use element(mask) instead");
  }
  std::vector<PauliString> out;
  out.reserve(size());
  for (std::uint64_t mask = 0; mask < size(); ++mask) {
    out.push_back(element(mask));
  }
  return out;
}

}  // namespace fewcopy
