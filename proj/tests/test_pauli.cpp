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

#include <set>
#include <stdexcept>

#include "doctest.h"
#include "fewcopy/states.hpp"
#include "test_helpers.hpp"

using namespace fewcopy;
namespace ft = fewcopy::testing;

TEST_CASE("parse and render round-trip") {
  for (const char* text : {"+XZII", "-YYYY", "+IIII", "+XZ", "-Y"}) {
    CHECK(PauliString::parse(text).str() == text);
  }
  CHECK(PauliString::parse("XZ").str() == "+XZ");  // implicit +
  CHECK_THROWS_AS(PauliString::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::parse("+AB"), std::invalid_argument);
}

TEST_CASE("identity string") {
  const auto id = PauliString::identity(3);
  CHECK(id.x_bits() == 0);
  CHECK(id.z_bits() == 0);
  CHECK(id.sign() == +1);
  CHECK(id.str() == "+III");
}

TEST_CASE("multiply: disjoint supports") {
  const auto a = PauliString::parse("XI");
  const auto b = PauliString::parse("IX");
  CHECK(multiply(a, b).str() == "+XX");
}

TEST_CASE("multiply: involution") {
  const auto x = PauliString::parse("X");
  CHECK(multiply(x, x) == PauliString::identity(1));
}

TEST_CASE("multiply: dimension mismatch") {
  CHECK_THROWS_AS(multiply(PauliString::parse("X"), PauliString::parse("XX")),
                  std::invalid_argument);
  CHECK_THROWS_AS(commutes(PauliString::parse("X"), PauliString::parse("XX")),
                  std::invalid_argument);
}

TEST_CASE("ZX product carries an i-phase, checked against 2x2 matrices") {
  const auto z = PauliString::parse("Z");
  const auto x = PauliString::parse("X");
  // The real-sign product refuses the anticommuting pair...
  CHECK_THROWS_AS(multiply(z, x), std::domain_error);
  // ...while the phased product yields iY.
  const auto zx = multiply_tracking_phase(z, x);
  CHECK(zx.body.str() == "+Y");
  CHECK(zx.phase == 1);
  CHECK(ft::approx_equal(ft::pauli_matrix(zx.body, zx.phase),
                         ft::matmul(ft::pauli_matrix(z), ft::pauli_matrix(x))));
  // (ZX)(ZX) = i^2 YY = -I.
  const auto zxzx = multiply_tracking_phase(zx.body, zx.body);
  CHECK(zxzx.body == PauliString::identity(1));
  CHECK((zxzx.phase + zx.phase + zx.phase) % 4 == 2);
}

TEST_CASE("commutes") {
  CHECK_FALSE(commutes(PauliString::parse("XI"), PauliString::parse("ZI")));
  ft::Rng rng(11);
  for (int k = 0; k < 50; ++k) {
    const auto a = ft::random_pauli(rng, 5);
    CHECK(commutes(a, a));
  }
}

TEST_CASE("all generator pairs of generated graph states commute") {
  ft::Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_u64() % 7);
    const auto g = ft::random_connected_graph(rng, n);
    const auto& gens = g.generators().generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        CHECK(commutes(gens[i], gens[j]));
      }
    }
  }
}

TEST_CASE("associativity of the phased product (property)") {
  ft::Rng rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.next_u64() % 6);
    const auto a = ft::random_pauli(rng, n);
    const auto b = ft::random_pauli(rng, n);
    const auto c = ft::random_pauli(rng, n);
    const auto ab = multiply_tracking_phase(a, b);
    const auto bc = multiply_tracking_phase(b, c);
    const auto left = multiply_tracking_phase(ab.body, c);
    const auto right = multiply_tracking_phase(a, bc.body);
    CHECK(left.body == right.body);
    CHECK((left.phase + ab.phase) % 4 == (right.phase + bc.phase) % 4);
  }
}

TEST_CASE("dense-matrix homomorphism for random pairs (property)") {
  ft::Rng rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng.next_u64() % 6);
    const auto a = ft::random_pauli(rng, n);
    const auto b = ft::random_pauli(rng, n);
    const auto prod = multiply_tracking_phase(a, b);
    CHECK(ft::approx_equal(ft::pauli_matrix(prod.body, prod.phase),
                           ft::matmul(ft::pauli_matrix(a), ft::pauli_matrix(b))));
  }
}

TEST_CASE("StabilizerGroup validation") {
  // Anticommuting pair.
  CHECK_THROWS_AS(StabilizerGroup({PauliString::parse("XI"),
                                   PauliString::parse("ZI")}),
                  std::invalid_argument);
  // Dependent set: XX, ZZ, and their product -YY.
  CHECK_THROWS_AS(
      StabilizerGroup({PauliString::parse("XXI"), PauliString::parse("ZZI"),
                       PauliString::parse("-YYI")}),
      std::invalid_argument);
  CHECK_THROWS_AS(StabilizerGroup({}), std::invalid_argument);
}

TEST_CASE("group_element basics") {
  const auto g = build_linear_cluster(4).generators();
  CHECK(g.element(0) == PauliString::identity(4));
  for (int k = 0; k < 4; ++k) {
    CHECK(g.element(std::uint64_t{1} << k) == g.generators()[k]);
  }
  CHECK_THROWS_AS(g.element(16), std::invalid_argument);
}

TEST_CASE("mask 0b0011 gives K1*K2 and fixes the cluster statevector") {
  const auto cluster = build_linear_cluster(4);
  const auto product = cluster.generators().element(0b0011);
  CHECK(product == multiply(cluster.generators().generators()[0],
                            cluster.generators().generators()[1]));
  const auto psi = dense_statevector(cluster);
  const auto fixed = psi.applied(product);
  CHECK(std::abs(psi.inner(fixed) - std::complex<double>{1.0, 0.0}) < 1e-12);
}

TEST_CASE("every group element squares to identity with sign +1") {
  ft::Rng rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_u64() % 5);
    const auto group = ft::random_connected_graph(rng, n).generators();
    for (std::uint64_t mask = 0; mask < group.size(); ++mask) {
      const auto e = group.element(mask);
      CHECK(multiply(e, e) == PauliString::identity(n));
    }
  }
}

TEST_CASE("group elements are distinct across all masks (injectivity)") {
  const auto group = build_linear_cluster(5).generators();
  std::set<std::string> seen;
  for (const auto& e : group.enumerate()) seen.insert(e.str());
  CHECK(seen.size() == 32);
}
