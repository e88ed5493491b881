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

#include "fewcopy/baseline.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "fewcopy/detector.hpp"
#include "test_helpers.hpp"

using namespace fewcopy;
namespace ft = fewcopy::testing;

TEST_CASE("normal quantile conventions") {
  CHECK(normal_quantile_two_sided(0.68) == 1.0);
  CHECK(normal_quantile_two_sided(0.95) == 1.95996);
  // Other levels go through the inverse CDF.
  CHECK(normal_quantile_two_sided(0.99) == doctest::Approx(2.5758).epsilon(1e-4));
  CHECK_THROWS_AS(normal_quantile_two_sided(0.0), std::invalid_argument);
  CHECK_THROWS_AS(normal_quantile_two_sided(1.0), std::invalid_argument);
}

TEST_CASE("shot counts at the reference accuracy and confidence") {
  CHECK(shots_for_accuracy(0.9, 0.02, 0.95) == 1825);
  CHECK(shots_for_accuracy(0.5, 0.02, 0.95) == 7203);
  CHECK(shots_for_accuracy(0.5, 0.02, 0.68) == 1875);
  CHECK(shots_for_accuracy(1.0, 0.02, 0.95) == 1);
  CHECK(shots_for_accuracy(-1.0, 0.02, 0.95) == 1);
  CHECK_THROWS_AS(shots_for_accuracy(0.5, 0.0, 0.95), std::invalid_argument);
  CHECK_THROWS_AS(shots_for_accuracy(1.5, 0.02, 0.95), std::invalid_argument);
}

TEST_CASE("shots_for_accuracy monotonicity (property)") {
  // Nonincreasing in epsilon.
  std::int64_t prev = shots_for_accuracy(0.7, 0.005, 0.95);
  for (double eps = 0.01; eps <= 0.1; eps += 0.005) {
    const auto n = shots_for_accuracy(0.7, eps, 0.95);
    CHECK(n <= prev);
    prev = n;
  }
  // Nondecreasing in confidence level.
  CHECK(shots_for_accuracy(0.7, 0.02, 0.95) >=
        shots_for_accuracy(0.7, 0.02, 0.68));
  CHECK(shots_for_accuracy(0.7, 0.02, 0.99) >=
        shots_for_accuracy(0.7, 0.02, 0.95));
  // Nondecreasing in variance.
  CHECK(shots_for_accuracy(0.1, 0.02, 0.95) >=
        shots_for_accuracy(0.9, 0.02, 0.95));
}

TEST_CASE("coverage of the simulated estimation") {
  const auto r1 = simulate_expectation_estimation(0.1, 0.02, 0.95, 2000, 17);
  CHECK(r1.shots_per_trial == 1825);
  CHECK(r1.coverage >= 0.93);
  CHECK(r1.coverage <= 0.97);

  const auto r0 = simulate_expectation_estimation(0.0, 0.02, 0.95, 200, 17);
  CHECK(r0.coverage == 1.0);

  const auto r68 = simulate_expectation_estimation(0.5, 0.02, 0.68, 2000, 17);
  CHECK(r68.shots_per_trial == 1875);
  CHECK(r68.coverage >= 0.65);
  CHECK(r68.coverage <= 0.71);
}

TEST_CASE("coverage sits in the 3-sigma binomial band across noise levels") {
  const std::int64_t trials = 2000;
  for (double lambda : {0.1, 0.3, 0.5}) {
    const auto r =
        simulate_expectation_estimation(lambda, 0.02, 0.95, trials, 1234);
    const double band = 3.0 * std::sqrt(0.95 * 0.05 / trials);
    CHECK(std::abs(r.coverage - 0.95) < band + 0.005);  // approx-normal slack
  }
}

TEST_CASE("witness total cost") {
  const auto est = witness_total_cost(4, 0.1, 0.02, 0.95);
  CHECK(est.n_terms == 16);
  CHECK(est.shots_per_term == 1825);
  CHECK(est.total_shots == 29200);

  const auto single = witness_total_cost(4, 0.1, 0.02, 0.95, 1);
  CHECK(single.total_shots == shots_for_accuracy(0.9, 0.02, 0.95));
  CHECK_THROWS_AS(witness_total_cost(4, 0.1, 0.02, 0.95, -1),
                  std::invalid_argument);
}

TEST_CASE("witness cost dwarfs the few-copy budget") {
  // The central comparative claim at n = 4, across the tolerated noise range.
  for (double lambda = 0.05; lambda <= lambda_limit(4) * 0.9; lambda += 0.05) {
    const auto est = witness_total_cost(4, lambda, 0.02, 0.95);
    const double delta = expected_p_e(lambda, 4) - 0.75;
    const double n_max = max_copies(0.99, 0.75, delta);
    CHECK(static_cast<double>(est.total_shots) / n_max >= 10.0);
  }
}

TEST_CASE("witness noise limit from statevector traces") {
  CHECK(witness_lambda_limit(build_linear_cluster(4)) ==
        doctest::Approx(8.0 / 15.0).epsilon(1e-12));
  CHECK(witness_lambda_limit(build_linear_cluster(2)) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(witness_lambda_limit(build_c4_state()) ==
        doctest::Approx(8.0 / 15.0).epsilon(1e-12));
}

TEST_CASE("dense and analytic noise limits agree on random graphs") {
  ft::Rng rng(404);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_u64() % 7);
    const auto g = ft::random_connected_graph(rng, n);
    CHECK(std::abs(witness_lambda_limit(g) - lambda_limit(n)) < 1e-10);
  }
}
