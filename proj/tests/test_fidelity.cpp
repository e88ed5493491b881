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

#include "fewcopy/fidelity.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "test_helpers.hpp"

using namespace fewcopy;

namespace {

ConfidenceTrace run(double lambda, std::int64_t copies, std::uint64_t seed) {
  const auto c4 = build_c4_state();
  ProtocolConfig cfg{observable_set_from_witness(c4), NoisyState(c4, lambda),
                     copies, 0.99, seed};
  return run_protocol(cfg);
}

}  // namespace

TEST_CASE("noiseless trace gives fidelity 1 with zero error") {
  const auto est = fidelity_from_trace(run(0.0, 1000, 3));
  CHECK(est.f_hat == 1.0);
  CHECK(est.std_error == 0.0);
  CHECK(est.n_copies_used == 1000);
}

TEST_CASE("hand-built trace: S/N = 3/4 maps to f_hat = 1/2") {
  ConfidenceTrace trace;
  trace.separable_bound = 0.75;
  trace.uniform_weights = true;
  for (int i = 0; i < 4; ++i) {
    TraceRecord rec;
    rec.copy_index = i;
    rec.outcome = i < 3 ? 1 : 0;
    rec.cumulative_s = std::min(i + 1, 3);
    trace.records.push_back(rec);
  }
  const auto est = fidelity_from_trace(trace);
  CHECK(est.f_hat == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(est.std_error ==
        doctest::Approx(2.0 * std::sqrt(0.75 * 0.25 / 4.0)).epsilon(1e-15));
}

TEST_CASE("estimate lands within three standard errors of the model value") {
  const double lambda = 0.4;
  const auto est = fidelity_from_trace(run(lambda, 100000, 12));
  const double truth = expected_fidelity(lambda, 4);
  CHECK(truth == doctest::Approx(0.625).epsilon(1e-15));
  CHECK(std::abs(est.f_hat - truth) < 3.0 * est.std_error);
}

TEST_CASE("expected_fidelity closed form") {
  CHECK(expected_fidelity(0.0, 4) == 1.0);
  CHECK(expected_fidelity(1.0, 4) == doctest::Approx(1.0 / 16.0).epsilon(1e-15));
  // Identity with the mean error-free probability: f = 2 p_e - 1.
  for (int n : {2, 4, 8}) {
    for (double lambda : {0.0, 0.2, 0.5, 1.0}) {
      CHECK(std::abs(expected_fidelity(lambda, n) -
                     (2.0 * expected_p_e(lambda, n) - 1.0)) < 1e-12);
    }
  }
}

TEST_CASE("witness value is recovered as 1/2 - f_hat") {
  const auto est = fidelity_from_trace(run(0.3, 50000, 21));
  const double w_hat = 0.5 - est.f_hat;
  const double w_truth = 0.5 - expected_fidelity(0.3, 4);
  CHECK(std::abs(w_hat - w_truth) < 3.0 * est.std_error);
}

TEST_CASE("non-uniform weights and empty traces are refused") {
  const auto g = build_linear_cluster(2);
  ObservableSet obs(g.generators(), 0.75, {0.0, 0.0, 0.0, 1.0});
  ProtocolConfig cfg{obs, NoisyState(g, 0.0), 20, 0.99, 1};
  CHECK_THROWS_AS(fidelity_from_trace(run_protocol(cfg)),
                  std::invalid_argument);

  ConfidenceTrace empty;
  CHECK_THROWS_AS(fidelity_from_trace(empty), std::invalid_argument);
}

TEST_CASE("seeded runs are consistent with the binomial error bar (property)") {
  const double lambda = 0.25;
  const double truth = expected_fidelity(lambda, 4);
  int within = 0;
  const int runs = 30;
  for (int t = 0; t < runs; ++t) {
    const auto est = fidelity_from_trace(run(lambda, 20000, derive_seed(88, t)));
    if (std::abs(est.f_hat - truth) < 3.0 * est.std_error) ++within;
  }
  CHECK(within >= 28);
}
