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

#ifndef FEWCOPY_BASELINE_HPP
#define FEWCOPY_BASELINE_HPP

#include <cstdint>

#include "fewcopy/states.hpp"

namespace fewcopy {

/// Shot budget for the standard witness-expectation approach, uniform per
/// local term: total_shots = n_terms * shots_per_term.
struct ShotEstimate {
  double epsilon = 0.0;
  double confidence_level = 0.0;
  double lambda = 0.0;
  std::int64_t shots_per_term = 0;
  std::int64_t n_terms = 0;
  std::int64_t total_shots = 0;
};

/// Two-sided normal quantile for the given confidence level. 68% is taken as
/// exactly 1 (the one-sigma convention) and 95% as 1.95996; other levels use
/// the inverse normal CDF.
double normal_quantile_two_sided(double confidence_level);

/// Smallest N with z * sqrt((1 - mean^2) / N) <= epsilon for a +/-1-valued
/// observable, i.e. ceil(z^2 (1 - mean^2) / epsilon^2), at least 1.
std::int64_t shots_for_accuracy(double mean, double epsilon,
                                double confidence_level);

/// Result of repeated simulated estimations of <X> with true mean 1-lambda.
struct CoverageReport {
  double lambda = 0.0;
  double epsilon = 0.0;
  double confidence_level = 0.0;
  std::int64_t trials = 0;
  std::int64_t shots_per_trial = 0;
  std::int64_t covered = 0;  // trials with |sample mean - true mean| <= eps
  double coverage = 0.0;
};

CoverageReport simulate_expectation_estimation(double lambda, double epsilon,
                                               double confidence_level,
                                               std::int64_t trials,
                                               std::uint64_t seed);

/// Full witness cost: q_terms independent expectation estimations, each at
/// the per-term budget for a stabilizer with noisy mean 1-lambda. q_terms = 0
/// selects the default 2^n of the full stabilizer decomposition.
ShotEstimate witness_total_cost(int n, double lambda, double epsilon,
                                double confidence_level,
                                std::int64_t q_terms = 0);

/// Noise limit of the witness W = I/2 - |C><C| computed from statevector
/// traces for n <= 12; falls back to the closed form 2^n/(2(2^n-1)) for
/// larger states.
double witness_lambda_limit(const GraphState& g);

}  // namespace fewcopy

#endif  // FEWCOPY_BASELINE_HPP
