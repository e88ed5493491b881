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

#include "fewcopy/rng.hpp"

namespace fewcopy {

namespace {

// Acklam's rational approximation to the standard normal quantile,
// |relative error| < 1.15e-9.
double normal_quantile(double p) {
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double p_low = 0.02425;
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("normal_quantile: p must lie in (0, 1)");
  }
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  }
  const double q = std::sqrt(-2.0 * std::log(1.0 - p));
  return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
         ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
}

}  // namespace

double normal_quantile_two_sided(double confidence_level) {
  if (!(confidence_level > 0.0 && confidence_level < 1.0)) {
    throw std::invalid_argument(
        "normal_quantile_two_sided: level must lie in (0, 1)");
  }
  // Conventions used throughout the experimental literature.
  if (std::abs(confidence_level - 0.68) < 1e-9) return 1.0;
  if (std::abs(confidence_level - 0.95) < 1e-9) return 1.95996;
  return normal_quantile(0.5 + confidence_level / 2.0);
}

std::int64_t shots_for_accuracy(double mean, double epsilon,
                                double confidence_level) {
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("shots_for_accuracy: epsilon must be > 0");
  }
  if (std::abs(mean) > 1.0) {
    throw std::invalid_argument("shots_for_accuracy: |mean| must be <= 1");
  }
  const double z = normal_quantile_two_sided(confidence_level);
  const double variance = 1.0 - mean * mean;
  if (variance == 0.0) return 1;
  const double n = std::ceil(z * z * variance / (epsilon * epsilon));
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(n));
}

CoverageReport simulate_expectation_estimation(double lambda, double epsilon,
                                               double confidence_level,
                                               std::int64_t trials,
                                               std::uint64_t seed) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw std::invalid_argument(
        "simulate_expectation_estimation: lambda must lie in [0, 1]");
  }
  if (trials < 1) {
    throw std::invalid_argument(
        "simulate_expectation_estimation: trials must be >= 1");
  }
  const double mean = 1.0 - lambda;
  const std::int64_t shots = shots_for_accuracy(mean, epsilon, confidence_level);
  const double p_plus = (1.0 + mean) / 2.0;

  std::int64_t covered = 0;
  for (std::int64_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    std::int64_t plus = 0;
    for (std::int64_t k = 0; k < shots; ++k) {
      if (rng.bernoulli(p_plus)) ++plus;
    }
    const double sample_mean =
        (2.0 * static_cast<double>(plus) - static_cast<double>(shots)) /
        static_cast<double>(shots);
    if (std::abs(sample_mean - mean) <= epsilon) ++covered;
  }

  CoverageReport report;
  report.lambda = lambda;
  report.epsilon = epsilon;
  report.confidence_level = confidence_level;
  report.trials = trials;
  report.shots_per_trial = shots;
  report.covered = covered;
  report.coverage = static_cast<double>(covered) / static_cast<double>(trials);
  return report;
}

ShotEstimate witness_total_cost(int n, double lambda, double epsilon,
                                double confidence_level,
                                std::int64_t q_terms) {
  if (n < 1 || n > 62) throw std::invalid_argument("witness_total_cost: bad n");
  if (q_terms < 0) {
    throw std::invalid_argument("witness_total_cost: q_terms must be >= 0");
  }
  if (q_terms == 0) q_terms = std::int64_t{1} << n;
  ShotEstimate est;
  est.epsilon = epsilon;
  est.confidence_level = confidence_level;
  est.lambda = lambda;
  est.shots_per_term = shots_for_accuracy(1.0 - lambda, epsilon, confidence_level);
  est.n_terms = q_terms;
  est.total_shots = est.shots_per_term * q_terms;
  return est;
}

double witness_lambda_limit(const GraphState& g) {
  const int n = g.n_qubits();
  if (n > DenseState::kMaxQubits) {
    const double pow2n = std::ldexp(1.0, n);
    return 0.5 + 0.5 / (pow2n - 1.0);
  }
  // W = I/2 - |C><C|; evaluate both traces from the constructed statevector
  // rather than from the closed form.
  const DenseState psi = dense_statevector(g);
  const double norm2 = psi.inner(psi).real();
  const double w_target = 0.5 * norm2 - norm2 * norm2;  // Tr[W rho_t]
  const double w_avg = 0.5 - norm2 / std::ldexp(1.0, n);  // Tr[W]/2^n
  return -w_target / (w_avg - w_target);
}

}  // namespace fewcopy
