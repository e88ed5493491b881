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

#include "fewcopy/detector.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

#include "fewcopy/rng.hpp"

namespace fewcopy {

double kl_divergence(double x, double y) {
  if (!(y > 0.0 && y < 1.0)) {
    throw std::invalid_argument("kl_divergence: y must lie in (0, 1)");
  }
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::invalid_argument("kl_divergence: x must lie in [0, 1]");
  }
  double acc = 0.0;
  if (x > 0.0) acc += x * std::log(x / y);
  if (x < 1.0) acc += (1.0 - x) * std::log((1.0 - x) / (1.0 - y));
  return acc;
}

double confidence_min(double delta, double p_s, std::int64_t n) {
  if (!(delta > 0.0)) {
    throw std::invalid_argument(
        "confidence_min: delta <= 0 is inconclusive, not low-confidence");
  }
  if (p_s + delta > 1.0 + 1e-15) {
    throw std::invalid_argument("confidence_min: p_s + delta exceeds 1");
  }
  if (n < 0) throw std::invalid_argument("confidence_min: negative n");
  const double d = kl_divergence(std::min(p_s + delta, 1.0), p_s);
  return 1.0 - std::exp(-d * static_cast<double>(n));
}

double max_copies(double c0, double p_s, double delta) {
  if (!(c0 > 0.0 && c0 < 1.0)) {
    throw std::invalid_argument("max_copies: c0 must lie in (0, 1)");
  }
  if (!(delta > 0.0)) {
    throw std::invalid_argument(
        "max_copies: delta <= 0, noise at or beyond the lambda limit");
  }
  if (p_s + delta > 1.0 + 1e-15) {
    throw std::invalid_argument("max_copies: p_s + delta exceeds 1");
  }
  const double d = kl_divergence(std::min(p_s + delta, 1.0), p_s);
  return -std::log1p(-c0) / d;
}

namespace {

// Inverse-CDF draw for explicit weights; uniform sets use a power-of-two
// mask draw instead.
std::uint64_t draw_mask(Rng& rng, const ObservableSet& obs,
                        const std::vector<double>& cumulative) {
  if (obs.uniform_weights()) {
    return rng.uniform_pow2(obs.n_qubits());
  }
  const double u = rng.uniform01();
  const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
  const auto idx = static_cast<std::uint64_t>(it - cumulative.begin());
  return std::min(idx, obs.n_observables() - 1);
}

}  // namespace

ConfidenceTrace run_protocol(const ProtocolConfig& cfg) {
  if (cfg.n_copies < 1) {
    throw std::invalid_argument("run_protocol: n_copies must be >= 1");
  }
  if (!(cfg.target_confidence > 0.0 && cfg.target_confidence < 1.0)) {
    throw std::invalid_argument("run_protocol: C0 must lie in (0, 1)");
  }
  if (cfg.observables.n_qubits() != cfg.state.target.n_qubits()) {
    throw std::invalid_argument(
        "run_protocol: observable set and state disagree on n_qubits");
  }

  std::vector<double> cumulative;
  if (!cfg.observables.uniform_weights()) {
    cumulative.reserve(cfg.observables.n_observables());
    double acc = 0.0;
    for (std::uint64_t i = 0; i < cfg.observables.n_observables(); ++i) {
      acc += cfg.observables.weight(i);
      cumulative.push_back(acc);
    }
  }

  std::unique_ptr<DenseState> oracle_state;
  if (cfg.mode == ProtocolConfig::Mode::kOracle) {
    oracle_state = std::make_unique<DenseState>(dense_statevector(cfg.state.target));
  }

  const double p_s = cfg.observables.separable_bound();
  const double nan = std::numeric_limits<double>::quiet_NaN();

  Rng rng(cfg.rng_seed);
  ConfidenceTrace trace;
  trace.separable_bound = p_s;
  trace.uniform_weights = cfg.observables.uniform_weights();
  trace.records.reserve(cfg.n_copies);

  std::int64_t s = 0;
  for (std::int64_t copy = 0; copy < cfg.n_copies; ++copy) {
    const std::uint64_t mask = draw_mask(rng, cfg.observables, cumulative);
    const double p1 =
        cfg.mode == ProtocolConfig::Mode::kAnalytic
            ? outcome_probability(cfg.state, mask)
            : outcome_probability_oracle(*oracle_state,
                                         cfg.observables.source_group(),
                                         cfg.state.lambda, mask);
    const int outcome = rng.bernoulli(p1) ? 1 : 0;
    s += outcome;

    TraceRecord rec;
    rec.copy_index = copy;
    rec.observable_mask = mask;
    rec.outcome = outcome;
    rec.cumulative_s = s;
    rec.p_e_obs = static_cast<double>(s) / static_cast<double>(copy + 1);
    rec.delta = rec.p_e_obs - p_s;
    rec.conclusive = rec.delta > 0.0;
    rec.c_min = rec.conclusive ? confidence_min(rec.delta, p_s, copy + 1) : nan;
    trace.records.push_back(rec);
  }

  const TraceRecord& last = trace.records.back();
  if (last.conclusive) {
    trace.verdict = ConfidenceTrace::Verdict::kEntangled;
    trace.final_confidence = last.c_min;
  } else {
    trace.verdict = ConfidenceTrace::Verdict::kInconclusive;
    trace.final_confidence = nan;
  }
  return trace;
}

std::vector<std::pair<std::int64_t, double>> confidence_curve(
    double lambda, int n, double p_s, std::int64_t max_n) {
  if (max_n < 0) throw std::invalid_argument("confidence_curve: negative max_n");
  const double p_e = expected_p_e(lambda, n);
  const double delta = p_e - p_s;
  if (!(delta > 0.0)) {
    throw std::invalid_argument(
        "confidence_curve: lambda at or beyond the noise limit for this n");
  }
  const double d = kl_divergence(p_e, p_s);
  std::vector<std::pair<std::int64_t, double>> curve;
  curve.reserve(max_n);
  for (std::int64_t copies = 1; copies <= max_n; ++copies) {
    curve.emplace_back(copies,
                       1.0 - std::exp(-d * static_cast<double>(copies)));
  }
  return curve;
}

}  // namespace fewcopy
