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

#ifndef FEWCOPY_DETECTOR_HPP
#define FEWCOPY_DETECTOR_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "fewcopy/states.hpp"

namespace fewcopy {

/// D(x||y) = x ln(x/y) + (1-x) ln((1-x)/(1-y)), natural log, with the
/// convention 0 ln 0 = 0. Requires y in (0,1) and x in [0,1].
double kl_divergence(double x, double y);

/// Minimum confidence after n copies at observed deviation delta > 0:
/// 1 - exp(-D(p_s + delta || p_s) n). Throws on delta <= 0 (the protocol is
/// inconclusive there, not low-confidence) and on p_s + delta > 1.
double confidence_min(double delta, double p_s, std::int64_t n);

/// Copy budget to reach confidence c0: -ln(1 - c0) / D(p_s + delta || p_s),
/// returned as a real. Callers round up for an integer budget.
double max_copies(double c0, double p_s, double delta);

/// One protocol run: observable set, prepared state, copy budget, seed.
struct ProtocolConfig {
  enum class Mode { kAnalytic, kOracle };

  ObservableSet observables;
  NoisyState state;
  std::int64_t n_copies = 1;
  double target_confidence = 0.99;
  std::uint64_t rng_seed = 0;
  Mode mode = Mode::kAnalytic;
};

/// Per-copy record. c_min is NaN wherever delta <= 0 (inconclusive point);
/// the record is kept so downstream plot filters stay a presentation choice.
struct TraceRecord {
  std::int64_t copy_index = 0;  // 0-based
  std::uint64_t observable_mask = 0;
  int outcome = 0;  // m_i in {0, 1}
  std::int64_t cumulative_s = 0;
  double p_e_obs = 0.0;
  double delta = 0.0;
  double c_min = 0.0;  // NaN when not conclusive
  bool conclusive = false;
};

struct ConfidenceTrace {
  enum class Verdict { kEntangled, kInconclusive };

  std::vector<TraceRecord> records;
  double separable_bound = 0.0;
  bool uniform_weights = true;
  Verdict verdict = Verdict::kInconclusive;
  double final_confidence = 0.0;  // NaN when inconclusive

  std::int64_t n_copies() const {
    return static_cast<std::int64_t>(records.size());
  }
  std::int64_t final_s() const {
    return records.empty() ? 0 : records.back().cumulative_s;
  }
};

/// Runs the sampling loop: draw a mask with probability eps_i, apply the
/// observable to a fresh copy (Bernoulli outcome with the analytic or oracle
/// probability), update S, delta and C_min. Bit-identical for identical
/// configs.
ConfidenceTrace run_protocol(const ProtocolConfig& cfg);

/// Theoretical curve N -> 1 - exp(-D(p_e(lambda) || p_s) N) for N = 1..max_n.
/// Throws if lambda is at or beyond the noise limit for n.
std::vector<std::pair<std::int64_t, double>> confidence_curve(double lambda,
                                                              int n,
                                                              double p_s,
                                                              std::int64_t max_n);

}  // namespace fewcopy

#endif  // FEWCOPY_DETECTOR_HPP
