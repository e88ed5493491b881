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

#ifndef FEWCOPY_FIDELITY_HPP
#define FEWCOPY_FIDELITY_HPP

#include <cstdint>

#include "fewcopy/detector.hpp"

namespace fewcopy {

/// Fidelity estimate recovered from existing protocol data; no new samples.
struct FidelityEstimate {
  double f_hat = 0.0;
  double std_error = 0.0;
  std::int64_t n_copies_used = 0;
};

/// f_hat = 2 (S/N) - 1 with a binomial plug-in standard error. Requires a
/// trace produced with uniform sampling weights: under non-uniform weights
/// S/N no longer estimates the unweighted average of <M_i> and the
/// estimator would be biased, so that input is refused.
FidelityEstimate fidelity_from_trace(const ConfidenceTrace& trace);

/// Exact fidelity of the white-noise model: 1 - lambda (2^n - 1) / 2^n.
double expected_fidelity(double lambda, int n);

}  // namespace fewcopy

#endif  // FEWCOPY_FIDELITY_HPP
