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

namespace fewcopy {

FidelityEstimate fidelity_from_trace(const ConfidenceTrace& trace) {
  if (!trace.uniform_weights) {
    throw std::invalid_argument(
        "fidelity_from_trace: non-uniform sampling weights bias the estimator");
  }
  if (trace.records.empty()) {
    throw std::invalid_argument("fidelity_from_trace: empty trace");
  }
  const double n = static_cast<double>(trace.n_copies());
  const double ratio = static_cast<double>(trace.final_s()) / n;
  FidelityEstimate est;
  est.f_hat = 2.0 * ratio - 1.0;
  est.std_error = 2.0 * std::sqrt(ratio * (1.0 - ratio) / n);
  est.n_copies_used = trace.n_copies();
  return est;
}

double expected_fidelity(double lambda, int n) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw std::invalid_argument("expected_fidelity: lambda must lie in [0, 1]");
  }
  if (n < 1 || n > 62) throw std::invalid_argument("expected_fidelity: bad n");
  const double pow2n = std::ldexp(1.0, n);
  return 1.0 - lambda * (pow2n - 1.0) / pow2n;
}

}  // namespace fewcopy
