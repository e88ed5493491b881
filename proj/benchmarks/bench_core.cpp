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

#include <benchmark/benchmark.h>

#include "fewcopy/detector.hpp"
#include "fewcopy/states.hpp"

namespace {

using namespace fewcopy;

void BM_GroupElement(benchmark::State& state) {
  const auto group =
      build_linear_cluster(static_cast<int>(state.range(0))).generators();
  std::uint64_t mask = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(group.element(mask));
    mask = (mask + 1) & (group.size() - 1);
  }
}
BENCHMARK(BM_GroupElement)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_RunProtocolAnalytic(benchmark::State& state) {
  const auto g = build_linear_cluster(static_cast<int>(state.range(0)));
  ProtocolConfig cfg{observable_set_from_witness(g), NoisyState(g, 0.3), 1000,
                     0.99, 7};
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_protocol(cfg));
    ++cfg.rng_seed;
  }
  state.SetItemsProcessed(state.iterations() * cfg.n_copies);
}
BENCHMARK(BM_RunProtocolAnalytic)->Arg(4)->Arg(8)->Arg(16);

void BM_RunProtocolOracle(benchmark::State& state) {
  const auto g = build_linear_cluster(static_cast<int>(state.range(0)));
  ProtocolConfig cfg{observable_set_from_witness(g),     NoisyState(g, 0.3),
                     1000,
                     0.99,
                     7,
                     ProtocolConfig::Mode::kOracle};
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_protocol(cfg));
    ++cfg.rng_seed;
  }
  state.SetItemsProcessed(state.iterations() * cfg.n_copies);
}
BENCHMARK(BM_RunProtocolOracle)->Arg(4)->Arg(8)->Arg(10);

void BM_OracleProbability(benchmark::State& state) {
  const NoisyState s(build_linear_cluster(static_cast<int>(state.range(0))),
                     0.3);
  std::uint64_t mask = 1;
  const std::uint64_t n_masks = std::uint64_t{1} << s.target.n_qubits();
  for (auto _ : state) {
    benchmark::DoNotOptimize(outcome_probability_oracle(s, mask));
    mask = mask % (n_masks - 1) + 1;
  }
}
BENCHMARK(BM_OracleProbability)->Arg(4)->Arg(8)->Arg(12);

void BM_ConfidenceCurve(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(confidence_curve(0.2, 4, 0.75, state.range(0)));
  }
}
BENCHMARK(BM_ConfidenceCurve)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
