// Copyright 2026 The tableauxb Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "tableauxb/bijections.h"
#include "tableauxb/enumerate.h"
#include "tableauxb/zigzag.h"

namespace tableauxb {
namespace {

void BM_SignedWindowSweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::uint64_t total = 0;
    for_each_signed_window(n, [&](std::span<const int> w) { total += w[0] > 0; });
    benchmark::DoNotOptimize(total);
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n) *
                          static_cast<std::int64_t>(std::tgamma(n + 1) + 0.5));
}
BENCHMARK(BM_SignedWindowSweep)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_Census(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(compute_census(n, threads).total);
}
BENCHMARK(BM_Census)
    ->ArgsProduct({{6, 7, 8}, {1, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

void BM_GenerateTableaux(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::uint64_t total = 0;
    for_each_tableau(n, [&](const PermutationTableau&) { ++total; });
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_GenerateTableaux)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_ZetaAllTableaux(benchmark::State& state) {
  const auto tableaux = all_tableaux(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const PermutationTableau& t : tableaux) benchmark::DoNotOptimize(zeta(t));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(tableaux.size()));
}
BENCHMARK(BM_ZetaAllTableaux)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_ThetaAllDerangements(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::vector<PermutationTableau> sources;
  for (const PermutationTableau& t : all_tableaux(m)) {
    if (in_derangement_class(zeta(t).window(), DerangementClass::kB)) sources.push_back(t);
  }
  for (auto _ : state) {
    for (const PermutationTableau& t : sources) {
      benchmark::DoNotOptimize(theta(t, AlternatingType::kPosDU));
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(sources.size()));
}
BENCHMARK(BM_ThetaAllDerangements)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_ZetaInverse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  std::mt19937 rng(1);
  std::vector<SignedPermutation> inputs;
  for (int s = 0; s < 64; ++s) {
    std::shuffle(w.begin(), w.end(), rng);
    std::vector<int> v = w;
    for (int& x : v) {
      if (rng() & 1u) x = -x;
    }
    inputs.emplace_back(v);
  }
  for (auto _ : state) {
    for (const SignedPermutation& s : inputs) benchmark::DoNotOptimize(zeta_inverse(s, n));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(inputs.size()));
}
BENCHMARK(BM_ZetaInverse)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace tableauxb

BENCHMARK_MAIN();
