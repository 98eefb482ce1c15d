// Copyright 2026 The Authors.
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

#include <random>

#include "benchmark/benchmark.h"
#include "pregeo/classify.h"
#include "pregeo/constructors.h"
#include "pregeo/group_harness.h"

namespace pregeo {
namespace {

void BM_LinearClosure(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  const auto d = static_cast<std::uint32_t>(state.range(1));
  const ClosureTable t = LinearMatroid({q, d});
  std::mt19937 rng(1);
  std::uniform_int_distribution<Element> pick(0, t.ground_size() - 1);
  std::vector<ElementSet> inputs;
  for (int i = 0; i < 256; ++i) inputs.push_back({pick(rng), pick(rng), pick(rng)});
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(t.Close(inputs[i++ % inputs.size()]));
  }
}
BENCHMARK(BM_LinearClosure)->Args({2, 4})->Args({3, 4})->Args({2, 12});

void BM_VerifyAxioms(benchmark::State& state) {
  const ClosureTable t = LinearMatroid({2, static_cast<std::uint32_t>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(VerifyAxioms(t));
}
BENCHMARK(BM_VerifyAxioms)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_EnumerateFlats(benchmark::State& state) {
  for (auto _ : state) {
    const Matroid m = Matroid::Derived(AffineMatroid({3, 4}));
    benchmark::DoNotOptimize(m.Flats().size());
  }
}
BENCHMARK(BM_EnumerateFlats)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  const Matroid m = Matroid::Derived(AffineMatroid({3, 3}));
  m.Flats();
  for (auto _ : state) benchmark::DoNotOptimize(Classify(m));
}
BENCHMARK(BM_Classify)->Unit(benchmark::kMillisecond);

void BM_AutomorphismGroup(benchmark::State& state) {
  const FiniteGroup g = groups::ElementaryAbelian(3, 4);
  for (auto _ : state) benchmark::DoNotOptimize(AutomorphismGroup(g).Order());
}
BENCHMARK(BM_AutomorphismGroup)->Unit(benchmark::kMillisecond);

void BM_ConfigurationScan(benchmark::State& state) {
  const auto k = static_cast<std::uint32_t>(state.range(0));
  const GroupPregeometry gp =
      GroupPregeometry::Create(groups::ElementaryAbelian(3, k),
                               Matroid::Validate(LinearMatroid({3, k})));
  const ElementSet base = k == 4 ? ElementSet{27} : ElementSet();
  for (auto _ : state) {
    benchmark::DoNotOptimize(CheckConfiguration(gp, base).summary.total);
  }
}
BENCHMARK(BM_ConfigurationScan)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace pregeo

BENCHMARK_MAIN();
