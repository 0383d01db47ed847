// Copyright 2025 The alcovekit Authors
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


// Timings for the hot paths: census, Bruhat closure, series arithmetic,
// the straightening iteration and figure rendering.

#include <benchmark/benchmark.h>

#include <random>

#include "alcovekit/figures.hpp"
#include "alcovekit/galois_types.hpp"
#include "alcovekit/iwahori_weyl.hpp"
#include "alcovekit/loop_sim.hpp"

namespace {

using namespace alcovekit;

void BM_CensusSL2(benchmark::State& state) {
  const RootDatum rd = build_root_datum("SL2");
  const GammaData g = make_split_gamma(rd, 7, state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(census(rd, g));
}
BENCHMARK(BM_CensusSL2)->Arg(8)->Arg(24)->Arg(48);

void BM_CensusGL3(benchmark::State& state) {
  const RootDatum rd = build_root_datum("GL3");
  const GammaData g = make_split_gamma(rd, 7, state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(census(rd, g));
}
BENCHMARK(BM_CensusGL3)->Arg(8)->Arg(24);

void BM_AdmissibleGL3(benchmark::State& state) {
  const RootDatum rd = build_root_datum("GL3");
  const BaseAlcove base = base_alcove(rd);
  const IVec mu{state.range(0), 0, 0};
  for (auto _ : state) benchmark::DoNotOptimize(admissible_set(rd, base, mu));
}
BENCHMARK(BM_AdmissibleGL3)->Arg(1)->Arg(2)->Arg(3);

void BM_SeriesMultiply(benchmark::State& state) {
  const CoeffRing ring = CoeffRing::make(5, 3);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> c(0, ring.modulus - 1);
  std::vector<std::int64_t> a(state.range(0)), b(state.range(0));
  for (auto& x : a) x = c(rng);
  for (auto& x : b) x = c(rng);
  const TruncSeries x = TruncSeries::from_coeffs(ring, 0, a);
  const TruncSeries y = TruncSeries::from_coeffs(ring, 0, b);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_SeriesMultiply)->Arg(16)->Arg(64)->Arg(256);

void BM_Straighten(benchmark::State& state) {
  StraightenParams prm{7, 1, 1, 1, 0, state.range(0)};
  std::mt19937_64 rng(derive_seed(3, 0));
  const StraightenInstance inst = random_straighten_instance(prm, rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(straighten_right(inst.x, inst.b, inst.c, prm));
}
BENCHMARK(BM_Straighten)->Arg(28)->Arg(56)->Arg(112);

void BM_RenderGenericity(benchmark::State& state) {
  const FigureSpec spec = genericity_spec(19, 36);
  for (auto _ : state) benchmark::DoNotOptimize(render(spec));
}
BENCHMARK(BM_RenderGenericity);

}  // namespace

BENCHMARK_MAIN();
