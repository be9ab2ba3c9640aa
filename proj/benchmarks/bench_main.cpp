// Copyright 2026 The rrcc Authors
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

#include "rrcc/cycliccode.hpp"
#include "rrcc/enumerate.hpp"
#include "rrcc/unityfactor.hpp"
#include "rrcc/wtdist.hpp"

namespace {

using namespace rrcc;

FamilyPtr family(std::uint32_t p, unsigned r, unsigned s = 1) { return code_family(FieldSpec::build(p, 1), r, s); }

// code_family caches, so time the factorization itself.
void BM_FactorUnity(benchmark::State& state) {
  const FieldSpec f = FieldSpec::build(static_cast<std::uint32_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(factor_unity(f, static_cast<unsigned>(state.range(1))));
}
BENCHMARK(BM_FactorUnity)->Args({17, 3})->Args({13, 3})->Args({31, 3})->Args({3, 6});

void BM_LayeredDistance(benchmark::State& state) {
  const FamilyPtr f = family(11, 3);
  const RepeatedRootCode c(f, parse_generator(*f, "(x+1)^4(x-1)^4(x^2+1)^5(x^2+3x+10)^10(x^2+8x+10)^2"));
  for (auto _ : state) benchmark::DoNotOptimize(distance(c).d);
}
BENCHMARK(BM_LayeredDistance);

void BM_FullLengthDistance(benchmark::State& state) {
  const FamilyPtr f = family(3, 3);
  const RepeatedRootCode c(f, exps_at(*f, static_cast<std::uint64_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(brute_distance(c));
}
BENCHMARK(BM_FullLengthDistance)->Arg(341)->Arg(682);

void BM_DualContainingScan(benchmark::State& state) {
  const FamilyPtr f = family(7, 3);
  const EnumOptions opts{kDefaultBudget, static_cast<unsigned>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(count_codes(f, is_dual_containing, opts));
}
BENCHMARK(BM_DualContainingScan)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ClosedFormCount(benchmark::State& state) {
  const FamilyPtr f = family(17, 6);
  for (auto _ : state) benchmark::DoNotOptimize(count_dual_containing(*f));
}
BENCHMARK(BM_ClosedFormCount);

}  // namespace

BENCHMARK_MAIN();
