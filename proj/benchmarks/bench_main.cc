// Copyright 2026 The dworkgeom Authors.
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

#include "dworkgeom/fixed_locus.h"
#include "dworkgeom/group.h"
#include "dworkgeom/int_matrix.h"
#include "dworkgeom/k3.h"
#include "dworkgeom/named_groups.h"
#include "dworkgeom/orbifold.h"

namespace {

using namespace dworkgeom;

Subgroup group(const std::string& name) { return Subgroup::generate(4, resolve_group(4, name).generators); }

void BM_SmithNsFermat(benchmark::State& state) {
  const IntMatrix g = ns_fermat().gram;
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(g));
}
BENCHMARK(BM_SmithNsFermat)->Unit(benchmark::kMillisecond);

void BM_LineIncidence(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(line_intersection_matrix());
}
BENCHMARK(BM_LineIncidence)->Unit(benchmark::kMillisecond);

void BM_FixedLocus(benchmark::State& state) {
  const DworkPencil pencil(4);
  const GroupElement g = parse_group_spec(4, "(123)").at(0);
  for (auto _ : state) benchmark::DoNotOptimize(fixed_locus(g, pencil));
}
BENCHMARK(BM_FixedLocus)->Unit(benchmark::kMillisecond);

void BM_ChenRuan(benchmark::State& state, const char* name) {
  const DworkPencil pencil(4);
  const Subgroup g = group(name);
  for (auto _ : state) benchmark::DoNotOptimize(chen_ruan(g, pencil));
}
BENCHMARK_CAPTURE(BM_ChenRuan, Z2, "Z2")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ChenRuan, A5, "A5")->Unit(benchmark::kMillisecond)->Iterations(3);

}  // namespace

BENCHMARK_MAIN();
