/* Copyright 2026 The Centerline Toolkit Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <benchmark/benchmark.h>

#include <vector>

#include "centerline/extraction.h"
#include "centerline/metrics/assignment.h"
#include "centerline/metrics/curve_distance.h"
#include "centerline/reconstruction.h"
#include "centerline/synthetic.h"
#include "centerline/targets.h"

namespace centerline {
namespace {

Polyline3D Random(synthetic::Rng& rng, int n) {
  std::vector<Point3> pts;
  for (int k = 0; k < n; ++k) {
    pts.push_back({rng.Uniform(-10, 10), rng.Uniform(-10, 10), rng.Uniform(-1, 1)});
  }
  return Polyline3D(pts);
}

void BM_Frechet(benchmark::State& state) {
  synthetic::Rng rng(1);
  const int n = static_cast<int>(state.range(0));
  const Polyline3D a = Random(rng, n), b = Random(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(metrics::DiscreteFrechet(a, b));
}
BENCHMARK(BM_Frechet)->Arg(11)->Arg(100)->Arg(400);

void BM_Hungarian(benchmark::State& state) {
  synthetic::Rng rng(2);
  const int n = static_cast<int>(state.range(0));
  metrics::CostMatrix m(n, std::vector<double>(n));
  for (auto& row : m) {
    for (double& x : row) x = rng.Uniform(0, 100);
  }
  for (auto _ : state) benchmark::DoNotOptimize(metrics::Hungarian(m).total_cost);
}
BENCHMARK(BM_Hungarian)->Arg(10)->Arg(50)->Arg(200);

void BM_MakeTargets(benchmark::State& state) {
  synthetic::Rng rng(3);
  const Polyline3D curve = synthetic::MakeCenterline(synthetic::CurveKind::kArc, rng);
  const GridSpec spec;
  for (auto _ : state) benchmark::DoNotOptimize(MakeTargets(curve, spec).mask_empty);
}
BENCHMARK(BM_MakeTargets)->Unit(benchmark::kMillisecond);

void BM_ExtractAndReconstruct(benchmark::State& state) {
  synthetic::Rng rng(4);
  const Polyline3D curve = synthetic::MakeCenterline(synthetic::CurveKind::kRamp, rng);
  const GridSpec spec;
  const TargetBundle t = MakeTargets(curve, spec);
  const ScalarGrid mask = Binarize(t.mask, 0.95);
  const QuadDirection dir = QuadDirectionLabel(curve);
  for (auto _ : state) {
    const GridPointSet pts = MultiPointProposal(mask, t.offset, t.height);
    benchmark::DoNotOptimize(ReconstructCurve(pts, dir, spec).curve.size());
  }
}
BENCHMARK(BM_ExtractAndReconstruct)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace centerline

// The packaged benchmark_main archive is LTO bytecode from another compiler.
BENCHMARK_MAIN();
