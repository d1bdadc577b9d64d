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

#include "centerline/metrics/report.h"

#include <algorithm>
#include <array>

#include "centerline/error.h"
#include "centerline/metrics/score.h"
#include "centerline/parallel.h"

namespace centerline::metrics {
namespace {

SceneGraph Resampled(const SceneGraph& g, int n) {
  if (n == 0) return g;
  SceneGraph out = g;
  for (GraphVertex& v : out.vertices) v.curve = ArcLengthResample(v.curve, n);
  return out;
}

DetectionScene ToDetection(const SceneGraph& pred, const SceneGraph& gt) {
  DetectionScene scene;
  for (const GraphVertex& v : pred.vertices) {
    scene.preds.push_back(ScoredCurve{v.curve, v.confidence});
  }
  for (const GraphVertex& v : gt.vertices) scene.gts.push_back(v.curve);
  return scene;
}

TopologyConfig VariantConfig(const MetricConfig& base, double threshold,
                             bool remap) {
  MetricConfig c = base;
  c.WithRankingThreshold(threshold);
  c.remap_enabled = remap;
  return c.Topology();
}

}  // namespace

MetricConfig& MetricConfig::WithRankingThreshold(double threshold) {
  ranking_threshold = threshold;
  unmatched_negative_penalty = threshold + epsilon;
  return *this;
}

TopologyConfig MetricConfig::Topology() const {
  TopologyConfig t;
  t.thresholds = frechet_thresholds_m;
  t.ranking_threshold = ranking_threshold;
  t.unmatched_negative_penalty = unmatched_negative_penalty;
  t.remap = remap_enabled;
  t.remap_floor = remap_floor;
  t.remap_bonus = remap_bonus;
  t.strict_denominator = strict_denominator;
  return t;
}

void MetricConfig::Validate() const {
  for (const auto* list : {&frechet_thresholds_m, &chamfer_thresholds_m}) {
    if (list->empty()) {
      throw Error(ErrorCode::kInvalidInput, "threshold list is empty");
    }
    for (std::size_t k = 0; k < list->size(); ++k) {
      if (!((*list)[k] > 0.0) || (k > 0 && !((*list)[k] > (*list)[k - 1]))) {
        throw Error(ErrorCode::kInvalidInput,
                    "thresholds must be positive and ascending");
      }
    }
  }
  if (!(ranking_threshold >= 0.0 && ranking_threshold < 1.0)) {
    throw Error(ErrorCode::kInvalidInput, "ranking threshold outside [0, 1)");
  }
  if (resample_points == 1 || resample_points < 0) {
    throw Error(ErrorCode::kInvalidInput, "resample count must be 0 or >= 2");
  }
}

MetricReport EvaluateScenes(std::span<const SceneInput> scenes,
                            const MetricConfig& config, int threads) {
  config.Validate();
  const TopologyConfig headline = config.Topology();
  const std::array<TopologyConfig, 3> variants{
      VariantConfig(config, 0.5, false), VariantConfig(config, 0.01, false),
      VariantConfig(config, 0.5, true)};

  struct Partial {
    DetectionScene detection;
    SceneMetrics metrics;
    TopologyTally headline;
    std::array<TopologyTally, 3> variants;
  };
  std::vector<Partial> partials(scenes.size());
  ParallelFor(scenes.size(), threads, [&](std::size_t s) {
    const SceneInput& in = scenes[s];
    in.pred.Validate();
    in.gt.Validate();
    const SceneGraph pred = Resampled(in.pred, config.resample_points);
    const SceneGraph gt = Resampled(in.gt, config.resample_points);
    Partial& out = partials[s];
    out.detection = ToDetection(pred, gt);
    out.headline = TopologyScene(pred, gt, headline);
    for (std::size_t k = 0; k < variants.size(); ++k) {
      out.variants[k] = TopologyScene(pred, gt, variants[k]);
    }
    const DetectionScene* one = &out.detection;
    out.metrics.id = in.id;
    out.metrics.det_l =
        DetScore({one, 1}, CurveDistance::kFrechet, config.frechet_thresholds_m,
                 config.det_matching)
            .map_percent;
    out.metrics.det_l_ch =
        DetScore({one, 1}, CurveDistance::kChamfer, config.chamfer_thresholds_m,
                 config.det_matching)
            .map_percent;
    out.metrics.top_ll = FinishTopology(out.headline, headline).score_percent;
  });

  MetricReport report;
  std::vector<DetectionScene> pooled;
  TopologyTally top;
  std::array<TopologyTally, 3> var;
  pooled.reserve(partials.size());
  for (Partial& p : partials) {
    pooled.push_back(std::move(p.detection));
    top.Add(p.headline);
    for (std::size_t k = 0; k < var.size(); ++k) var[k].Add(p.variants[k]);
    report.scenes.push_back(std::move(p.metrics));
  }
  report.det_l_detail = DetScore(pooled, CurveDistance::kFrechet,
                                 config.frechet_thresholds_m, config.det_matching);
  report.det_l_ch_detail = DetScore(pooled, CurveDistance::kChamfer,
                                    config.chamfer_thresholds_m, config.det_matching);
  report.top_ll_detail = FinishTopology(top, headline);
  report.top_ll_variants.flawed = FinishTopology(var[0], variants[0]).score_percent;
  report.top_ll_variants.fixed = FinishTopology(var[1], variants[1]).score_percent;
  report.top_ll_variants.remapped = FinishTopology(var[2], variants[2]).score_percent;
  report.det_l = report.det_l_detail.map_percent;
  report.det_l_ch = report.det_l_ch_detail.map_percent;
  report.top_ll = report.top_ll_detail.score_percent;
  report.ols_l = OlsL(report.det_l, report.det_l_ch, report.top_ll);
  return report;
}

}  // namespace centerline::metrics
