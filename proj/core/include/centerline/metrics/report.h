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

#ifndef CENTERLINE_METRICS_REPORT_H_
#define CENTERLINE_METRICS_REPORT_H_

#include <span>
#include <string>
#include <vector>

#include "centerline/metrics/detection.h"
#include "centerline/metrics/topology.h"

namespace centerline::metrics {

struct MetricConfig {
  std::vector<double> frechet_thresholds_m{1.0, 2.0, 3.0};
  std::vector<double> chamfer_thresholds_m{0.5, 1.0, 1.5};
  double ranking_threshold = 0.5;
  double epsilon = 1e-3;
  // Unmatched ground-truth-negative entries; ranking_threshold + epsilon.
  double unmatched_negative_penalty = 0.5 + 1e-3;
  bool remap_enabled = false;
  double remap_floor = 0.05;
  double remap_bonus = 1.0;
  bool strict_denominator = false;
  MatchingMode det_matching = MatchingMode::kGreedy;
  // Curves are arc-length resampled to this many points before any
  // distance is taken; 0 keeps them as given.
  int resample_points = 11;

  // Sets the ranking threshold and the matching unmatched-negative penalty.
  MetricConfig& WithRankingThreshold(double threshold);
  TopologyConfig Topology() const;
  void Validate() const;
};

struct SceneInput {
  std::string id;
  SceneGraph pred;
  SceneGraph gt;
};

struct SceneMetrics {
  std::string id;
  double det_l = 0.0;
  double det_l_ch = 0.0;
  double top_ll = 0.0;
};

struct TopologyVariants {
  double flawed = 0.0;    // ranking threshold 0.5, raw confidences
  double fixed = 0.0;     // ranking threshold 0.01
  double remapped = 0.0;  // ranking threshold 0.5 with score remapping
};

struct MetricReport {
  double det_l = 0.0;
  double det_l_ch = 0.0;
  double top_ll = 0.0;
  double ols_l = 0.0;
  DetectionResult det_l_detail;
  DetectionResult det_l_ch_detail;
  TopologyResult top_ll_detail;
  TopologyVariants top_ll_variants;
  std::vector<SceneMetrics> scenes;  // input order
};

// Per-scene work runs on up to `threads` workers; pooling is an ordered
// fold by scene position, so the report does not depend on `threads`.
MetricReport EvaluateScenes(std::span<const SceneInput> scenes,
                            const MetricConfig& config, int threads = 1);

}  // namespace centerline::metrics

#endif  // CENTERLINE_METRICS_REPORT_H_
