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

#ifndef CENTERLINE_METRICS_DETECTION_H_
#define CENTERLINE_METRICS_DETECTION_H_

#include <span>
#include <vector>

#include "centerline/polyline.h"

namespace centerline::metrics {

enum class CurveDistance { kFrechet, kChamfer };
enum class MatchingMode { kGreedy, kOptimal };

struct ScoredCurve {
  Polyline3D curve;
  double confidence = 1.0;
};

struct DetectionScene {
  std::vector<ScoredCurve> preds;
  std::vector<Polyline3D> gts;
};

struct DetectionResult {
  std::vector<double> thresholds;
  std::vector<double> ap;  // per threshold, fraction in [0, 1]
  double map_percent = 0.0;
};

// All-point interpolated average precision of a ranked list of hits against
// `gt_count` positives. Empty ground truth scores 1 with no predictions and 0
// otherwise.
double AveragePrecision(std::span<const char> ranked_hits, int gt_count);

// Per threshold: predictions ranked by descending confidence each claim the
// nearest unmatched ground truth with distance < threshold (greedy), or a
// globally optimal assignment restricted to valid pairs (optimal). Ranked
// lists are pooled across scenes before AP.
DetectionResult DetScore(std::span<const DetectionScene> scenes,
                         CurveDistance distance,
                         std::span<const double> thresholds,
                         MatchingMode mode = MatchingMode::kGreedy);

DetectionResult DetScore(const std::vector<ScoredCurve>& preds,
                         const std::vector<Polyline3D>& gts,
                         CurveDistance distance,
                         std::span<const double> thresholds,
                         MatchingMode mode = MatchingMode::kGreedy);

double CurveDistanceValue(CurveDistance distance, const Polyline3D& a,
                          const Polyline3D& b);

}  // namespace centerline::metrics

#endif  // CENTERLINE_METRICS_DETECTION_H_
