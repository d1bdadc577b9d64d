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

#include "centerline/metrics/detection.h"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "centerline/error.h"
#include "centerline/metrics/assignment.h"
#include "centerline/metrics/curve_distance.h"

namespace centerline::metrics {
namespace {

struct RankedHit {
  double confidence;
  std::size_t scene;
  std::size_t index;
  char hit;
};

std::vector<std::size_t> ConfidenceOrder(const std::vector<ScoredCurve>& preds) {
  std::vector<std::size_t> order(preds.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return preds[a].confidence > preds[b].confidence;
  });
  return order;
}

// Hit flag per prediction (original indexing) for one threshold.
std::vector<char> MatchScene(const std::vector<std::vector<double>>& dist,
                             const std::vector<std::size_t>& order,
                             std::size_t gt_count, double threshold,
                             MatchingMode mode) {
  const std::size_t pred_count = dist.size();
  std::vector<char> hit(pred_count, 0);
  if (pred_count == 0 || gt_count == 0) return hit;
  if (mode == MatchingMode::kGreedy) {
    std::vector<char> taken(gt_count, 0);
    for (std::size_t p : order) {
      std::size_t best = gt_count;
      for (std::size_t g = 0; g < gt_count; ++g) {
        if (taken[g] || !(dist[p][g] < threshold)) continue;
        if (best == gt_count || dist[p][g] < dist[p][best]) best = g;
      }
      if (best != gt_count) {
        taken[best] = 1;
        hit[p] = 1;
      }
    }
    return hit;
  }
  // Invalid pairs cost more than any set of valid ones, so the assignment
  // maximizes the number of valid matches first.
  double invalid = 1.0;
  for (const auto& row : dist) {
    for (double d : row) {
      if (d < threshold) invalid += d;
    }
  }
  CostMatrix cost(pred_count, std::vector<double>(gt_count));
  for (std::size_t p = 0; p < pred_count; ++p) {
    for (std::size_t g = 0; g < gt_count; ++g) {
      cost[p][g] = dist[p][g] < threshold ? dist[p][g] : invalid;
    }
  }
  for (const auto& [p, g] : Hungarian(cost).pairs) {
    if (dist[p][g] < threshold) hit[p] = 1;
  }
  return hit;
}

}  // namespace

double CurveDistanceValue(CurveDistance distance, const Polyline3D& a,
                          const Polyline3D& b) {
  return distance == CurveDistance::kFrechet ? DiscreteFrechet(a, b)
                                             : Chamfer(a, b);
}

double AveragePrecision(std::span<const char> ranked_hits, int gt_count) {
  if (gt_count == 0) return ranked_hits.empty() ? 1.0 : 0.0;
  const std::size_t n = ranked_hits.size();
  if (n == 0) return 0.0;
  std::vector<double> precision(n);
  std::vector<double> recall(n);
  int tp = 0;
  for (std::size_t k = 0; k < n; ++k) {
    tp += ranked_hits[k] ? 1 : 0;
    precision[k] = static_cast<double>(tp) / static_cast<double>(k + 1);
    recall[k] = static_cast<double>(tp) / gt_count;
  }
  for (std::size_t k = n - 1; k > 0; --k) {
    precision[k - 1] = std::max(precision[k - 1], precision[k]);
  }
  double ap = 0.0;
  double prev_recall = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    ap += (recall[k] - prev_recall) * precision[k];
    prev_recall = recall[k];
  }
  return ap;
}

DetectionResult DetScore(std::span<const DetectionScene> scenes,
                         CurveDistance distance,
                         std::span<const double> thresholds,
                         MatchingMode mode) {
  if (thresholds.empty()) {
    throw Error(ErrorCode::kInvalidInput, "need at least one threshold");
  }
  DetectionResult result;
  result.thresholds.assign(thresholds.begin(), thresholds.end());

  std::vector<std::vector<std::vector<double>>> dist(scenes.size());
  std::vector<std::vector<std::size_t>> order(scenes.size());
  int gt_total = 0;
  for (std::size_t s = 0; s < scenes.size(); ++s) {
    const DetectionScene& scene = scenes[s];
    for (const ScoredCurve& p : scene.preds) {
      if (!(p.confidence >= 0.0 && p.confidence <= 1.0)) {
        throw Error(ErrorCode::kInvalidInput, "confidence outside [0, 1]");
      }
    }
    gt_total += static_cast<int>(scene.gts.size());
    order[s] = ConfidenceOrder(scene.preds);
    dist[s].assign(scene.preds.size(), std::vector<double>(scene.gts.size()));
    for (std::size_t p = 0; p < scene.preds.size(); ++p) {
      for (std::size_t g = 0; g < scene.gts.size(); ++g) {
        dist[s][p][g] =
            CurveDistanceValue(distance, scene.preds[p].curve, scene.gts[g]);
      }
    }
  }

  double sum = 0.0;
  for (double threshold : thresholds) {
    std::vector<RankedHit> ranked;
    for (std::size_t s = 0; s < scenes.size(); ++s) {
      const auto hit = MatchScene(dist[s], order[s], scenes[s].gts.size(),
                                  threshold, mode);
      for (std::size_t p = 0; p < hit.size(); ++p) {
        ranked.push_back({scenes[s].preds[p].confidence, s, p, hit[p]});
      }
    }
    std::sort(ranked.begin(), ranked.end(),
              [](const RankedHit& a, const RankedHit& b) {
                return std::tie(b.confidence, a.scene, a.index) <
                       std::tie(a.confidence, b.scene, b.index);
              });
    std::vector<char> hits;
    hits.reserve(ranked.size());
    for (const RankedHit& r : ranked) hits.push_back(r.hit);
    const double ap = AveragePrecision(hits, gt_total);
    result.ap.push_back(ap);
    sum += ap;
  }
  result.map_percent = 100.0 * sum / static_cast<double>(thresholds.size());
  return result;
}

DetectionResult DetScore(const std::vector<ScoredCurve>& preds,
                         const std::vector<Polyline3D>& gts,
                         CurveDistance distance,
                         std::span<const double> thresholds,
                         MatchingMode mode) {
  const DetectionScene scene{preds, gts};
  return DetScore(std::span<const DetectionScene>(&scene, 1), distance,
                  thresholds, mode);
}

}  // namespace centerline::metrics
