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

#ifndef CENTERLINE_TARGETS_H_
#define CENTERLINE_TARGETS_H_

#include <array>
#include <optional>
#include <vector>

#include "centerline/geometry.h"
#include "centerline/grid.h"
#include "centerline/polyline.h"

namespace centerline {

// Majority vote of per-segment flow sectors; a tied vote falls back to the
// sector of the start-to-end vector. Throws InvalidInput when every segment
// is vertical (no planar extent).
QuadDirection QuadDirectionLabel(const Polyline3D& curve);

// World curve expressed in grid coordinates: (i, j, h_norm) per vertex.
Polyline3D ToGridFrame(const Polyline3D& world_curve, const GridSpec& spec);

struct RasterResult {
  ScalarGrid mask;
  bool empty = false;  // no cell within reach; reported, not fatal
};

// Binary mask: 1 where the planar distance from the cell center to the
// curve, in cells, is strictly below width_cells / 2.
RasterResult RasterizeCenterline(const Polyline3D& curve, const GridSpec& spec,
                                 int width_cells = 4);

struct OffsetTargets {
  VectorGrid offset;    // closest curve point minus cell index, in cells
  ScalarGrid fg_band;   // 1 iff ||offset|| < band radius
};

OffsetTargets TargetOffsetField(const Polyline3D& curve, const GridSpec& spec,
                                double band_radius_cells = 4.0);

// Normalized height of the closest curve point inside the band, clamped to
// [0, 1]; 0.5 elsewhere.
ScalarGrid TargetHeightField(const Polyline3D& curve, const GridSpec& spec,
                             double band_radius_cells = 4.0);

struct TargetConfig {
  int mask_width_cells = 4;
  double band_radius_cells = 4.0;
};

struct TargetBundle {
  ScalarGrid mask;
  VectorGrid offset;
  ScalarGrid height;
  ScalarGrid fg_band;
  bool mask_empty = false;
};

// All four supervision grids for one curve, sharing a single projection pass.
TargetBundle MakeTargets(const Polyline3D& curve, const GridSpec& spec,
                         const TargetConfig& config = {});

// Masked L1 losses normalized by the number of band cells. Throw EmptyBand
// when the band has no active cell.
double OffsetLoss(const VectorGrid& pred, const VectorGrid& target,
                  const ScalarGrid& fg_band);
double HeightLoss(const ScalarGrid& pred, const ScalarGrid& target,
                  const ScalarGrid& fg_band);

struct MaskLossTerms {
  double bce = 0.0;
  double dice = 0.0;
};

// Dense BCE (mean over cells) and Dice on predictions clamped to
// [1e-7, 1 - 1e-7].
MaskLossTerms MaskLoss(const ScalarGrid& pred_prob, const ScalarGrid& gt_mask);

struct LossWeights {
  double lambda_cls = 2.0;
  double lambda_reg = 5.0;
  double lambda_mask_bce = 5.0;
  double lambda_mask_dice = 5.0;
  double lambda_offset = 20.0;
  double lambda_height = 50.0;
};

// Unweighted matcher terms for one (prediction, ground truth) pair.
struct MatchTerms {
  double class_cost = 0.0;  // 1 - probability of the ground-truth class
  double regression = 0.0;  // mean L1 over control points
  double bce = 0.0;
  double dice = 0.0;
};

double CombineMatchCost(const MatchTerms& terms, const LossWeights& weights);

struct MatchPrediction {
  std::array<double, 4> class_probs{};  // indexed by QuadDirection
  ScalarGrid prob_map;
  std::optional<std::vector<Point3>> control_points;
};

struct MatchTarget {
  QuadDirection direction = QuadDirection::kUp;
  ScalarGrid mask;
  std::optional<std::vector<Point3>> control_points;
};

MatchTerms ComputeMatchTerms(const MatchPrediction& pred,
                             const MatchTarget& gt,
                             const LossWeights& weights);

// lambda_reg = 0 gives the pure mask matcher; zero mask weights give the
// pure L1 matcher. Throws InvalidInput if lambda_reg > 0 and either side
// lacks control points.
double MatchCost(const MatchPrediction& pred, const MatchTarget& gt,
                 const LossWeights& weights);

// Row per prediction, column per ground truth.
std::vector<std::vector<double>> MatchCostMatrix(
    const std::vector<MatchPrediction>& preds,
    const std::vector<MatchTarget>& gts, const LossWeights& weights);

}  // namespace centerline

#endif  // CENTERLINE_TARGETS_H_
