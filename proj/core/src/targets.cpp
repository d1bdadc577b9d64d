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

#include "centerline/targets.h"

#include <algorithm>
#include <cmath>

#include "centerline/error.h"

namespace centerline {
namespace {

constexpr double kProbClamp = 1e-7;

// Sector of a planar delta; ties on |dx| == |dy| go to Up/Down.
QuadDirection Sector(double dx, double dy) {
  if (std::abs(dx) >= std::abs(dy)) {
    if (dx > 0.0) return QuadDirection::kUp;
    if (dx < 0.0) return QuadDirection::kDown;
  } else if (dy > 0.0) {
    return QuadDirection::kRight;
  }
  return QuadDirection::kLeft;
}

double SegmentPlanarDistance(const Point3& a, const Point3& b, double qi,
                             double qj) {
  const double di = b.x - a.x;
  const double dj = b.y - a.y;
  const double len2 = di * di + dj * dj;
  double t = 0.0;
  if (len2 > 0.0) {
    t = std::clamp(((qi - a.x) * di + (qj - a.y) * dj) / len2, 0.0, 1.0);
  }
  return std::hypot(qi - (a.x + t * di), qj - (a.y + t * dj));
}

void RequireBand(double band_radius_cells) {
  if (!(band_radius_cells > 0.0) || !std::isfinite(band_radius_cells)) {
    throw Error(ErrorCode::kInvalidInput, "band radius must be positive");
  }
}

// Offset, band and height fields from one projection of every cell center.
void ProjectCells(const Polyline3D& grid_curve, double band_radius_cells,
                  VectorGrid& offset, ScalarGrid& fg_band, ScalarGrid& height) {
  for (int i = 0; i < offset.rows(); ++i) {
    for (int j = 0; j < offset.cols(); ++j) {
      const CurveProjection proj = ClosestPointOnPolyline(
          grid_curve, Vec2{static_cast<double>(i), static_cast<double>(j)});
      const double oi = proj.point.x - i;
      const double oj = proj.point.y - j;
      offset.at(i, j, 0) = oi;
      offset.at(i, j, 1) = oj;
      const bool in_band = std::hypot(oi, oj) < band_radius_cells;
      fg_band.at(i, j) = in_band ? 1.0 : 0.0;
      height.at(i, j) = in_band ? std::clamp(proj.point.z, 0.0, 1.0) : 0.5;
    }
  }
}

double BandCount(const ScalarGrid& fg_band) {
  double n = 0.0;
  for (double v : fg_band.data()) n += v;
  if (!(n > 0.0)) {
    throw Error(ErrorCode::kEmptyBand, "supervision band has no active cell");
  }
  return n;
}

double MeanL1(const std::vector<Point3>& a, const std::vector<Point3>& b) {
  if (a.size() != b.size() || a.empty()) {
    throw Error(ErrorCode::kInvalidInput,
                "control point counts differ or are empty");
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    sum += std::abs(a[k].x - b[k].x) + std::abs(a[k].y - b[k].y) +
           std::abs(a[k].z - b[k].z);
  }
  return sum / static_cast<double>(a.size());
}

}  // namespace

QuadDirection QuadDirectionLabel(const Polyline3D& curve) {
  std::array<int, 4> votes{};
  int total = 0;
  const auto pts = curve.points();
  for (std::size_t k = 1; k < pts.size(); ++k) {
    const double dx = pts[k].x - pts[k - 1].x;
    const double dy = pts[k].y - pts[k - 1].y;
    if (dx == 0.0 && dy == 0.0) continue;
    ++votes[static_cast<std::size_t>(Sector(dx, dy))];
    ++total;
  }
  if (total == 0) {
    throw Error(ErrorCode::kInvalidInput,
                "curve has no planar extent to label");
  }
  const int best = *std::max_element(votes.begin(), votes.end());
  const auto winners = std::count(votes.begin(), votes.end(), best);
  if (winners == 1) {
    return static_cast<QuadDirection>(
        std::max_element(votes.begin(), votes.end()) - votes.begin());
  }
  return Sector(pts.back().x - pts.front().x, pts.back().y - pts.front().y);
}

Polyline3D ToGridFrame(const Polyline3D& world_curve, const GridSpec& spec) {
  std::vector<Point3> out;
  out.reserve(world_curve.size());
  for (const Point3& p : world_curve.points()) {
    const GridPoint g = WorldToGrid(spec, p);
    out.push_back(Point3{g.i, g.j, g.h});
  }
  return Polyline3D(std::move(out));
}

RasterResult RasterizeCenterline(const Polyline3D& curve, const GridSpec& spec,
                                 int width_cells) {
  if (width_cells < 1) {
    throw Error(ErrorCode::kInvalidInput, "mask width must be >= 1 cell");
  }
  const Polyline3D g = ToGridFrame(curve, spec);
  const double radius = 0.5 * width_cells;
  RasterResult result{ScalarGrid(spec), true};
  const auto pts = g.points();
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    const Point3& a = pts[k];
    const Point3& b = pts[k + 1];
    const int i0 = std::max(0, static_cast<int>(std::floor(std::min(a.x, b.x) - radius)));
    const int i1 = std::min(spec.height_cells() - 1,
                            static_cast<int>(std::ceil(std::max(a.x, b.x) + radius)));
    const int j0 = std::max(0, static_cast<int>(std::floor(std::min(a.y, b.y) - radius)));
    const int j1 = std::min(spec.width_cells() - 1,
                            static_cast<int>(std::ceil(std::max(a.y, b.y) + radius)));
    for (int i = i0; i <= i1; ++i) {
      for (int j = j0; j <= j1; ++j) {
        if (result.mask.at(i, j) != 0.0) continue;
        if (SegmentPlanarDistance(a, b, i, j) < radius) {
          result.mask.at(i, j) = 1.0;
          result.empty = false;
        }
      }
    }
  }
  return result;
}

OffsetTargets TargetOffsetField(const Polyline3D& curve, const GridSpec& spec,
                                double band_radius_cells) {
  RequireBand(band_radius_cells);
  OffsetTargets out{VectorGrid(spec), ScalarGrid(spec)};
  ScalarGrid height(spec, 0.5);
  ProjectCells(ToGridFrame(curve, spec), band_radius_cells, out.offset,
               out.fg_band, height);
  return out;
}

ScalarGrid TargetHeightField(const Polyline3D& curve, const GridSpec& spec,
                             double band_radius_cells) {
  RequireBand(band_radius_cells);
  VectorGrid offset(spec);
  ScalarGrid fg_band(spec);
  ScalarGrid height(spec, 0.5);
  ProjectCells(ToGridFrame(curve, spec), band_radius_cells, offset, fg_band,
               height);
  return height;
}

TargetBundle MakeTargets(const Polyline3D& curve, const GridSpec& spec,
                         const TargetConfig& config) {
  RequireBand(config.band_radius_cells);
  RasterResult raster = RasterizeCenterline(curve, spec, config.mask_width_cells);
  TargetBundle bundle{std::move(raster.mask), VectorGrid(spec),
                      ScalarGrid(spec, 0.5), ScalarGrid(spec), raster.empty};
  ProjectCells(ToGridFrame(curve, spec), config.band_radius_cells,
               bundle.offset, bundle.fg_band, bundle.height);
  return bundle;
}

double OffsetLoss(const VectorGrid& pred, const VectorGrid& target,
                  const ScalarGrid& fg_band) {
  RequireSameShape(pred, target, "offset loss");
  RequireSameShape(pred, fg_band, "offset loss");
  const double n = BandCount(fg_band);
  double sum = 0.0;
  for (int i = 0; i < pred.rows(); ++i) {
    for (int j = 0; j < pred.cols(); ++j) {
      const double m = fg_band.at(i, j);
      if (m == 0.0) continue;
      sum += m * (std::abs(pred.at(i, j, 0) - target.at(i, j, 0)) +
                  std::abs(pred.at(i, j, 1) - target.at(i, j, 1)));
    }
  }
  return sum / n;
}

double HeightLoss(const ScalarGrid& pred, const ScalarGrid& target,
                  const ScalarGrid& fg_band) {
  RequireSameShape(pred, target, "height loss");
  RequireSameShape(pred, fg_band, "height loss");
  const double n = BandCount(fg_band);
  double sum = 0.0;
  for (int i = 0; i < pred.rows(); ++i) {
    for (int j = 0; j < pred.cols(); ++j) {
      const double m = fg_band.at(i, j);
      if (m == 0.0) continue;
      sum += m * std::abs(pred.at(i, j) - target.at(i, j));
    }
  }
  return sum / n;
}

MaskLossTerms MaskLoss(const ScalarGrid& pred_prob, const ScalarGrid& gt_mask) {
  RequireSameShape(pred_prob, gt_mask, "mask loss");
  RequireProbabilities(pred_prob, "mask loss prediction");
  RequireProbabilities(gt_mask, "mask loss ground truth");
  double bce = 0.0;
  double inter = 0.0;
  double sum_p = 0.0;
  double sum_g = 0.0;
  const auto p_data = pred_prob.data();
  const auto g_data = gt_mask.data();
  for (std::size_t k = 0; k < p_data.size(); ++k) {
    const double p = std::clamp(p_data[k], kProbClamp, 1.0 - kProbClamp);
    const double g = g_data[k];
    bce -= g * std::log(p) + (1.0 - g) * std::log(1.0 - p);
    inter += p * g;
    sum_p += p;
    sum_g += g;
  }
  return MaskLossTerms{bce / static_cast<double>(p_data.size()),
                       1.0 - 2.0 * inter / (sum_p + sum_g)};
}

double CombineMatchCost(const MatchTerms& terms, const LossWeights& w) {
  return w.lambda_cls * terms.class_cost + w.lambda_reg * terms.regression +
         w.lambda_mask_bce * terms.bce + w.lambda_mask_dice * terms.dice;
}

MatchTerms ComputeMatchTerms(const MatchPrediction& pred, const MatchTarget& gt,
                             const LossWeights& w) {
  for (double v : {w.lambda_cls, w.lambda_reg, w.lambda_mask_bce,
                   w.lambda_mask_dice, w.lambda_offset, w.lambda_height}) {
    if (!(v >= 0.0)) {
      throw Error(ErrorCode::kInvalidInput, "loss weights must be >= 0");
    }
  }
  const double p = pred.class_probs[static_cast<std::size_t>(gt.direction)];
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kInvalidInput, "class probability outside [0, 1]");
  }
  MatchTerms terms;
  terms.class_cost = 1.0 - p;
  if (w.lambda_reg > 0.0) {
    if (!pred.control_points || !gt.control_points) {
      throw Error(ErrorCode::kInvalidInput,
                  "regression matching needs control points on both sides");
    }
    terms.regression = MeanL1(*pred.control_points, *gt.control_points);
  }
  if (w.lambda_mask_bce > 0.0 || w.lambda_mask_dice > 0.0) {
    const MaskLossTerms mask = MaskLoss(pred.prob_map, gt.mask);
    terms.bce = mask.bce;
    terms.dice = mask.dice;
  }
  return terms;
}

double MatchCost(const MatchPrediction& pred, const MatchTarget& gt,
                 const LossWeights& weights) {
  return CombineMatchCost(ComputeMatchTerms(pred, gt, weights), weights);
}

std::vector<std::vector<double>> MatchCostMatrix(
    const std::vector<MatchPrediction>& preds,
    const std::vector<MatchTarget>& gts, const LossWeights& weights) {
  std::vector<std::vector<double>> cost(preds.size(),
                                        std::vector<double>(gts.size()));
  for (std::size_t r = 0; r < preds.size(); ++r) {
    for (std::size_t c = 0; c < gts.size(); ++c) {
      cost[r][c] = MatchCost(preds[r], gts[c], weights);
    }
  }
  return cost;
}

}  // namespace centerline
