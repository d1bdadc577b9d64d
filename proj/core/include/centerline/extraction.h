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

#ifndef CENTERLINE_EXTRACTION_H_
#define CENTERLINE_EXTRACTION_H_

#include <optional>
#include <vector>

#include "centerline/geometry.h"
#include "centerline/grid.h"

namespace centerline {

// One decoder query's outputs. All grids share one GridSpec.
struct CenterlineInstance {
  QuadDirection direction = QuadDirection::kUp;
  double class_confidence = 1.0;
  ScalarGrid prob_map;
  VectorGrid offset;
  ScalarGrid height;
  std::optional<std::vector<Point3>> bezier_cp;

  // Throws InvalidInput on a broken invariant.
  void Validate(int control_point_count = 4) const;
};

enum class Provenance { kBaseline, kSingleProposal, kMultiProposal };

struct GridPointSet {
  std::vector<GridPoint> points;
  Provenance provenance = Provenance::kBaseline;
  // Single proposal only: samples whose rounded cell fell off the grid and
  // were read from the nearest border cell instead.
  int clamped_samples = 0;
};

constexpr double kDefaultTau = 0.95;

// R(i, j) = [prob(i, j) >= tau], tau in (0, 1).
ScalarGrid Binarize(const ScalarGrid& prob, double tau = kDefaultTau);

// Row-wise (Up/Down) or column-wise (Left/Right) centroid of the foreground.
// Points come out in scan order of the expectation axis with h = 0.5.
// Throws EmptyMask when the mask has no foreground.
GridPointSet ExpectationExtract(const ScalarGrid& mask, QuadDirection dir);

// Moves every baseline point by the offset of its nearest cell (round half
// up) and attaches that cell's height.
GridPointSet SinglePointProposal(const GridPointSet& baseline,
                                 const VectorGrid& offset,
                                 const ScalarGrid& height);

// One refined point per foreground cell, ascending (i, then j).
GridPointSet MultiPointProposal(const ScalarGrid& mask, const VectorGrid& offset,
                                const ScalarGrid& height);

}  // namespace centerline

#endif  // CENTERLINE_EXTRACTION_H_
