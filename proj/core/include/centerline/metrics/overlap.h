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

#ifndef CENTERLINE_METRICS_OVERLAP_H_
#define CENTERLINE_METRICS_OVERLAP_H_

#include <vector>

#include "centerline/geometry.h"

namespace centerline::metrics {

// Simple polygon ring in a shared planar frame (meters); either winding,
// closing vertex optional.
using Footprint = std::vector<Vec2>;

struct OverlapReport {
  double total_area = 0.0;     // summed over intersecting train/val pairs
  int intersecting_pairs = 0;  // pairs with area > kMinOverlapArea
  bool disjoint = true;
};

inline constexpr double kMinOverlapArea = 1e-6;

double IntersectionArea(const Footprint& a, const Footprint& b);

// Throws InvalidInput on a malformed polygon (fewer than 3 distinct
// vertices, non-finite, self-intersecting).
OverlapReport AuditGeographicOverlap(const std::vector<Footprint>& train,
                                     const std::vector<Footprint>& val);

}  // namespace centerline::metrics

#endif  // CENTERLINE_METRICS_OVERLAP_H_
