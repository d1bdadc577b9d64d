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

#ifndef CENTERLINE_BEZIER_H_
#define CENTERLINE_BEZIER_H_

#include <span>
#include <vector>

#include "centerline/geometry.h"
#include "centerline/polyline.h"

namespace centerline {

class BezierCurve {
 public:
  // At least two finite control points; four for the usual cubic.
  explicit BezierCurve(std::vector<Point3> control_points);

  std::span<const Point3> control_points() const { return control_points_; }
  int degree() const { return static_cast<int>(control_points_.size()) - 1; }

  // de Casteljau evaluation; t must lie in [0, 1].
  Point3 Evaluate(double t) const;

  // Evaluation with both blending weights supplied (s = 1 - t); lets
  // callers keep sampling exactly symmetric under control-point reversal.
  Point3 EvaluateWeighted(double s, double t) const;

 private:
  std::vector<Point3> control_points_;
};

enum class BezierSampling {
  kUniformT,    // t = k / (n - 1)
  kArcLength,   // dense uniform-t polyline resampled by arc length
};

// n ordered points along the curve (n >= 2).
Polyline3D SampleBezier(const BezierCurve& curve, int n,
                        BezierSampling sampling = BezierSampling::kUniformT);

}  // namespace centerline

#endif  // CENTERLINE_BEZIER_H_
