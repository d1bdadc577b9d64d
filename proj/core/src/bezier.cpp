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

#include "centerline/bezier.h"

#include <algorithm>
#include <cmath>

#include "centerline/error.h"

namespace centerline {
namespace {

constexpr int kArcLengthDensity = 1000;

}  // namespace

BezierCurve::BezierCurve(std::vector<Point3> control_points)
    : control_points_(std::move(control_points)) {
  if (control_points_.size() < 2) {
    throw Error(ErrorCode::kInvalidInput, "Bezier curve needs >= 2 control points");
  }
  for (const Point3& p : control_points_) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z)) {
      throw Error(ErrorCode::kInvalidInput, "control point is not finite");
    }
  }
}

Point3 BezierCurve::Evaluate(double t) const {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw Error(ErrorCode::kInvalidInput, "Bezier parameter outside [0, 1]");
  }
  return EvaluateWeighted(1.0 - t, t);
}

Point3 BezierCurve::EvaluateWeighted(double s, double t) const {
  std::vector<Point3> work = control_points_;
  for (std::size_t level = work.size() - 1; level > 0; --level) {
    for (std::size_t k = 0; k < level; ++k) {
      work[k] = Point3{s * work[k].x + t * work[k + 1].x,
                       s * work[k].y + t * work[k + 1].y,
                       s * work[k].z + t * work[k + 1].z};
    }
  }
  return work[0];
}

Polyline3D SampleBezier(const BezierCurve& curve, int n, BezierSampling sampling) {
  if (n < 2) {
    throw Error(ErrorCode::kInvalidInput, "sample count must be >= 2");
  }
  const int count = sampling == BezierSampling::kUniformT
                        ? n
                        : std::max(n, kArcLengthDensity);
  std::vector<Point3> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    const double t = static_cast<double>(k) / (count - 1);
    const double s = static_cast<double>(count - 1 - k) / (count - 1);
    pts.push_back(curve.EvaluateWeighted(s, t));
  }
  Polyline3D poly(std::move(pts));
  if (sampling == BezierSampling::kUniformT) return poly;
  return ArcLengthResample(poly, n);
}

}  // namespace centerline
