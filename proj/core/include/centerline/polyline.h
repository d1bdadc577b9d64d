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

#ifndef CENTERLINE_POLYLINE_H_
#define CENTERLINE_POLYLINE_H_

#include <span>
#include <vector>

#include "centerline/geometry.h"

namespace centerline {

// Ordered piecewise-linear 3D curve with at least two points and no
// repeated consecutive points. Immutable once built.
class Polyline3D {
 public:
  // Minimum separation between consecutive points, in the polyline's units.
  static constexpr double kMinSegment = 1e-9;

  explicit Polyline3D(std::vector<Point3> points);

  std::span<const Point3> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const Point3& operator[](std::size_t k) const { return points_[k]; }
  const Point3& front() const { return points_.front(); }
  const Point3& back() const { return points_.back(); }

  // Cumulative 3D arc length at each vertex; front is 0, back is Length().
  std::span<const double> cumulative_length() const { return cumulative_; }
  double Length() const { return cumulative_.back(); }

  Polyline3D Reversed() const;

  friend bool operator==(const Polyline3D& a, const Polyline3D& b) {
    return a.points_ == b.points_;
  }

 private:
  std::vector<Point3> points_;
  std::vector<double> cumulative_;
};

double Distance(const Point3& a, const Point3& b);
double PlanarDistance(const Point3& a, const Point3& b);

struct CurveProjection {
  Point3 point;           // closest point, z interpolated along its segment
  double arc_param = 0;   // 3D arc length from the first vertex
  double planar_distance = 0;
};

// Closest point on the curve to q measured in the (x, y) plane. Ties go to
// the smallest arc parameter.
CurveProjection ClosestPointOnPolyline(const Polyline3D& curve, Vec2 q);

// Point at arc length s (clamped to [0, Length()]).
Point3 PointAtArcLength(const Polyline3D& curve, double s);

// n points equally spaced by arc length; endpoints are copied exactly.
Polyline3D ArcLengthResample(const Polyline3D& curve, int n);

}  // namespace centerline

#endif  // CENTERLINE_POLYLINE_H_
