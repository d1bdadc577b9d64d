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

#include "centerline/polyline.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "centerline/error.h"

namespace centerline {

Polyline3D::Polyline3D(std::vector<Point3> points) : points_(std::move(points)) {
  if (points_.size() < 2) {
    throw Error(ErrorCode::kInvalidInput, "polyline needs at least 2 points");
  }
  cumulative_.reserve(points_.size());
  cumulative_.push_back(0.0);
  for (std::size_t k = 0; k < points_.size(); ++k) {
    const Point3& p = points_[k];
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z)) {
      throw Error(ErrorCode::kInvalidInput, "polyline point is not finite");
    }
    if (k == 0) continue;
    const double d = Distance(points_[k - 1], p);
    if (!(d > kMinSegment)) {
      throw Error(ErrorCode::kInvalidInput,
                  "polyline has repeated consecutive points");
    }
    cumulative_.push_back(cumulative_.back() + d);
  }
  if (!std::isfinite(cumulative_.back())) {
    throw Error(ErrorCode::kInvalidInput, "polyline length is not finite");
  }
}

Polyline3D Polyline3D::Reversed() const {
  return Polyline3D(std::vector<Point3>(points_.rbegin(), points_.rend()));
}

double Distance(const Point3& a, const Point3& b) {
  const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

double PlanarDistance(const Point3& a, const Point3& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

CurveProjection ClosestPointOnPolyline(const Polyline3D& curve, Vec2 q) {
  CurveProjection best;
  best.planar_distance = std::numeric_limits<double>::infinity();
  const auto pts = curve.points();
  const auto cum = curve.cumulative_length();
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    const Point3& a = pts[k];
    const Point3& b = pts[k + 1];
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    double t = 0.0;
    // A purely vertical segment projects onto its lower-arc endpoint.
    if (len2 > 0.0) {
      t = std::clamp(((q.x - a.x) * dx + (q.y - a.y) * dy) / len2, 0.0, 1.0);
    }
    const Point3 p{a.x + t * dx, a.y + t * dy, a.z + t * (b.z - a.z)};
    const double d = std::hypot(q.x - p.x, q.y - p.y);
    if (d < best.planar_distance) {
      best.point = p;
      best.arc_param = cum[k] + t * (cum[k + 1] - cum[k]);
      best.planar_distance = d;
    }
  }
  return best;
}

Point3 PointAtArcLength(const Polyline3D& curve, double s) {
  const auto pts = curve.points();
  const auto cum = curve.cumulative_length();
  if (s <= 0.0) return pts.front();
  if (s >= cum.back()) return pts.back();
  // First vertex with cumulative length > s; the segment ends there.
  const auto it = std::upper_bound(cum.begin(), cum.end(), s);
  const std::size_t k = static_cast<std::size_t>(it - cum.begin());
  const Point3& a = pts[k - 1];
  const Point3& b = pts[k];
  const double t = (s - cum[k - 1]) / (cum[k] - cum[k - 1]);
  return Point3{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y),
                a.z + t * (b.z - a.z)};
}

Polyline3D ArcLengthResample(const Polyline3D& curve, int n) {
  if (n < 2) {
    throw Error(ErrorCode::kInvalidInput, "resample count must be >= 2");
  }
  std::vector<Point3> out;
  out.reserve(static_cast<std::size_t>(n));
  out.push_back(curve.front());
  const double total = curve.Length();
  for (int k = 1; k + 1 < n; ++k) {
    out.push_back(PointAtArcLength(curve, total * k / (n - 1)));
  }
  out.push_back(curve.back());
  return Polyline3D(std::move(out));
}

}  // namespace centerline
