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

#include "centerline/metrics/curve_distance.h"

#include <algorithm>
#include <limits>
#include <vector>

namespace centerline::metrics {

double DiscreteFrechet(const Polyline3D& a, const Polyline3D& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  std::vector<double> prev(m);
  std::vector<double> cur(m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double d = Distance(a[i], b[j]);
      double reach;
      if (i == 0 && j == 0) {
        reach = d;
      } else if (i == 0) {
        reach = std::max(cur[j - 1], d);
      } else if (j == 0) {
        reach = std::max(prev[0], d);
      } else {
        reach = std::max(std::min({prev[j], prev[j - 1], cur[j - 1]}), d);
      }
      cur[j] = reach;
    }
    std::swap(prev, cur);
  }
  return prev[m - 1];
}

namespace {

double MeanNearest(const Polyline3D& from, const Polyline3D& to) {
  double sum = 0.0;
  for (const Point3& p : from.points()) {
    double best = std::numeric_limits<double>::infinity();
    for (const Point3& q : to.points()) best = std::min(best, Distance(p, q));
    sum += best;
  }
  return sum / static_cast<double>(from.size());
}

}  // namespace

double Chamfer(const Polyline3D& a, const Polyline3D& b) {
  return 0.5 * (MeanNearest(a, b) + MeanNearest(b, a));
}

}  // namespace centerline::metrics
