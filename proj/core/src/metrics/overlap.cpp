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

#include "centerline/metrics/overlap.h"

#include <cmath>

// Without this, 1.74 snaps intersection points to a rescaled integer grid
// and a quarter overlap of unit squares comes out near 0.25000004.
#define BOOST_GEOMETRY_NO_ROBUSTNESS

#include <boost/geometry.hpp>
#include <boost/geometry/geometries/point_xy.hpp>
#include <boost/geometry/geometries/polygon.hpp>

#include "centerline/error.h"

namespace centerline::metrics {
namespace {

namespace bg = boost::geometry;
using BgPoint = bg::model::d2::point_xy<double>;
using BgPolygon = bg::model::polygon<BgPoint>;
using BgMultiPolygon = bg::model::multi_polygon<BgPolygon>;

BgPolygon ToPolygon(const Footprint& ring) {
  if (ring.size() < 3) {
    throw Error(ErrorCode::kInvalidInput, "footprint needs >= 3 vertices");
  }
  BgPolygon poly;
  for (const Vec2& p : ring) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw Error(ErrorCode::kInvalidInput, "footprint vertex is not finite");
    }
    bg::append(poly.outer(), BgPoint(p.x, p.y));
  }
  bg::correct(poly);
  std::string reason;
  if (!bg::is_valid(poly, reason)) {
    throw Error(ErrorCode::kInvalidInput, "malformed footprint: " + reason);
  }
  return poly;
}

double Area(const BgPolygon& a, const BgPolygon& b) {
  BgMultiPolygon out;
  bg::intersection(a, b, out);
  return bg::area(out);
}

}  // namespace

double IntersectionArea(const Footprint& a, const Footprint& b) {
  return Area(ToPolygon(a), ToPolygon(b));
}

OverlapReport AuditGeographicOverlap(const std::vector<Footprint>& train,
                                     const std::vector<Footprint>& val) {
  std::vector<BgPolygon> t;
  std::vector<BgPolygon> v;
  for (const Footprint& f : train) t.push_back(ToPolygon(f));
  for (const Footprint& f : val) v.push_back(ToPolygon(f));
  OverlapReport report;
  for (const BgPolygon& a : t) {
    for (const BgPolygon& b : v) {
      const double area = Area(a, b);
      if (area > kMinOverlapArea) {
        report.total_area += area;
        ++report.intersecting_pairs;
      }
    }
  }
  report.disjoint = report.intersecting_pairs == 0;
  return report;
}

}  // namespace centerline::metrics
