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

#ifndef CENTERLINE_GEOMETRY_H_
#define CENTERLINE_GEOMETRY_H_

#include <optional>
#include <string>
#include <string_view>

namespace centerline {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

// World-frame point in meters.
struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend bool operator==(const Point3&, const Point3&) = default;
};

// Grid-frame point: fractional row, fractional column and normalized height.
struct GridPoint {
  double i = 0.0;
  double j = 0.0;
  double h = 0.5;

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

// Coarse flow class of a centerline. Up/Down flow along world x (grid rows),
// Left/Right along world y (grid columns).
enum class QuadDirection { kUp, kDown, kLeft, kRight };

// True for Up/Down: row-wise expectation, y = f(x) fits, x-sorted output.
constexpr bool IsLongitudinal(QuadDirection d) {
  return d == QuadDirection::kUp || d == QuadDirection::kDown;
}

std::string_view DirectionName(QuadDirection d);
std::optional<QuadDirection> ParseDirection(std::string_view name);

// BEV raster geometry. Row index i runs along world x, column index j along
// world y; cell (0, 0) is centered on `origin`.
class GridSpec {
 public:
  // 200 x 104 cells at 0.5 m, centered on the ego origin, z in [-10, 10] m.
  GridSpec();
  GridSpec(int height_cells, int width_cells, double cell_size_m, Vec2 origin,
           double z_min_m, double z_max_m);

  int height_cells() const { return height_cells_; }
  int width_cells() const { return width_cells_; }
  double cell_size_m() const { return cell_size_m_; }
  Vec2 origin() const { return origin_; }
  double z_min_m() const { return z_min_m_; }
  double z_max_m() const { return z_max_m_; }

  double NormalizeHeight(double z) const;
  double DenormalizeHeight(double h) const;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;

 private:
  int height_cells_;
  int width_cells_;
  double cell_size_m_;
  Vec2 origin_;
  double z_min_m_;
  double z_max_m_;
};

// Out-of-range indices extrapolate linearly. Throws InvalidInput on
// non-finite input.
Point3 GridToWorld(const GridSpec& spec, const GridPoint& p);
GridPoint WorldToGrid(const GridSpec& spec, const Point3& p);

}  // namespace centerline

#endif  // CENTERLINE_GEOMETRY_H_
