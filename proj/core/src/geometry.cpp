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

#include "centerline/geometry.h"

#include <cmath>

#include "centerline/error.h"

namespace centerline {

std::string_view DirectionName(QuadDirection d) {
  switch (d) {
    case QuadDirection::kUp:
      return "up";
    case QuadDirection::kDown:
      return "down";
    case QuadDirection::kLeft:
      return "left";
    case QuadDirection::kRight:
      return "right";
  }
  return "up";
}

std::optional<QuadDirection> ParseDirection(std::string_view name) {
  if (name == "up") return QuadDirection::kUp;
  if (name == "down") return QuadDirection::kDown;
  if (name == "left") return QuadDirection::kLeft;
  if (name == "right") return QuadDirection::kRight;
  return std::nullopt;
}

GridSpec::GridSpec()
    : GridSpec(200, 104, 0.5, Vec2{-49.75, -25.75}, -10.0, 10.0) {}

GridSpec::GridSpec(int height_cells, int width_cells, double cell_size_m,
                   Vec2 origin, double z_min_m, double z_max_m)
    : height_cells_(height_cells),
      width_cells_(width_cells),
      cell_size_m_(cell_size_m),
      origin_(origin),
      z_min_m_(z_min_m),
      z_max_m_(z_max_m) {
  if (height_cells <= 0 || width_cells <= 0) {
    throw Error(ErrorCode::kInvalidInput, "grid dimensions must be positive");
  }
  if (!(cell_size_m > 0.0) || !std::isfinite(cell_size_m)) {
    throw Error(ErrorCode::kInvalidInput, "cell size must be positive");
  }
  if (!std::isfinite(origin.x) || !std::isfinite(origin.y) ||
      !std::isfinite(z_min_m) || !std::isfinite(z_max_m)) {
    throw Error(ErrorCode::kInvalidInput, "grid spec must be finite");
  }
  if (!(z_max_m > z_min_m)) {
    throw Error(ErrorCode::kInvalidInput, "z_max must exceed z_min");
  }
}

double GridSpec::NormalizeHeight(double z) const {
  return (z - z_min_m_) / (z_max_m_ - z_min_m_);
}

double GridSpec::DenormalizeHeight(double h) const {
  return z_min_m_ + h * (z_max_m_ - z_min_m_);
}

Point3 GridToWorld(const GridSpec& spec, const GridPoint& p) {
  if (!std::isfinite(p.i) || !std::isfinite(p.j) || !std::isfinite(p.h)) {
    throw Error(ErrorCode::kInvalidInput, "non-finite grid point");
  }
  return Point3{spec.origin().x + p.i * spec.cell_size_m(),
                spec.origin().y + p.j * spec.cell_size_m(),
                spec.DenormalizeHeight(p.h)};
}

GridPoint WorldToGrid(const GridSpec& spec, const Point3& p) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z)) {
    throw Error(ErrorCode::kInvalidInput, "non-finite world point");
  }
  return GridPoint{(p.x - spec.origin().x) / spec.cell_size_m(),
                   (p.y - spec.origin().y) / spec.cell_size_m(),
                   spec.NormalizeHeight(p.z)};
}

}  // namespace centerline
