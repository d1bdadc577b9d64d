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

#ifndef CENTERLINE_SYNTHETIC_H_
#define CENTERLINE_SYNTHETIC_H_

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "centerline/geometry.h"
#include "centerline/io/scene_file.h"
#include "centerline/polyline.h"

namespace centerline::synthetic {

enum class CurveKind { kStraight, kArc, kRamp };

std::string_view CurveKindName(CurveKind kind);

// Deterministic across platforms: draws come straight from mt19937_64 bits
// rather than from the implementation-defined standard distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double Uniform(double lo, double hi);
  int Index(int n);

 private:
  std::mt19937_64 engine_;
};

struct Pose {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double heading = 0.0;  // radians, 0 = +x
};

struct Piece {
  CurveKind kind = CurveKind::kStraight;
  double length_m = 20.0;
  double curvature = 0.0;  // signed 1/R, arcs only
  double slope = 0.0;      // dz/ds, ramps only
};

// Samples `samples` points along a constant-curvature, constant-slope piece.
Polyline3D BuildPiece(const Pose& start, const Piece& piece, int samples = 50);
Pose EndPose(const Pose& start, const Piece& piece);

// One centerline of the given kind that fits inside the default BEV grid,
// heading within 25 degrees of a grid axis.
Polyline3D MakeCenterline(CurveKind kind, Rng& rng);

// Three two-piece chains (six centerlines) with a successor edge inside each
// chain and a footprint around everything.
io::SceneFile MakeDemoScene(std::uint64_t seed);

}  // namespace centerline::synthetic

#endif  // CENTERLINE_SYNTHETIC_H_
