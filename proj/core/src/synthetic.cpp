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

#include "centerline/synthetic.h"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace centerline::synthetic {
namespace {

constexpr double kMaxJitter = 25.0 * std::numbers::pi / 180.0;

// Heading near one of the four axes, and the chain length that fits the
// default grid along it.
std::pair<double, double> DrawHeading(Rng& rng, double x_len_lo, double x_len_hi,
                                      double y_len_lo, double y_len_hi) {
  const int quadrant = rng.Index(4);
  const double heading =
      quadrant * std::numbers::pi / 2.0 + rng.Uniform(-kMaxJitter, kMaxJitter);
  const bool along_x = quadrant % 2 == 0;
  const double length = along_x ? rng.Uniform(x_len_lo, x_len_hi)
                                : rng.Uniform(y_len_lo, y_len_hi);
  return {heading, length};
}

Piece DrawPiece(CurveKind kind, double length, Rng& rng) {
  Piece p;
  p.kind = kind;
  p.length_m = length;
  if (kind == CurveKind::kArc) {
    const double radius = rng.Uniform(60.0, 120.0);
    p.curvature = (rng.Index(2) == 0 ? 1.0 : -1.0) / radius;
  } else if (kind == CurveKind::kRamp) {
    p.slope = rng.Uniform(-0.1, 0.1);
  }
  return p;
}

Pose CenteredStart(double heading, double length, Rng& rng) {
  const double mx = rng.Uniform(-10.0, 10.0);
  const double my = rng.Uniform(-5.0, 5.0);
  return Pose{mx - 0.5 * length * std::cos(heading),
              my - 0.5 * length * std::sin(heading), 0.0, heading};
}

}  // namespace

std::string_view CurveKindName(CurveKind kind) {
  switch (kind) {
    case CurveKind::kStraight:
      return "straight";
    case CurveKind::kArc:
      return "arc";
    case CurveKind::kRamp:
      return "ramp";
  }
  return "straight";
}

double Rng::Uniform(double lo, double hi) {
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

int Rng::Index(int n) {
  return static_cast<int>(engine_() % static_cast<std::uint64_t>(n));
}

Pose EndPose(const Pose& start, const Piece& piece) {
  const double s = piece.length_m;
  Pose end = start;
  if (piece.curvature == 0.0) {
    end.x += s * std::cos(start.heading);
    end.y += s * std::sin(start.heading);
  } else {
    const double k = piece.curvature;
    end.heading = start.heading + k * s;
    end.x += (std::sin(end.heading) - std::sin(start.heading)) / k;
    end.y -= (std::cos(end.heading) - std::cos(start.heading)) / k;
  }
  end.z += piece.slope * s;
  return end;
}

Polyline3D BuildPiece(const Pose& start, const Piece& piece, int samples) {
  std::vector<Point3> pts;
  pts.reserve(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) {
    Piece part = piece;
    part.length_m = piece.length_m * k / (samples - 1);
    const Pose p = EndPose(start, part);
    pts.push_back(Point3{p.x, p.y, p.z});
  }
  return Polyline3D(std::move(pts));
}

Polyline3D MakeCenterline(CurveKind kind, Rng& rng) {
  const auto [heading, length] = DrawHeading(rng, 20.0, 40.0, 20.0, 30.0);
  const Piece piece = DrawPiece(kind, length, rng);
  Pose start = CenteredStart(heading, length, rng);
  start.z = kind == CurveKind::kRamp ? rng.Uniform(-2.0, 2.0) : rng.Uniform(-1.0, 1.0);
  return BuildPiece(start, piece, kind == CurveKind::kArc ? 100 : 50);
}

io::SceneFile MakeDemoScene(std::uint64_t seed) {
  Rng rng(seed);
  io::SceneFile scene;
  double min_x = 1e9, max_x = -1e9, min_y = 1e9, max_y = -1e9;
  std::int64_t next_id = 0;
  for (int chain = 0; chain < 3; ++chain) {
    const auto [heading, length] = DrawHeading(rng, 30.0, 40.0, 24.0, 30.0);
    Pose pose = CenteredStart(heading, length, rng);
    pose.z = rng.Uniform(-1.0, 1.0);
    const double split = rng.Uniform(0.4, 0.6);
    std::int64_t prev = -1;
    for (double part : {split, 1.0 - split}) {
      const auto kind = static_cast<CurveKind>(rng.Index(3));
      const Piece piece = DrawPiece(kind, part * length, rng);
      Polyline3D curve = BuildPiece(pose, piece);
      for (const Point3& p : curve.points()) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
      }
      const std::int64_t id = next_id++;
      scene.instances.push_back(
          io::SceneInstance{id, std::nullopt, 1.0, std::move(curve), std::nullopt});
      if (prev >= 0) scene.edges.push_back({prev, id, 1.0});
      prev = id;
      pose = EndPose(pose, piece);
    }
  }
  scene.footprint = metrics::Footprint{{min_x - 5.0, min_y - 5.0},
                                       {max_x + 5.0, min_y - 5.0},
                                       {max_x + 5.0, max_y + 5.0},
                                       {min_x - 5.0, max_y + 5.0}};
  return scene;
}

}  // namespace centerline::synthetic
