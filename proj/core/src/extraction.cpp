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

#include "centerline/extraction.h"

#include <algorithm>
#include <cmath>

#include "centerline/error.h"

namespace centerline {
namespace {

int RoundHalfUp(double v) { return static_cast<int>(std::floor(v + 0.5)); }

bool IsForeground(double v) { return v != 0.0; }

}  // namespace

void CenterlineInstance::Validate(int control_point_count) const {
  if (!(class_confidence >= 0.0 && class_confidence <= 1.0)) {
    throw Error(ErrorCode::kInvalidInput, "class confidence outside [0, 1]");
  }
  if (!(prob_map.spec() == offset.spec()) ||
      !(prob_map.spec() == height.spec())) {
    throw Error(ErrorCode::kInvalidInput,
                "instance grids do not share one grid spec");
  }
  RequireProbabilities(prob_map, "instance probability map");
  if (bezier_cp && static_cast<int>(bezier_cp->size()) != control_point_count) {
    throw Error(ErrorCode::kInvalidInput, "unexpected control point count");
  }
}

ScalarGrid Binarize(const ScalarGrid& prob, double tau) {
  if (!(tau > 0.0 && tau < 1.0)) {
    throw Error(ErrorCode::kInvalidInput, "tau must lie in (0, 1)");
  }
  ScalarGrid out(prob.spec());
  const auto in = prob.data();
  auto dst = out.mutable_data();
  for (std::size_t k = 0; k < in.size(); ++k) {
    dst[k] = in[k] >= tau ? 1.0 : 0.0;
  }
  return out;
}

GridPointSet ExpectationExtract(const ScalarGrid& mask, QuadDirection dir) {
  GridPointSet out;
  out.provenance = Provenance::kBaseline;
  if (IsLongitudinal(dir)) {
    for (int i = 0; i < mask.rows(); ++i) {
      double weight = 0.0;
      double moment = 0.0;
      for (int j = 0; j < mask.cols(); ++j) {
        const double r = mask.at(i, j);
        weight += r;
        moment += r * j;
      }
      if (weight > 0.0) {
        out.points.push_back(GridPoint{static_cast<double>(i), moment / weight, 0.5});
      }
    }
  } else {
    for (int j = 0; j < mask.cols(); ++j) {
      double weight = 0.0;
      double moment = 0.0;
      for (int i = 0; i < mask.rows(); ++i) {
        const double r = mask.at(i, j);
        weight += r;
        moment += r * i;
      }
      if (weight > 0.0) {
        out.points.push_back(GridPoint{moment / weight, static_cast<double>(j), 0.5});
      }
    }
  }
  if (out.points.empty()) {
    throw Error(ErrorCode::kEmptyMask, "mask has no foreground cell");
  }
  return out;
}

GridPointSet SinglePointProposal(const GridPointSet& baseline,
                                 const VectorGrid& offset,
                                 const ScalarGrid& height) {
  RequireSameShape(offset, height, "single point proposal");
  GridPointSet out;
  out.provenance = Provenance::kSingleProposal;
  out.points.reserve(baseline.points.size());
  for (const GridPoint& p : baseline.points) {
    int ci = RoundHalfUp(p.i);
    int cj = RoundHalfUp(p.j);
    if (!offset.Contains(ci, cj)) {
      ++out.clamped_samples;
      ci = std::clamp(ci, 0, offset.rows() - 1);
      cj = std::clamp(cj, 0, offset.cols() - 1);
    }
    out.points.push_back(GridPoint{p.i + offset.at(ci, cj, 0),
                                   p.j + offset.at(ci, cj, 1),
                                   height.at(ci, cj)});
  }
  return out;
}

GridPointSet MultiPointProposal(const ScalarGrid& mask, const VectorGrid& offset,
                                const ScalarGrid& height) {
  RequireSameShape(mask, offset, "multi point proposal");
  RequireSameShape(mask, height, "multi point proposal");
  GridPointSet out;
  out.provenance = Provenance::kMultiProposal;
  for (int i = 0; i < mask.rows(); ++i) {
    for (int j = 0; j < mask.cols(); ++j) {
      if (!IsForeground(mask.at(i, j))) continue;
      out.points.push_back(GridPoint{i + offset.at(i, j, 0),
                                     j + offset.at(i, j, 1), height.at(i, j)});
    }
  }
  if (out.points.empty()) {
    throw Error(ErrorCode::kEmptyMask, "mask has no foreground cell");
  }
  return out;
}

}  // namespace centerline
