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

#ifndef CENTERLINE_PIPELINE_H_
#define CENTERLINE_PIPELINE_H_

#include <optional>
#include <string_view>

#include "centerline/bezier.h"
#include "centerline/extraction.h"
#include "centerline/reconstruction.h"

namespace centerline {

enum class ProposalMode {
  kNone,    // expectation baseline, no offset or height correction
  kSingle,  // offsets and heights on the baseline points only
  kMulti,   // offsets and heights on every foreground cell
};

std::optional<ProposalMode> ParseProposalMode(std::string_view name);
std::string_view ProposalModeName(ProposalMode mode);

struct PipelineConfig {
  double tau = kDefaultTau;
  ProposalMode proposal = ProposalMode::kMulti;
  ReconstructionConfig reconstruction;
  bool fuse = false;
  BezierSampling bezier_sampling = BezierSampling::kUniformT;
};

struct InstanceOutput {
  Polyline3D curve;           // fused when fusion ran
  Reconstruction mask_path;
  bool fused = false;
};

// Binarize -> extract/propose -> reconstruct, then optional fusion with the
// sampled Bezier path when the instance carries control points.
InstanceOutput RunMaskPipeline(const CenterlineInstance& instance,
                               const PipelineConfig& config = {});

}  // namespace centerline

#endif  // CENTERLINE_PIPELINE_H_
