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

#include "centerline/pipeline.h"

namespace centerline {

std::optional<ProposalMode> ParseProposalMode(std::string_view name) {
  if (name == "none") return ProposalMode::kNone;
  if (name == "single") return ProposalMode::kSingle;
  if (name == "multi") return ProposalMode::kMulti;
  return std::nullopt;
}

std::string_view ProposalModeName(ProposalMode mode) {
  switch (mode) {
    case ProposalMode::kNone:
      return "none";
    case ProposalMode::kSingle:
      return "single";
    case ProposalMode::kMulti:
      return "multi";
  }
  return "multi";
}

InstanceOutput RunMaskPipeline(const CenterlineInstance& instance,
                               const PipelineConfig& config) {
  instance.Validate(instance.bezier_cp ? static_cast<int>(instance.bezier_cp->size())
                                       : 4);
  const ScalarGrid mask = Binarize(instance.prob_map, config.tau);
  GridPointSet points;
  switch (config.proposal) {
    case ProposalMode::kNone:
      points = ExpectationExtract(mask, instance.direction);
      break;
    case ProposalMode::kSingle:
      points = SinglePointProposal(ExpectationExtract(mask, instance.direction),
                                   instance.offset, instance.height);
      break;
    case ProposalMode::kMulti:
      points = MultiPointProposal(mask, instance.offset, instance.height);
      break;
  }
  Reconstruction recon = ReconstructCurve(points, instance.direction,
                                          instance.prob_map.spec(),
                                          config.reconstruction);
  if (config.fuse && instance.bezier_cp) {
    const Polyline3D bezier =
        SampleBezier(BezierCurve(*instance.bezier_cp),
                     config.reconstruction.n_output_points, config.bezier_sampling);
    Polyline3D fused = FuseOutputs(recon.curve, bezier);
    return InstanceOutput{std::move(fused), std::move(recon), true};
  }
  Polyline3D curve = recon.curve;
  return InstanceOutput{std::move(curve), std::move(recon), false};
}

}  // namespace centerline
