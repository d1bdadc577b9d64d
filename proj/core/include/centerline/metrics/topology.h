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

#ifndef CENTERLINE_METRICS_TOPOLOGY_H_
#define CENTERLINE_METRICS_TOPOLOGY_H_

#include <cstdint>
#include <span>
#include <vector>

#include "centerline/polyline.h"

namespace centerline::metrics {

struct GraphVertex {
  std::int64_t id = 0;
  Polyline3D curve;
  double confidence = 1.0;
};

struct GraphEdge {
  std::int64_t src = 0;
  std::int64_t dst = 0;
  double confidence = 1.0;
};

// Centerlines plus directed lane-to-lane adjacency.
struct SceneGraph {
  std::vector<GraphVertex> vertices;
  std::vector<GraphEdge> edges;

  // Unique ids, edges between existing vertices, no self-loops, all
  // confidences in [0, 1]. Throws InvalidInput.
  void Validate() const;
  // Vertex position for an id, or -1.
  int IndexOf(std::int64_t id) const;
};

struct TopologyConfig {
  std::vector<double> thresholds{1.0, 2.0, 3.0};  // Frechet, meters
  double ranking_threshold = 0.5;                 // only P > this is ranked
  double unmatched_negative_penalty = 0.5 + 1e-3;
  bool remap = false;
  double remap_floor = 0.05;
  double remap_bonus = 1.0;
  // Divide by 2 |thresholds| |V| counting undefined APs as 0, instead of
  // averaging over the (vertex, direction, threshold) triples with at least
  // one ground-truth neighbor.
  bool strict_denominator = false;
};

// Raw sums that pool across scenes before the final division.
struct TopologyTally {
  std::vector<double> ap_sum;        // per threshold
  std::vector<int> defined;          // per threshold
  int vertex_count = 0;
  bool any_ranked = false;

  void Add(const TopologyTally& other);
};

struct TopologyResult {
  std::vector<double> thresholds;
  std::vector<double> per_threshold_percent;
  double score_percent = 0.0;
};

TopologyTally TopologyScene(const SceneGraph& pred, const SceneGraph& gt,
                            const TopologyConfig& config);

TopologyResult FinishTopology(const TopologyTally& tally,
                              const TopologyConfig& config);

// TOP_ll for one scene in percent.
TopologyResult TopLl(const SceneGraph& pred, const SceneGraph& gt,
                     const TopologyConfig& config);

}  // namespace centerline::metrics

#endif  // CENTERLINE_METRICS_TOPOLOGY_H_
