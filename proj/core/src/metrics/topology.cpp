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

#include "centerline/metrics/topology.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "centerline/error.h"
#include "centerline/metrics/assignment.h"
#include "centerline/metrics/curve_distance.h"
#include "centerline/metrics/score.h"

namespace centerline::metrics {
namespace {

// AP of one ranked candidate list against a positive set.
double RankedAp(std::vector<std::pair<double, int>> candidates,
                const std::vector<char>& positive, int positive_count) {
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  int hits = 0;
  double sum = 0.0;
  for (std::size_t rank = 0; rank < candidates.size(); ++rank) {
    if (positive[static_cast<std::size_t>(candidates[rank].second)]) {
      ++hits;
      sum += static_cast<double>(hits) / static_cast<double>(rank + 1);
    }
  }
  return sum / positive_count;
}

}  // namespace

void SceneGraph::Validate() const {
  std::set<std::int64_t> ids;
  for (const GraphVertex& v : vertices) {
    if (!ids.insert(v.id).second) {
      throw Error(ErrorCode::kInvalidInput, "duplicate vertex id");
    }
    if (!(v.confidence >= 0.0 && v.confidence <= 1.0)) {
      throw Error(ErrorCode::kInvalidInput, "vertex confidence outside [0, 1]");
    }
  }
  for (const GraphEdge& e : edges) {
    if (!ids.count(e.src) || !ids.count(e.dst)) {
      throw Error(ErrorCode::kInvalidInput, "edge references unknown vertex");
    }
    if (e.src == e.dst) {
      throw Error(ErrorCode::kInvalidInput, "self-loop edge");
    }
    if (!(e.confidence >= 0.0 && e.confidence <= 1.0)) {
      throw Error(ErrorCode::kInvalidInput, "edge confidence outside [0, 1]");
    }
  }
}

int SceneGraph::IndexOf(std::int64_t id) const {
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    if (vertices[k].id == id) return static_cast<int>(k);
  }
  return -1;
}

void TopologyTally::Add(const TopologyTally& other) {
  if (ap_sum.empty()) {
    ap_sum.assign(other.ap_sum.size(), 0.0);
    defined.assign(other.defined.size(), 0);
  }
  for (std::size_t t = 0; t < other.ap_sum.size(); ++t) {
    ap_sum[t] += other.ap_sum[t];
    defined[t] += other.defined[t];
  }
  vertex_count += other.vertex_count;
  any_ranked = any_ranked || other.any_ranked;
}

TopologyTally TopologyScene(const SceneGraph& pred, const SceneGraph& gt,
                            const TopologyConfig& config) {
  pred.Validate();
  gt.Validate();
  if (config.thresholds.empty()) {
    throw Error(ErrorCode::kInvalidInput, "need at least one threshold");
  }
  if (!(config.ranking_threshold >= 0.0 && config.ranking_threshold < 1.0)) {
    throw Error(ErrorCode::kInvalidInput, "ranking threshold outside [0, 1)");
  }
  const std::size_t n_gt = gt.vertices.size();
  const std::size_t n_pred = pred.vertices.size();

  TopologyTally tally;
  tally.ap_sum.assign(config.thresholds.size(), 0.0);
  tally.defined.assign(config.thresholds.size(), 0);
  tally.vertex_count = static_cast<int>(n_gt);

  std::vector<std::vector<char>> gt_adj(n_gt, std::vector<char>(n_gt, 0));
  for (const GraphEdge& e : gt.edges) {
    gt_adj[gt.IndexOf(e.src)][gt.IndexOf(e.dst)] = 1;
  }
  // Strongest predicted confidence per ordered predicted vertex pair.
  std::map<std::pair<int, int>, double> pred_edge;
  for (const GraphEdge& e : pred.edges) {
    double c = e.confidence;
    if (config.remap) c = ScoreRemap(c, config.remap_floor, config.remap_bonus);
    auto key = std::make_pair(pred.IndexOf(e.src), pred.IndexOf(e.dst));
    auto [it, inserted] = pred_edge.emplace(key, c);
    if (!inserted) it->second = std::max(it->second, c);
  }

  CostMatrix dist(n_gt, std::vector<double>(n_pred));
  for (std::size_t g = 0; g < n_gt; ++g) {
    for (std::size_t p = 0; p < n_pred; ++p) {
      dist[g][p] = DiscreteFrechet(gt.vertices[g].curve, pred.vertices[p].curve);
    }
  }

  for (std::size_t t = 0; t < config.thresholds.size(); ++t) {
    const double threshold = config.thresholds[t];
    std::vector<int> match(n_gt, -1);
    if (n_gt > 0 && n_pred > 0) {
      double invalid = 1.0;
      for (const auto& row : dist) {
        for (double d : row) {
          if (d < threshold) invalid += d;
        }
      }
      CostMatrix cost = dist;
      for (auto& row : cost) {
        for (double& d : row) {
          if (!(d < threshold)) d = invalid;
        }
      }
      for (const auto& [g, p] : Hungarian(cost).pairs) {
        if (dist[g][p] < threshold) match[g] = p;
      }
    }

    // Aligned adjacency over ground-truth vertex pairs.
    std::vector<std::vector<double>> aligned(n_gt, std::vector<double>(n_gt, 0.0));
    for (std::size_t a = 0; a < n_gt; ++a) {
      for (std::size_t b = 0; b < n_gt; ++b) {
        if (a == b) continue;
        if (match[a] >= 0 && match[b] >= 0) {
          auto it = pred_edge.find({match[a], match[b]});
          aligned[a][b] = it == pred_edge.end() ? 0.0 : it->second;
        } else {
          aligned[a][b] = gt_adj[a][b] ? 0.0 : config.unmatched_negative_penalty;
        }
      }
    }

    for (std::size_t v = 0; v < n_gt; ++v) {
      for (int direction = 0; direction < 2; ++direction) {
        std::vector<char> positive(n_gt, 0);
        std::vector<std::pair<double, int>> candidates;
        int positive_count = 0;
        for (std::size_t w = 0; w < n_gt; ++w) {
          if (w == v) continue;
          const bool is_pos = direction == 0 ? gt_adj[v][w] : gt_adj[w][v];
          const double conf = direction == 0 ? aligned[v][w] : aligned[w][v];
          positive[w] = is_pos ? 1 : 0;
          positive_count += is_pos ? 1 : 0;
          if (conf > config.ranking_threshold) {
            candidates.emplace_back(conf, static_cast<int>(w));
          }
        }
        if (!candidates.empty()) tally.any_ranked = true;
        if (positive_count == 0) continue;
        tally.ap_sum[t] += RankedAp(std::move(candidates), positive, positive_count);
        ++tally.defined[t];
      }
    }
  }
  return tally;
}

TopologyResult FinishTopology(const TopologyTally& tally,
                              const TopologyConfig& config) {
  TopologyResult result;
  result.thresholds = config.thresholds;
  double total = 0.0;
  for (std::size_t t = 0; t < config.thresholds.size(); ++t) {
    const double sum = t < tally.ap_sum.size() ? tally.ap_sum[t] : 0.0;
    const int defined = t < tally.defined.size() ? tally.defined[t] : 0;
    const int denom = config.strict_denominator ? 2 * tally.vertex_count : defined;
    double value;
    if (denom == 0 || defined == 0) {
      // Nothing to retrieve: perfect only if nothing was ranked either.
      value = tally.any_ranked ? 0.0 : 1.0;
    } else {
      value = sum / denom;
    }
    result.per_threshold_percent.push_back(100.0 * value);
    total += value;
  }
  result.score_percent = 100.0 * total / static_cast<double>(config.thresholds.size());
  return result;
}

TopologyResult TopLl(const SceneGraph& pred, const SceneGraph& gt,
                     const TopologyConfig& config) {
  return FinishTopology(TopologyScene(pred, gt, config), config);
}

}  // namespace centerline::metrics
