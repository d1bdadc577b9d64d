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

#ifndef CENTERLINE_IO_SCENE_FILE_H_
#define CENTERLINE_IO_SCENE_FILE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "centerline/geometry.h"
#include "centerline/metrics/overlap.h"
#include "centerline/metrics/topology.h"
#include "centerline/polyline.h"

namespace centerline::io {

struct SceneInstance {
  std::int64_t id = 0;
  std::optional<QuadDirection> direction;
  double confidence = 1.0;
  Polyline3D polyline;
  std::optional<std::vector<Point3>> bezier_cp;
};

struct InstanceFailure {
  std::int64_t id = 0;
  std::string reason;
};

// A scene document: grid spec, centerline instances, directed edges
// [src, dst, conf], optional footprint polygon and per-instance failures.
struct SceneFile {
  GridSpec spec;
  std::vector<SceneInstance> instances;
  std::vector<metrics::GraphEdge> edges;
  std::optional<metrics::Footprint> footprint;
  std::vector<InstanceFailure> failures;

  metrics::SceneGraph Graph() const;
};

// Throws FormatError on malformed JSON or a broken invariant (duplicate ids,
// short polylines, confidence outside [0, 1]).
SceneFile ParseScene(std::string_view text);
// Canonical form: sorted keys, two-space indent, trailing newline.
std::string SerializeScene(const SceneFile& scene);

SceneFile ReadSceneFile(const std::string& path);
void WriteSceneFile(const std::string& path, const SceneFile& scene);

// Instance entry of a prediction directory manifest. Grid paths are
// relative to the manifest's directory.
struct ManifestInstance {
  std::int64_t id = 0;
  QuadDirection direction = QuadDirection::kUp;
  double confidence = 1.0;
  std::string prob;
  std::string offset;
  std::string height;
  std::optional<std::string> mask;
  std::optional<std::string> fg_band;
  std::optional<std::vector<Point3>> bezier_cp;
};

struct PredictionManifest {
  GridSpec spec;
  std::vector<ManifestInstance> instances;
  std::vector<metrics::GraphEdge> edges;
  std::optional<metrics::Footprint> footprint;
};

inline constexpr std::string_view kManifestName = "manifest.json";

PredictionManifest ParseManifest(std::string_view text);
std::string SerializeManifest(const PredictionManifest& manifest);
PredictionManifest ReadManifest(const std::string& dir);
void WriteManifest(const std::string& dir, const PredictionManifest& manifest);

std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, std::string_view text);

}  // namespace centerline::io

#endif  // CENTERLINE_IO_SCENE_FILE_H_
