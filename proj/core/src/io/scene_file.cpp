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

#include "centerline/io/scene_file.h"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "centerline/error.h"

namespace centerline::io {
namespace {

using nlohmann::json;

json PointJson(const Point3& p) { return json::array({p.x, p.y, p.z}); }

Point3 ParsePoint(const json& j) {
  if (!j.is_array() || j.size() != 3) {
    throw Error(ErrorCode::kFormatError, "point must be [x, y, z]");
  }
  return Point3{j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

std::vector<Point3> ParsePoints(const json& j) {
  std::vector<Point3> out;
  for (const json& p : j) out.push_back(ParsePoint(p));
  return out;
}

json PointsJson(const std::vector<Point3>& pts) {
  json out = json::array();
  for (const Point3& p : pts) out.push_back(PointJson(p));
  return out;
}

json SpecJson(const GridSpec& s) {
  return json{{"height_cells", s.height_cells()},
              {"width_cells", s.width_cells()},
              {"cell_size_m", s.cell_size_m()},
              {"origin", {s.origin().x, s.origin().y}},
              {"z_range", {s.z_min_m(), s.z_max_m()}}};
}

GridSpec ParseSpec(const json& j) {
  const GridSpec d;
  const json origin = j.value("origin", json::array({d.origin().x, d.origin().y}));
  const json z = j.value("z_range", json::array({d.z_min_m(), d.z_max_m()}));
  if (origin.size() != 2 || z.size() != 2) {
    throw Error(ErrorCode::kFormatError, "origin and z_range need 2 values");
  }
  return GridSpec(j.value("height_cells", d.height_cells()),
                  j.value("width_cells", d.width_cells()),
                  j.value("cell_size_m", d.cell_size_m()),
                  Vec2{origin[0].get<double>(), origin[1].get<double>()},
                  z[0].get<double>(), z[1].get<double>());
}

QuadDirection ParseDirectionField(const json& j) {
  const auto d = ParseDirection(j.get<std::string>());
  if (!d) throw Error(ErrorCode::kFormatError, "unknown direction");
  return *d;
}

double ParseConfidence(const json& j, const char* key) {
  const double c = j.value(key, 1.0);
  if (!(c >= 0.0 && c <= 1.0)) {
    throw Error(ErrorCode::kFormatError, "confidence outside [0, 1]");
  }
  return c;
}

std::vector<metrics::GraphEdge> ParseEdges(const json& root) {
  std::vector<metrics::GraphEdge> edges;
  for (const json& e : root.value("edges", json::array())) {
    if (!e.is_array() || e.size() != 3) {
      throw Error(ErrorCode::kFormatError, "edge must be [src, dst, conf]");
    }
    edges.push_back({e[0].get<std::int64_t>(), e[1].get<std::int64_t>(),
                     e[2].get<double>()});
  }
  return edges;
}

json EdgesJson(const std::vector<metrics::GraphEdge>& edges) {
  json out = json::array();
  for (const auto& e : edges) out.push_back(json::array({e.src, e.dst, e.confidence}));
  return out;
}

std::optional<metrics::Footprint> ParseFootprint(const json& root) {
  if (!root.contains("footprint") || root["footprint"].is_null()) return std::nullopt;
  metrics::Footprint fp;
  for (const json& p : root["footprint"]) {
    if (!p.is_array() || p.size() != 2) {
      throw Error(ErrorCode::kFormatError, "footprint vertex must be [x, y]");
    }
    fp.push_back(Vec2{p[0].get<double>(), p[1].get<double>()});
  }
  return fp;
}

json FootprintJson(const metrics::Footprint& fp) {
  json out = json::array();
  for (const Vec2& p : fp) out.push_back(json::array({p.x, p.y}));
  return out;
}

void CheckEdgeIds(const std::set<std::int64_t>& ids,
                  const std::vector<metrics::GraphEdge>& edges) {
  for (const auto& e : edges) {
    if (!ids.count(e.src) || !ids.count(e.dst) || e.src == e.dst) {
      throw Error(ErrorCode::kFormatError, "edge references unknown vertex or loops");
    }
    if (!(e.confidence >= 0.0 && e.confidence <= 1.0)) {
      throw Error(ErrorCode::kFormatError, "edge confidence outside [0, 1]");
    }
  }
}

template <typename Fn>
auto Guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kFormatError, e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kFormatError) throw;
    throw Error(ErrorCode::kFormatError, e.what());
  }
}

}  // namespace

metrics::SceneGraph SceneFile::Graph() const {
  metrics::SceneGraph g;
  for (const SceneInstance& inst : instances) {
    g.vertices.push_back({inst.id, inst.polyline, inst.confidence});
  }
  g.edges = edges;
  return g;
}

SceneFile ParseScene(std::string_view text) {
  return Guarded([&] {
    const json root = json::parse(text);
    SceneFile scene;
    if (root.contains("spec")) scene.spec = ParseSpec(root["spec"]);
    std::set<std::int64_t> ids;
    for (const json& inst : root.value("instances", json::array())) {
      const auto id = inst.at("id").get<std::int64_t>();
      if (!ids.insert(id).second) {
        throw Error(ErrorCode::kFormatError, "duplicate instance id");
      }
      std::optional<QuadDirection> dir;
      if (inst.contains("direction")) dir = ParseDirectionField(inst["direction"]);
      std::optional<std::vector<Point3>> cp;
      if (inst.contains("bezier_cp") && !inst["bezier_cp"].is_null()) {
        cp = ParsePoints(inst["bezier_cp"]);
      }
      scene.instances.push_back(SceneInstance{
          id, dir, ParseConfidence(inst, "confidence"),
          Polyline3D(ParsePoints(inst.at("polyline"))), std::move(cp)});
    }
    scene.edges = ParseEdges(root);
    CheckEdgeIds(ids, scene.edges);
    scene.footprint = ParseFootprint(root);
    for (const json& f : root.value("failures", json::array())) {
      scene.failures.push_back(
          {f.at("id").get<std::int64_t>(), f.at("reason").get<std::string>()});
    }
    return scene;
  });
}

std::string SerializeScene(const SceneFile& scene) {
  json root;
  root["spec"] = SpecJson(scene.spec);
  json instances = json::array();
  for (const SceneInstance& inst : scene.instances) {
    json j{{"id", inst.id},
           {"confidence", inst.confidence},
           {"polyline", PointsJson({inst.polyline.points().begin(),
                                    inst.polyline.points().end()})}};
    if (inst.direction) j["direction"] = std::string(DirectionName(*inst.direction));
    if (inst.bezier_cp) j["bezier_cp"] = PointsJson(*inst.bezier_cp);
    instances.push_back(std::move(j));
  }
  root["instances"] = std::move(instances);
  root["edges"] = EdgesJson(scene.edges);
  if (scene.footprint) root["footprint"] = FootprintJson(*scene.footprint);
  if (!scene.failures.empty()) {
    json failures = json::array();
    for (const auto& f : scene.failures) {
      failures.push_back({{"id", f.id}, {"reason", f.reason}});
    }
    root["failures"] = std::move(failures);
  }
  return root.dump(2) + "\n";
}

SceneFile ReadSceneFile(const std::string& path) {
  try {
    return ParseScene(ReadTextFile(path));
  } catch (const Error& e) {
    throw Error(ErrorCode::kFormatError, path + ": " + e.what());
  }
}

void WriteSceneFile(const std::string& path, const SceneFile& scene) {
  WriteTextFile(path, SerializeScene(scene));
}

PredictionManifest ParseManifest(std::string_view text) {
  return Guarded([&] {
    const json root = json::parse(text);
    PredictionManifest m;
    if (root.contains("spec")) m.spec = ParseSpec(root["spec"]);
    std::set<std::int64_t> ids;
    for (const json& inst : root.value("instances", json::array())) {
      ManifestInstance mi;
      mi.id = inst.at("id").get<std::int64_t>();
      if (!ids.insert(mi.id).second) {
        throw Error(ErrorCode::kFormatError, "duplicate instance id");
      }
      mi.direction = ParseDirectionField(inst.at("direction"));
      mi.confidence = ParseConfidence(inst, "confidence");
      mi.prob = inst.at("prob").get<std::string>();
      mi.offset = inst.at("offset").get<std::string>();
      mi.height = inst.at("height").get<std::string>();
      if (inst.contains("mask")) mi.mask = inst["mask"].get<std::string>();
      if (inst.contains("fg_band")) mi.fg_band = inst["fg_band"].get<std::string>();
      if (inst.contains("bezier_cp") && !inst["bezier_cp"].is_null()) {
        mi.bezier_cp = ParsePoints(inst["bezier_cp"]);
      }
      m.instances.push_back(std::move(mi));
    }
    m.edges = ParseEdges(root);
    CheckEdgeIds(ids, m.edges);
    m.footprint = ParseFootprint(root);
    return m;
  });
}

std::string SerializeManifest(const PredictionManifest& m) {
  json root;
  root["spec"] = SpecJson(m.spec);
  json instances = json::array();
  for (const ManifestInstance& mi : m.instances) {
    json j{{"id", mi.id},
           {"direction", std::string(DirectionName(mi.direction))},
           {"confidence", mi.confidence},
           {"prob", mi.prob},
           {"offset", mi.offset},
           {"height", mi.height}};
    if (mi.mask) j["mask"] = *mi.mask;
    if (mi.fg_band) j["fg_band"] = *mi.fg_band;
    if (mi.bezier_cp) j["bezier_cp"] = PointsJson(*mi.bezier_cp);
    instances.push_back(std::move(j));
  }
  root["instances"] = std::move(instances);
  root["edges"] = EdgesJson(m.edges);
  if (m.footprint) root["footprint"] = FootprintJson(*m.footprint);
  return root.dump(2) + "\n";
}

PredictionManifest ReadManifest(const std::string& dir) {
  const std::string path =
      (std::filesystem::path(dir) / std::string(kManifestName)).string();
  try {
    return ParseManifest(ReadTextFile(path));
  } catch (const Error& e) {
    throw Error(ErrorCode::kFormatError, path + ": " + e.what());
  }
}

void WriteManifest(const std::string& dir, const PredictionManifest& manifest) {
  WriteTextFile((std::filesystem::path(dir) / std::string(kManifestName)).string(),
                SerializeManifest(manifest));
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kFormatError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteTextFile(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kFormatError, "cannot write " + path);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

}  // namespace centerline::io
