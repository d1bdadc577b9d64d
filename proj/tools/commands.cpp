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

#include "commands.h"

#include <cstdio>
#include <filesystem>
#include <optional>
#include <ostream>
#include <set>

#include <nlohmann/json.hpp>

#include "centerline/error.h"
#include "centerline/io/grid_file.h"
#include "centerline/metrics/overlap.h"
#include "centerline/parallel.h"
#include "centerline/pipeline.h"
#include "centerline/targets.h"

namespace centerline::tools {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

template <typename Fn>
int Guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitInput;
}

std::string Fixed(double v, int digits = 2) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string Row(const std::string& label, const std::string& value) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%-28s %10s\n", label.c_str(), value.c_str());
  return buf;
}

std::vector<metrics::GraphEdge> EdgesBetween(
    const std::vector<metrics::GraphEdge>& edges,
    const std::set<std::int64_t>& kept) {
  std::vector<metrics::GraphEdge> out;
  for (const auto& e : edges) {
    if (kept.count(e.src) && kept.count(e.dst)) out.push_back(e);
  }
  return out;
}

std::string GridName(std::int64_t id, const char* kind) {
  return std::to_string(id) + "_" + kind + ".grid";
}

json DetectionJson(const metrics::DetectionResult& r) {
  return {{"thresholds_m", r.thresholds}, {"ap", r.ap}, {"map_percent", r.map_percent}};
}

}  // namespace

int WriteTargets(const io::SceneFile& scene, const std::string& dir,
                 const TargetsOptions& opts, std::ostream& err) {
  const TargetConfig cfg{opts.width, opts.band};
  if (scene.instances.empty()) {
    err << "warning: scene has no instances, nothing written\n";
    return kExitOk;
  }
  fs::create_directories(dir);
  const std::size_t n = scene.instances.size();
  std::vector<std::optional<io::ManifestInstance>> rows(n);
  ParallelFor(n, WorkerCount(), [&](std::size_t k) {
    const io::SceneInstance& inst = scene.instances[k];
    const TargetBundle bundle = MakeTargets(inst.polyline, scene.spec, cfg);
    if (bundle.mask_empty) return;
    const fs::path base(dir);
    io::ManifestInstance mi;
    mi.id = inst.id;
    mi.direction = inst.direction.value_or(QuadDirectionLabel(inst.polyline));
    mi.confidence = inst.confidence;
    mi.prob = GridName(inst.id, "mask");
    mi.mask = mi.prob;
    mi.offset = GridName(inst.id, "offset");
    mi.height = GridName(inst.id, "height");
    mi.fg_band = GridName(inst.id, "fg_band");
    mi.bezier_cp = inst.bezier_cp;
    io::WriteGridFile((base / mi.prob).string(), bundle.mask);
    io::WriteGridFile((base / mi.offset).string(), bundle.offset);
    io::WriteGridFile((base / mi.height).string(), bundle.height);
    io::WriteGridFile((base / *mi.fg_band).string(), bundle.fg_band);
    rows[k] = std::move(mi);
  });

  io::PredictionManifest manifest;
  manifest.spec = scene.spec;
  manifest.footprint = scene.footprint;
  std::set<std::int64_t> kept;
  int off_grid = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (!rows[k]) {
      ++off_grid;
      err << "instance " << scene.instances[k].id
          << ": entirely off-grid, no targets written\n";
      continue;
    }
    kept.insert(rows[k]->id);
    manifest.instances.push_back(std::move(*rows[k]));
  }
  manifest.edges = EdgesBetween(scene.edges, kept);
  // Last write: a directory with a manifest is complete.
  io::WriteManifest(dir, manifest);
  return off_grid > 0 ? kExitPartial : kExitOk;
}

int RunTargets(const TargetsOptions& opts, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    const io::SceneFile scene = io::ReadSceneFile(opts.gt);
    const int code = WriteTargets(scene, opts.out, opts, err);
    out << "targets: " << scene.instances.size() << " instance(s) -> "
        << opts.out << "\n";
    return code;
  });
}

io::SceneFile ReconstructDirectory(const ReconstructOptions& opts) {
  const io::PredictionManifest manifest = io::ReadManifest(opts.pred);
  const auto mode = ParseProposalMode(opts.proposal);
  if (!mode) throw Error(ErrorCode::kInvalidInput, "unknown proposal mode");
  PipelineConfig cfg;
  cfg.tau = opts.tau;
  cfg.proposal = *mode;
  cfg.fuse = opts.fuse;
  cfg.reconstruction.path_poly_order = opts.poly_order;
  cfg.reconstruction.n_output_points = opts.points;
  cfg.reconstruction.Validate();

  const std::size_t n = manifest.instances.size();
  std::vector<std::optional<io::SceneInstance>> done(n);
  std::vector<std::string> failure(n);
  ParallelFor(n, WorkerCount(), [&](std::size_t k) {
    const io::ManifestInstance& mi = manifest.instances[k];
    const fs::path base(opts.pred);
    CenterlineInstance inst{
        mi.direction,
        mi.confidence,
        io::ReadScalarGridFile((base / mi.prob).string()),
        io::ReadVectorGridFile((base / mi.offset).string()),
        io::ReadScalarGridFile((base / mi.height).string()),
        mi.bezier_cp,
    };
    try {
      InstanceOutput result = RunMaskPipeline(inst, cfg);
      done[k].emplace(io::SceneInstance{mi.id, mi.direction, mi.confidence,
                                        std::move(result.curve), mi.bezier_cp});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kReconstructionFailed &&
          e.code() != ErrorCode::kEmptyMask) {
        throw;
      }
      failure[k] = e.what();
    }
  });

  io::SceneFile scene;
  scene.spec = manifest.spec;
  scene.footprint = manifest.footprint;
  std::set<std::int64_t> kept;
  for (std::size_t k = 0; k < n; ++k) {
    if (done[k]) {
      kept.insert(done[k]->id);
      scene.instances.push_back(std::move(*done[k]));
    } else {
      scene.failures.push_back({manifest.instances[k].id, failure[k]});
    }
  }
  scene.edges = EdgesBetween(manifest.edges, kept);
  return scene;
}

int RunReconstruct(const ReconstructOptions& opts, std::ostream& out,
                   std::ostream& err) {
  return Guarded(err, [&] {
    const io::SceneFile scene = ReconstructDirectory(opts);
    if (opts.out.empty()) {
      out << io::SerializeScene(scene);
    } else {
      io::WriteSceneFile(opts.out, scene);
    }
    for (const auto& f : scene.failures) {
      err << "instance " << f.id << ": " << f.reason << "\n";
    }
    return scene.failures.empty() ? kExitOk : kExitPartial;
  });
}

metrics::MetricConfig EvaluationConfig(const EvaluateOptions& opts) {
  metrics::MetricConfig cfg;
  cfg.WithRankingThreshold(opts.ranking_threshold);
  cfg.remap_enabled = opts.remap;
  cfg.strict_denominator = opts.strict;
  cfg.det_matching = opts.matching == "optimal" ? metrics::MatchingMode::kOptimal
                                                : metrics::MatchingMode::kGreedy;
  return cfg;
}

std::string ReportTable(const metrics::MetricReport& report, bool variants) {
  std::string s = Row("metric", "value");
  s += Row("DET_l", Fixed(report.det_l));
  s += Row("DET_l_ch", Fixed(report.det_l_ch));
  s += Row("TOP_ll", Fixed(report.top_ll));
  s += Row("OLS_l", Fixed(report.ols_l));
  const auto& d = report.det_l_detail;
  for (std::size_t k = 0; k < d.thresholds.size(); ++k) {
    s += Row("  DET_l AP @ " + Fixed(d.thresholds[k], 1) + " m", Fixed(100.0 * d.ap[k]));
  }
  const auto& c = report.det_l_ch_detail;
  for (std::size_t k = 0; k < c.thresholds.size(); ++k) {
    s += Row("  DET_l_ch AP @ " + Fixed(c.thresholds[k], 1) + " m",
             Fixed(100.0 * c.ap[k]));
  }
  const auto& t = report.top_ll_detail;
  for (std::size_t k = 0; k < t.thresholds.size(); ++k) {
    s += Row("  TOP_ll @ " + Fixed(t.thresholds[k], 1) + " m",
             Fixed(t.per_threshold_percent[k]));
  }
  if (variants) {
    s += Row("TOP_ll flawed (> 0.5)", Fixed(report.top_ll_variants.flawed));
    s += Row("TOP_ll fixed (> 0.01)", Fixed(report.top_ll_variants.fixed));
    s += Row("TOP_ll remapped (> 0.5)", Fixed(report.top_ll_variants.remapped));
  }
  if (report.scenes.size() > 1) {
    for (const auto& sc : report.scenes) {
      s += "scene " + sc.id + ": DET_l " + Fixed(sc.det_l) + ", DET_l_ch " +
           Fixed(sc.det_l_ch) + ", TOP_ll " + Fixed(sc.top_ll) + "\n";
    }
  }
  return s;
}

std::string ReportJson(const metrics::MetricReport& report,
                       const metrics::MetricConfig& config, bool variants) {
  json j;
  j["det_l"] = report.det_l;
  j["det_l_ch"] = report.det_l_ch;
  j["top_ll"] = report.top_ll;
  j["ols_l"] = report.ols_l;
  j["det_l_detail"] = DetectionJson(report.det_l_detail);
  j["det_l_ch_detail"] = DetectionJson(report.det_l_ch_detail);
  j["top_ll_detail"] = {
      {"thresholds_m", report.top_ll_detail.thresholds},
      {"per_threshold_percent", report.top_ll_detail.per_threshold_percent}};
  if (variants) {
    j["top_ll_variants"] = {{"flawed", report.top_ll_variants.flawed},
                            {"fixed", report.top_ll_variants.fixed},
                            {"remapped", report.top_ll_variants.remapped}};
  }
  j["config"] = {
      {"ranking_threshold", config.ranking_threshold},
      {"unmatched_negative_penalty", config.unmatched_negative_penalty},
      {"remap", config.remap_enabled},
      {"strict_denominator", config.strict_denominator},
      {"matching",
       config.det_matching == metrics::MatchingMode::kOptimal ? "optimal" : "greedy"},
      {"resample_points", config.resample_points}};
  json scenes = json::array();
  for (const auto& sc : report.scenes) {
    scenes.push_back({{"id", sc.id},
                      {"det_l", sc.det_l},
                      {"det_l_ch", sc.det_l_ch},
                      {"top_ll", sc.top_ll}});
  }
  j["scenes"] = std::move(scenes);
  return j.dump(2) + "\n";
}

int RunEvaluate(const EvaluateOptions& opts, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    if (opts.pred.size() != opts.gt.size()) {
      err << "error: --pred and --gt must be given the same number of times\n";
      return static_cast<int>(kExitInput);
    }
    std::vector<metrics::SceneInput> scenes;
    for (std::size_t k = 0; k < opts.pred.size(); ++k) {
      const io::SceneFile pred = io::ReadSceneFile(opts.pred[k]);
      const io::SceneFile gt = io::ReadSceneFile(opts.gt[k]);
      scenes.push_back({opts.gt[k], pred.Graph(), gt.Graph()});
    }
    const metrics::MetricConfig cfg = EvaluationConfig(opts);
    const metrics::MetricReport report =
        metrics::EvaluateScenes(scenes, cfg, WorkerCount());
    out << (opts.json ? ReportJson(report, cfg, opts.remap)
                      : ReportTable(report, opts.remap));
    return static_cast<int>(kExitOk);
  });
}

int RunSplitAudit(const SplitAuditOptions& opts, std::ostream& out,
                  std::ostream& err) {
  return Guarded(err, [&] {
    auto load = [&](const std::vector<std::string>& paths,
                    std::vector<metrics::Footprint>& dst) {
      for (const std::string& p : paths) {
        const io::SceneFile scene = io::ReadSceneFile(p);
        if (!scene.footprint) {
          err << "error: " << p << " has no footprint\n";
          return false;
        }
        dst.push_back(*scene.footprint);
      }
      return true;
    };
    std::vector<metrics::Footprint> train, val;
    if (!load(opts.train, train) || !load(opts.val, val)) {
      return static_cast<int>(kExitInput);
    }
    const metrics::OverlapReport r = metrics::AuditGeographicOverlap(train, val);
    out << "verdict: " << (r.disjoint ? "disjoint" : "overlapping") << "\n"
        << "intersecting pairs: " << r.intersecting_pairs << "\n"
        << "intersection area: " << Fixed(r.total_area, 6) << " m^2\n";
    return static_cast<int>(r.disjoint ? kExitOk : kExitNegative);
  });
}

}  // namespace centerline::tools
