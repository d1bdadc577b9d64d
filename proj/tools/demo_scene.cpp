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

// `demo`: synthetic scene -> targets -> reconstruct -> evaluate, with every
// intermediate artifact kept on disk.

#include <cstdio>
#include <filesystem>
#include <ostream>

#include "centerline/error.h"
#include "centerline/parallel.h"
#include "centerline/synthetic.h"
#include "commands.h"

namespace centerline::tools {
namespace {

namespace fs = std::filesystem;

void DumpPoints(const fs::path& path, const Polyline3D& curve) {
  std::string text;
  char buf[128];
  for (const Point3& p : curve.points()) {
    std::snprintf(buf, sizeof(buf), "%.6f %.6f %.6f\n", p.x, p.y, p.z);
    text += buf;
  }
  io::WriteTextFile(path.string(), text);
}

}  // namespace

int RunDemo(const DemoOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const fs::path root(opts.out);
    fs::create_directories(root / "points");
    const io::SceneFile gt = synthetic::MakeDemoScene(opts.seed);
    io::WriteSceneFile((root / "gt.json").string(), gt);

    TargetsOptions topts;
    topts.out = (root / "targets").string();
    const int tcode = WriteTargets(gt, topts.out, topts, err);
    if (tcode != kExitOk) return tcode;

    // Ground-truth maps stand in for network output.
    ReconstructOptions ropts;
    ropts.pred = topts.out;
    const io::SceneFile pred = ReconstructDirectory(ropts);
    io::WriteSceneFile((root / "pred.json").string(), pred);

    EvaluateOptions eopts;
    eopts.remap = true;
    const metrics::MetricConfig cfg = EvaluationConfig(eopts);
    const metrics::SceneInput scene{"demo", pred.Graph(), gt.Graph()};
    const metrics::MetricReport report =
        metrics::EvaluateScenes({&scene, 1}, cfg, WorkerCount());
    const std::string table = ReportTable(report, true);
    io::WriteTextFile((root / "report.json").string(), ReportJson(report, cfg, true));
    io::WriteTextFile((root / "report.txt").string(), table);

    for (const auto& inst : gt.instances) {
      DumpPoints(root / "points" / ("gt_" + std::to_string(inst.id) + ".txt"),
                 inst.polyline);
    }
    for (const auto& inst : pred.instances) {
      DumpPoints(root / "points" / ("pred_" + std::to_string(inst.id) + ".txt"),
                 inst.polyline);
    }
    out << "demo seed " << opts.seed << ": " << gt.instances.size()
        << " centerlines -> " << opts.out << "\n"
        << table;
    return pred.failures.empty() ? kExitOk : kExitPartial;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitInput;
}

}  // namespace centerline::tools
