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

#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "commands.h"
#include "json_config.h"

namespace ct = centerline::tools;

int main(int argc, char** argv) {
  CLI::App app{"Lane centerline targets, reconstruction and evaluation"};
  app.require_subcommand(1);
  app.config_formatter(std::make_shared<ct::JsonConfig>());
  app.set_config("--config", "", "JSON file with default flag values");

  ct::TargetsOptions targets;
  auto* t = app.add_subcommand("targets", "Rasterize ground-truth targets");
  t->add_option("--gt", targets.gt, "Ground-truth scene file")->required();
  t->add_option("--out", targets.out, "Output directory")->required();
  t->add_option("--width", targets.width, "Mask width in cells")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  t->add_option("--band", targets.band, "Foreground band radius in cells")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  ct::ReconstructOptions recon;
  auto* r = app.add_subcommand("reconstruct", "Reconstruct 3D centerlines");
  r->add_option("--pred", recon.pred, "Prediction directory with manifest.json")
      ->required();
  r->add_option("--out", recon.out, "Output scene file (default: stdout)");
  r->add_option("--tau", recon.tau, "Mask binarization threshold")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  r->add_option("--proposal", recon.proposal, "Point proposal mode")
      ->check(CLI::IsMember({"multi", "single", "none"}))
      ->capture_default_str();
  r->add_option("--poly-order", recon.poly_order, "Path polynomial order")
      ->check(CLI::Range(1, 12))
      ->capture_default_str();
  r->add_option("--points", recon.points, "Points per output polyline")
      ->check(CLI::Range(2, 100000))
      ->capture_default_str();
  r->add_flag("--fuse", recon.fuse, "Fuse with the Bezier path when present");

  ct::EvaluateOptions eval;
  auto* e = app.add_subcommand("evaluate", "Score predictions against ground truth");
  e->add_option("--pred", eval.pred, "Predicted scene file (repeatable)")
      ->required();
  e->add_option("--gt", eval.gt, "Ground-truth scene file (repeatable)")
      ->required();
  e->add_option("--ranking-threshold", eval.ranking_threshold,
                "Only topology entries above this are ranked")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  e->add_flag("--remap", eval.remap, "Remap edge confidences before ranking");
  e->add_flag("--json", eval.json, "Print the report as JSON");
  e->add_flag("--strict-denominator", eval.strict,
              "Count undefined topology APs as zero");
  e->add_option("--matching", eval.matching, "Detection matching")
      ->check(CLI::IsMember({"greedy", "optimal"}))
      ->capture_default_str();

  ct::SplitAuditOptions audit;
  auto* s = app.add_subcommand("split-audit", "Check train/val geographic overlap");
  s->add_option("--train", audit.train, "Train scene files")->required();
  s->add_option("--val", audit.val, "Validation scene files")->required();

  ct::DemoOptions demo;
  auto* d = app.add_subcommand("demo", "Run the pipeline on a synthetic scene");
  d->add_option("--seed", demo.seed, "Scene seed")->capture_default_str();
  d->add_option("--out", demo.out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? ct::kExitOk : ct::kExitInput;
  }

  if (*t) return ct::RunTargets(targets, std::cout, std::cerr);
  if (*r) return ct::RunReconstruct(recon, std::cout, std::cerr);
  if (*e) return ct::RunEvaluate(eval, std::cout, std::cerr);
  if (*s) return ct::RunSplitAudit(audit, std::cout, std::cerr);
  return ct::RunDemo(demo, std::cout, std::cerr);
}
