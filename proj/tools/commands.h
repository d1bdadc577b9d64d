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

#ifndef CENTERLINE_TOOLS_COMMANDS_H_
#define CENTERLINE_TOOLS_COMMANDS_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "centerline/io/scene_file.h"
#include "centerline/metrics/report.h"

namespace centerline::tools {

// Exit-code contract shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitNegative = 1,  // ran fine, verdict is "no" (split-audit overlap)
  kExitInput = 2,     // malformed or missing input
  kExitPartial = 3,   // some instances failed, the rest were written
};

struct TargetsOptions {
  std::string gt;
  std::string out;
  int width = 4;
  double band = 4.0;
};

struct ReconstructOptions {
  std::string pred;
  std::string out;  // scene file; empty writes to stdout
  double tau = 0.95;
  std::string proposal = "multi";
  int poly_order = 4;
  int points = 11;
  bool fuse = false;
};

struct EvaluateOptions {
  std::vector<std::string> pred;
  std::vector<std::string> gt;
  double ranking_threshold = 0.5;
  bool remap = false;
  bool json = false;
  bool strict = false;
  std::string matching = "greedy";
};

struct SplitAuditOptions {
  std::vector<std::string> train;
  std::vector<std::string> val;
};

struct DemoOptions {
  std::uint64_t seed = 7;
  std::string out;
};

int RunTargets(const TargetsOptions& opts, std::ostream& out, std::ostream& err);
int RunReconstruct(const ReconstructOptions& opts, std::ostream& out,
                   std::ostream& err);
int RunEvaluate(const EvaluateOptions& opts, std::ostream& out, std::ostream& err);
int RunSplitAudit(const SplitAuditOptions& opts, std::ostream& out,
                  std::ostream& err);
int RunDemo(const DemoOptions& opts, std::ostream& out, std::ostream& err);

// Building blocks reused by `demo`.
int WriteTargets(const io::SceneFile& scene, const std::string& dir,
                 const TargetsOptions& opts, std::ostream& err);
io::SceneFile ReconstructDirectory(const ReconstructOptions& opts);
metrics::MetricConfig EvaluationConfig(const EvaluateOptions& opts);
std::string ReportTable(const metrics::MetricReport& report, bool variants);
std::string ReportJson(const metrics::MetricReport& report,
                       const metrics::MetricConfig& config, bool variants);

}  // namespace centerline::tools

#endif  // CENTERLINE_TOOLS_COMMANDS_H_
