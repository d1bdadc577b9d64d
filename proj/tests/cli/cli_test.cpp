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

#include <gtest/gtest.h>

#include <filesystem>

#include <nlohmann/json.hpp>

#include "centerline/io/grid_file.h"
#include "centerline/io/scene_file.h"
#include "centerline/metrics/curve_distance.h"
#include "centerline/metrics/score.h"
#include "support/cli_runner.h"

namespace centerline {
namespace {

namespace fs = std::filesystem;
using testing::CliResult;
using testing::RunCli;

const std::string kCli = CENTERLINE_CLI_PATH;
const fs::path kFixtures = CENTERLINE_FIXTURE_DIR;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    scratch_ = fs::temp_directory_path() / "centerline_cli" / info->name();
    fs::remove_all(scratch_);
    fs::create_directories(scratch_);
  }
  CliResult Run(const std::vector<std::string>& args, const std::string& env = "") {
    return RunCli(kCli, args, scratch_ / "io", env);
  }
  std::string Fixture(const std::string& name) const { return (kFixtures / name).string(); }
  fs::path scratch_;
};

TEST_F(CliTest, TargetsWritesFourGridsPerInstance) {
  const fs::path out = scratch_ / "t";
  const CliResult r = Run({"targets", "--gt", Fixture("straight.json"), "--out", out.string()});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  for (const char* kind : {"mask", "offset", "height", "fg_band"}) {
    const fs::path p = out / ("1_" + std::string(kind) + ".grid");
    ASSERT_TRUE(fs::exists(p)) << p;
    const io::RawGrid raw = io::ReadRawGridFile(p.string());
    const std::string bytes = testing::Slurp(p);
    EXPECT_EQ(bytes.size() - bytes.find('\n') - 1, raw.header.PayloadBytes());
    EXPECT_EQ(raw.header.c, std::string(kind) == "offset" ? 2 : 1);
  }
  EXPECT_TRUE(fs::exists(out / "manifest.json"));
}

TEST_F(CliTest, TargetsAreDeterministic) {
  const fs::path a = scratch_ / "a", b = scratch_ / "b";
  ASSERT_EQ(Run({"targets", "--gt", Fixture("straight.json"), "--out", a.string()}).exit_code, 0);
  ASSERT_EQ(Run({"targets", "--gt", Fixture("straight.json"), "--out", b.string()},
                "CENTERLINE_THREADS=3")
                .exit_code,
            0);
  EXPECT_EQ(testing::Tree(a), testing::Tree(b));
}

TEST_F(CliTest, TargetsEmptySceneWarns) {
  const fs::path out = scratch_ / "t";
  const CliResult r = Run({"targets", "--gt", Fixture("empty.json"), "--out", out.string()});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
  EXPECT_FALSE(fs::exists(out) && !fs::is_empty(out));
}

TEST_F(CliTest, TargetsMalformedAndOffGrid) {
  EXPECT_EQ(Run({"targets", "--gt", Fixture("malformed.json"), "--out",
                 (scratch_ / "m").string()})
                .exit_code,
            2);
  EXPECT_EQ(Run({"targets", "--gt", Fixture("missing.json"), "--out",
                 (scratch_ / "m").string()})
                .exit_code,
            2);
  const fs::path out = scratch_ / "o";
  const CliResult r = Run({"targets", "--gt", Fixture("offgrid.json"), "--out", out.string()});
  EXPECT_EQ(r.exit_code, 3);
  EXPECT_NE(r.err.find("instance 2"), std::string::npos);
  EXPECT_TRUE(fs::exists(out / "1_mask.grid"));
  EXPECT_FALSE(fs::exists(out / "2_mask.grid"));
  const io::PredictionManifest m = io::ReadManifest(out.string());
  EXPECT_EQ(m.instances.size(), 1u);
  EXPECT_TRUE(m.edges.empty());
}

TEST_F(CliTest, ReconstructProposalModes) {
  const fs::path t = scratch_ / "t";
  ASSERT_EQ(Run({"targets", "--gt", Fixture("straight.json"), "--out", t.string()}).exit_code, 0);
  const io::SceneFile gt = io::ReadSceneFile(Fixture("straight.json"));
  const Polyline3D gt_curve = ArcLengthResample(gt.instances[0].polyline, 11);
  double chamfer[2];
  const char* modes[] = {"none", "multi"};
  for (int k = 0; k < 2; ++k) {
    const fs::path out = scratch_ / (std::string(modes[k]) + ".json");
    const CliResult r = Run({"reconstruct", "--pred", t.string(), "--proposal", modes[k],
                             "--points", "11", "--out", out.string()});
    ASSERT_EQ(r.exit_code, 0) << r.err;
    const io::SceneFile s = io::ReadSceneFile(out.string());
    ASSERT_EQ(s.instances.size(), 1u);
    EXPECT_EQ(s.instances[0].polyline.size(), 11u);
    chamfer[k] = metrics::Chamfer(s.instances[0].polyline, gt_curve);
    if (k == 1) {
      EXPECT_LT(metrics::DiscreteFrechet(s.instances[0].polyline, gt_curve), 0.05);
    }
  }
  EXPECT_LT(chamfer[1], chamfer[0]);
}

TEST_F(CliTest, ReconstructRejectsMissingManifest) {
  EXPECT_EQ(Run({"reconstruct", "--pred", scratch_.string()}).exit_code, 2);
  EXPECT_EQ(Run({"reconstruct", "--pred", scratch_.string(), "--proposal", "bogus"}).exit_code,
            2);
}

TEST_F(CliTest, EvaluateIdenticalScenesIsPerfect) {
  const std::string gt = Fixture("low_conf_gt.json");
  const CliResult r = Run({"evaluate", "--pred", gt, "--gt", gt, "--json"});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  for (const char* key : {"det_l", "det_l_ch", "top_ll", "ols_l"}) {
    EXPECT_DOUBLE_EQ(j[key].get<double>(), 100.0) << key;
  }
}

TEST_F(CliTest, EvaluateLowConfidenceVariants) {
  const std::vector<std::string> base{"evaluate", "--pred", Fixture("low_conf_pred.json"),
                                      "--gt", Fixture("low_conf_gt.json"), "--json"};
  auto with = [&](std::vector<std::string> extra) {
    std::vector<std::string> args = base;
    args.insert(args.end(), extra.begin(), extra.end());
    const CliResult r = Run(args);
    EXPECT_EQ(r.exit_code, 0) << r.err;
    return nlohmann::json::parse(r.out);
  };
  EXPECT_DOUBLE_EQ(with({})["top_ll"].get<double>(), 0.0);
  EXPECT_DOUBLE_EQ(with({"--ranking-threshold", "0.01"})["top_ll"].get<double>(), 100.0);
  const auto remapped = with({"--remap"});
  EXPECT_DOUBLE_EQ(remapped["top_ll"].get<double>(), 100.0);
  EXPECT_DOUBLE_EQ(remapped["top_ll_variants"]["flawed"].get<double>(), 0.0);
  EXPECT_DOUBLE_EQ(remapped["top_ll_variants"]["fixed"].get<double>(), 100.0);
  EXPECT_DOUBLE_EQ(remapped["top_ll_variants"]["remapped"].get<double>(), 100.0);
  // Component identity on the emitted report.
  EXPECT_NEAR(remapped["ols_l"].get<double>(),
              metrics::OlsL(remapped["det_l"], remapped["det_l_ch"], remapped["top_ll"]),
              1e-12);
}

TEST_F(CliTest, EvaluateTableAndErrors) {
  const std::string gt = Fixture("low_conf_gt.json");
  const CliResult table = Run({"evaluate", "--pred", gt, "--gt", gt, "--remap"});
  EXPECT_EQ(table.exit_code, 0);
  EXPECT_NE(table.out.find("OLS_l"), std::string::npos);
  EXPECT_NE(table.out.find("TOP_ll remapped"), std::string::npos);
  EXPECT_EQ(Run({"evaluate", "--pred", Fixture("malformed.json"), "--gt", gt}).exit_code, 2);
  EXPECT_EQ(Run({"evaluate", "--pred", gt, "--pred", gt, "--gt", gt}).exit_code, 2);
  const CliResult empty = Run({"evaluate", "--pred", Fixture("empty.json"), "--gt", gt, "--json"});
  EXPECT_EQ(empty.exit_code, 0);
  const auto j = nlohmann::json::parse(empty.out);
  EXPECT_DOUBLE_EQ(j["det_l"].get<double>(), 0.0);
  EXPECT_DOUBLE_EQ(j["top_ll"].get<double>(), 0.0);
  EXPECT_DOUBLE_EQ(j["ols_l"].get<double>(), 0.0);
}

TEST_F(CliTest, ConfigFileSuppliesDefaults) {
  const fs::path cfg = scratch_ / "cfg.json";
  io::WriteTextFile(cfg.string(),
                    R"({"evaluate": {"ranking-threshold": 0.01, "json": true}})");
  const std::vector<std::string> scenes{"--pred", Fixture("low_conf_pred.json"), "--gt",
                                        Fixture("low_conf_gt.json")};
  std::vector<std::string> args{"--config", cfg.string(), "evaluate"};
  args.insert(args.end(), scenes.begin(), scenes.end());
  CliResult r = Run(args);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_DOUBLE_EQ(nlohmann::json::parse(r.out)["top_ll"].get<double>(), 100.0);
  // The command line wins over the file.
  args.insert(args.end(), {"--ranking-threshold", "0.5"});
  r = Run(args);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_DOUBLE_EQ(nlohmann::json::parse(r.out)["top_ll"].get<double>(), 0.0);
}

TEST_F(CliTest, SplitAuditExitCodes) {
  const std::string sq = Fixture("audit_square.json");
  EXPECT_EQ(Run({"split-audit", "--train", sq, "--val", sq}).exit_code, 1);
  EXPECT_EQ(Run({"split-audit", "--train", sq, "--val", Fixture("audit_far.json")}).exit_code, 0);
  const CliResult quarter =
      Run({"split-audit", "--train", sq, "--val", Fixture("audit_shifted.json")});
  EXPECT_EQ(quarter.exit_code, 1);
  EXPECT_NE(quarter.out.find("intersection area: 0.250000"), std::string::npos) << quarter.out;
  EXPECT_EQ(
      Run({"split-audit", "--train", sq, "--val", Fixture("audit_no_footprint.json")}).exit_code,
      2);
}

TEST_F(CliTest, DemoIsDeterministicAcrossRunsAndThreads) {
  const fs::path a = scratch_ / "a", b = scratch_ / "b", c = scratch_ / "c";
  ASSERT_EQ(Run({"demo", "--seed", "7", "--out", a.string()}).exit_code, 0);
  ASSERT_EQ(Run({"demo", "--seed", "7", "--out", b.string()}, "CENTERLINE_THREADS=1").exit_code,
            0);
  ASSERT_EQ(Run({"demo", "--seed", "8", "--out", c.string()}, "CENTERLINE_THREADS=4").exit_code,
            0);
  const auto ta = testing::Tree(a);
  EXPECT_EQ(ta, testing::Tree(b));
  EXPECT_NE(testing::Slurp(a / "gt.json"), testing::Slurp(c / "gt.json"));
  for (const fs::path& root : {a, c}) {
    const auto report = nlohmann::json::parse(testing::Slurp(root / "report.json"));
    EXPECT_GT(report["ols_l"].get<double>(), 95.0);
    EXPECT_TRUE(fs::exists(root / "points" / "gt_0.txt"));
    EXPECT_TRUE(fs::exists(root / "points" / "pred_0.txt"));
    // Round-trips of the demo's own artifacts are canonical.
    const io::SceneFile gt = io::ReadSceneFile((root / "gt.json").string());
    EXPECT_EQ(io::SerializeScene(gt), testing::Slurp(root / "gt.json"));
    EXPECT_EQ(gt.instances.size(), 6u);
  }
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(Run({}).exit_code, 2);
  EXPECT_EQ(Run({"targets"}).exit_code, 2);
  EXPECT_EQ(Run({"--help"}).exit_code, 0);
}

}  // namespace
}  // namespace centerline
