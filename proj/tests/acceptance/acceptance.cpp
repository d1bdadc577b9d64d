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

// Acceptance run: one PASS/FAIL line per headline criterion, at the stated
// tolerances and time budgets. Exit status is nonzero if any line fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "centerline/error.h"
#include "centerline/extraction.h"
#include "centerline/metrics/assignment.h"
#include "centerline/metrics/curve_distance.h"
#include "centerline/metrics/detection.h"
#include "centerline/metrics/report.h"
#include "centerline/metrics/score.h"
#include "centerline/metrics/topology.h"
#include "centerline/reconstruction.h"
#include "centerline/synthetic.h"
#include "centerline/targets.h"
#include "support/cli_runner.h"
#include "support/generators.h"
#include "support/oracles.h"

namespace centerline {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string Format(const char* fmt, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), fmt, a, b, c, d);
  return buf;
}

// ---- 1: OLS_l composition against reference rows ----
Outcome OlsComposition() {
  struct Row {
    const char* name;
    double det, det_ch, top, ols, tol;
  };
  // Reference component triples and their OLS_l at one decimal.
  const Row rows[] = {
      {"multiple proposals", 33.1, 37.9, 25.0, 40.3, 0.0},
      {"baseline", 31.1, 31.7, 22.5, 36.8, 0.1},
      {"only offset", 32.5, 33.1, 23.8, 38.2, 0.1},
      {"only height", 32.6, 37.2, 23.4, 39.4, 0.1},
      {"no prediction", 31.1, 31.7, 22.5, 36.8, 0.1},
  };
  Outcome o{true, ""};
  for (const Row& r : rows) {
    const double v = metrics::OlsL(r.det, r.det_ch, r.top);
    // Tolerance 0 means equal after rounding to one decimal.
    const bool ok = r.tol == 0.0 ? std::round(v * 10.0) / 10.0 == r.ols
                                 : std::abs(v - r.ols) <= r.tol;
    o.pass = o.pass && ok;
    o.detail += std::string(r.name) + Format(" %.3f", v) + (ok ? "" : " (off)") + "; ";
  }
  return o;
}

// ---- 2: oracle round-trip on synthetic centerlines ----
Outcome OracleRoundTrip() {
  synthetic::Rng rng(20261016);
  const GridSpec spec;
  double worst_frechet = 0.0, worst_chamfer = 0.0, multi_sum = 0.0, base_sum = 0.0;
  int failures = 0;
  const int n = 50;
  for (int c = 0; c < n; ++c) {
    const auto kind = static_cast<synthetic::CurveKind>(c % 3);
    const Polyline3D gt = synthetic::MakeCenterline(kind, rng);
    const Polyline3D gt11 = ArcLengthResample(gt, 11);
    const TargetBundle t = MakeTargets(gt, spec);
    const ScalarGrid mask = Binarize(t.mask, 0.95);
    const QuadDirection dir = QuadDirectionLabel(gt);
    ReconstructionConfig cfg;  // order 4, 11 points
    const Reconstruction multi =
        ReconstructCurve(MultiPointProposal(mask, t.offset, t.height), dir, spec, cfg);
    const Reconstruction base =
        ReconstructCurve(ExpectationExtract(mask, dir), dir, spec, cfg);
    const double f = metrics::DiscreteFrechet(multi.curve, gt11);
    const double ch = metrics::Chamfer(multi.curve, gt11);
    worst_frechet = std::max(worst_frechet, f);
    worst_chamfer = std::max(worst_chamfer, ch);
    if (!(f < 0.05 && ch < 0.02)) ++failures;
    multi_sum += ch;
    base_sum += metrics::Chamfer(base.curve, gt11);
  }
  Outcome o;
  o.pass = failures == 0 && base_sum / n > multi_sum / n;
  o.detail = Format("worst Frechet %.2e m, worst Chamfer %.2e m, mean Chamfer multi %.2e m vs "
                    "baseline %.3f m",
                    worst_frechet, worst_chamfer, multi_sum / n, base_sum / n) +
             ", " + std::to_string(failures) + " curve(s) over bound";
  return o;
}

// ---- 3: thresholding flaw ----
Outcome ThresholdFlaw() {
  auto line = [](double y, double x0) {
    return Polyline3D({{x0, y, 0}, {x0 + 10, y, 0}, {x0 + 20, y, 0}});
  };
  std::vector<metrics::GraphVertex> v{{1, line(-10, -20), 0.9},
                                      {2, line(-10, 0), 0.9},
                                      {3, line(10, -20), 0.9}};
  const metrics::SceneGraph gt{v, {{1, 2, 1.0}}};
  const metrics::SceneGraph pred{v, {{1, 2, 0.3}}};
  metrics::TopologyConfig flawed;
  metrics::TopologyConfig fixed;
  fixed.ranking_threshold = 0.01;
  fixed.unmatched_negative_penalty = 0.011;
  metrics::TopologyConfig remap;
  remap.remap = true;
  const double a = metrics::TopLl(pred, gt, flawed).score_percent;
  const double b = metrics::TopLl(pred, gt, fixed).score_percent;
  const double c = metrics::TopLl(pred, gt, remap).score_percent;
  // Same numbers through the report path.
  const std::vector<metrics::SceneInput> scenes{{"fixture", pred, gt}};
  const auto report = metrics::EvaluateScenes(scenes, metrics::MetricConfig{}, 1);
  const auto& var = report.top_ll_variants;
  Outcome o;
  o.pass = a == 0.0 && b == 100.0 && c == 100.0 && var.flawed == 0.0 &&
           var.fixed == 100.0 && var.remapped == 100.0;
  o.detail = Format("TOP_ll at 0.5: %.1f, at 0.01: %.1f, remapped at 0.5: %.1f", a, b, c);
  return o;
}

// ---- 4: metric oracle suites ----
Outcome MetricOracles() {
  synthetic::Rng rng(4);
  int frechet_bad = 0, hungarian_bad = 0;
  for (int c = 0; c < 1000; ++c) {
    const auto a = gen::RandomPoints(rng, 2 + rng.Index(7));
    const auto b = gen::RandomPoints(rng, 2 + rng.Index(7));
    if (metrics::DiscreteFrechet(Polyline3D(a), Polyline3D(b)) != oracle::FrechetMemo(a, b)) {
      ++frechet_bad;
    }
  }
  for (int c = 0; c < 200; ++c) {
    const int n = 1 + rng.Index(7);
    metrics::CostMatrix m(n, std::vector<double>(n));
    for (auto& row : m) {
      // Multiples of 1/8 keep every partial sum exact.
      for (double& x : row) x = std::floor(rng.Uniform(0, 800)) / 8.0;
    }
    if (metrics::Hungarian(m).total_cost != oracle::BruteAssignmentCost(m)) ++hungarian_bad;
  }
  // Hand-tabulated PR fixture: AP 0.5 / 1 / 1 at 1 / 2 / 3 m.
  auto h = [](double y) { return Polyline3D({{0, y, 0}, {5, y, 0}, {10, y, 0}}); };
  const std::vector<Polyline3D> gts{h(0.0), h(10.0)};
  const std::vector<metrics::ScoredCurve> preds{{h(0.4), 0.9}, {h(11.2), 0.8}, {h(2.5), 0.7}};
  const double th[] = {1.0, 2.0, 3.0};
  const auto det = metrics::DetScore(preds, gts, metrics::CurveDistance::kFrechet, th);
  const bool det_ok = std::abs(det.ap[0] - 0.5) < 1e-9 && std::abs(det.ap[1] - 1.0) < 1e-9 &&
                      std::abs(det.ap[2] - 1.0) < 1e-9 &&
                      std::abs(det.map_percent - 250.0 / 3.0) < 1e-9;
  Outcome o;
  o.pass = frechet_bad == 0 && hungarian_bad == 0 && det_ok;
  o.detail = std::to_string(frechet_bad) + "/1000 Frechet mismatches, " +
             std::to_string(hungarian_bad) + "/200 assignment mismatches, DET fixture " +
             Format("mAP %.6f %%", det.map_percent);
  return o;
}

// ---- 5: target-field exactness ----
Outcome TargetExactness() {
  synthetic::Rng rng(5);
  double worst_on_curve = 0.0, worst_loss = 0.0, worst_truth = 0.0;
  int band_mismatch = 0;
  for (int c = 0; c < 100; ++c) {
    const int hgt = 40 + rng.Index(40), wid = 40 + rng.Index(40);
    const GridSpec spec = gen::SmallSpec(hgt, wid);
    const Polyline3D curve = gen::SmoothGridCurve(rng, hgt, wid);
    const std::vector<Point3> pts(curve.points().begin(), curve.points().end());
    const TargetBundle t = MakeTargets(curve, spec);
    for (int i = 0; i < hgt; ++i) {
      for (int j = 0; j < wid; ++j) {
        const double oi = t.offset.at(i, j, 0), oj = t.offset.at(i, j, 1);
        const bool in = std::hypot(oi, oj) < 4.0;
        if (in != (t.fg_band.at(i, j) == 1.0)) ++band_mismatch;
        if (in) {
          worst_on_curve = std::max(
              worst_on_curve, static_cast<double>(oracle::PlanarToPolyline(pts, i + oi, j + oj)));
        }
      }
    }
    // Zero at truth.
    const double zo = OffsetLoss(t.offset, t.offset, t.fg_band);
    const double zh = HeightLoss(t.height, t.height, t.fg_band);
    const MaskLossTerms zm = MaskLoss(t.mask, t.mask);
    const std::vector<Point3> cp = gen::RandomPoints(rng, 4, 5.0);
    MatchPrediction mp{{0, 0, 0, 0}, t.mask, cp};
    const QuadDirection dir = QuadDirectionLabel(curve);
    mp.class_probs[static_cast<std::size_t>(dir)] = 1.0;
    const double zc = MatchCost(mp, MatchTarget{dir, t.mask, cp}, {});
    worst_truth = std::max({worst_truth, zo, zh, zm.bce, zm.dice, zc});

    // Against naive loops on perturbed predictions.
    const VectorGrid po = gen::RandomField<2>(rng, spec, -4, 4);
    const ScalarGrid ph = gen::RandomField<1>(rng, spec, 0, 1);
    const ScalarGrid pp = gen::RandomField<1>(rng, spec, 0, 1);
    const MaskLossTerms m = MaskLoss(pp, t.mask);
    const std::vector<Point3> cp2 = gen::RandomPoints(rng, 4, 5.0);
    MatchPrediction mp2{{0.1, 0.2, 0.3, 0.4}, pp, cp2};
    double l1 = 0.0;
    for (int k = 0; k < 4; ++k) {
      l1 += std::fabs(cp[k].x - cp2[k].x) + std::fabs(cp[k].y - cp2[k].y) +
            std::fabs(cp[k].z - cp2[k].z);
    }
    const double naive_cost =
        2.0 * (1.0 - mp2.class_probs[static_cast<std::size_t>(dir)]) + 5.0 * l1 / 4.0 +
        5.0 * oracle::BceNaive(pp, t.mask) + 5.0 * oracle::DiceNaive(pp, t.mask);
    worst_loss = std::max(
        {worst_loss,
         std::abs(OffsetLoss(po, t.offset, t.fg_band) -
                  oracle::OffsetLossNaive(po, t.offset, t.fg_band)),
         std::abs(HeightLoss(ph, t.height, t.fg_band) -
                  oracle::HeightLossNaive(ph, t.height, t.fg_band)),
         std::abs(m.bce - oracle::BceNaive(pp, t.mask)),
         std::abs(m.dice - oracle::DiceNaive(pp, t.mask)),
         std::abs(MatchCost(mp2, MatchTarget{dir, t.mask, cp}, {}) - naive_cost)});
  }
  Outcome o;
  // The mask terms clamp probabilities to [1e-7, 1 - 1e-7], so "zero at
  // truth" is zero up to that clamp.
  o.pass = band_mismatch == 0 && worst_on_curve < 1e-6 && worst_loss < 1e-9 &&
           worst_truth < 1e-5;
  o.detail = Format("worst on-curve residual %.2e cells, worst loss-vs-oracle %.2e, worst "
                    "loss at truth %.2e",
                    worst_on_curve, worst_loss, worst_truth) +
             ", " + std::to_string(band_mismatch) + " band mismatches";
  return o;
}

// ---- 6: numerical fitting ----
Outcome FittingChecks() {
  synthetic::Rng rng(6);
  const GridSpec spec;
  double worst = 0.0;
  for (int c = 0; c < 200; ++c) {
    const QuadDirection dir = static_cast<QuadDirection>(rng.Index(4));
    const bool lon = IsLongitudinal(dir);
    const double a[5] = {rng.Uniform(-3, 3), rng.Uniform(-0.3, 0.3), rng.Uniform(-0.01, 0.01),
                         rng.Uniform(-2e-4, 2e-4), rng.Uniform(-4e-6, 4e-6)};
    const double b[7] = {rng.Uniform(-2, 2),      rng.Uniform(-0.05, 0.05),
                         rng.Uniform(-0.05, 0.05), rng.Uniform(-1e-3, 1e-3),
                         rng.Uniform(-1e-3, 1e-3), rng.Uniform(-1e-5, 1e-5),
                         rng.Uniform(-1e-5, 1e-5)};
    auto f = [&](double u) { return a[0] + u * (a[1] + u * (a[2] + u * (a[3] + u * a[4]))); };
    auto g = [&](double x, double y) {
      return b[0] + b[1] * x + b[2] * y + b[3] * x * x + b[4] * y * y + b[5] * x * x * x +
             b[6] * y * y * y;
    };
    const double lo = lon ? rng.Uniform(-45, -20) : rng.Uniform(-22, -10);
    const double hi = lon ? rng.Uniform(10, 45) : rng.Uniform(10, 22);
    GridPointSet s;
    const int n = 20 + rng.Index(60);
    for (int k = 0; k < n; ++k) {
      const double u = lo + (hi - lo) * k / (n - 1);
      const double x = lon ? u : f(u), y = lon ? f(u) : u;
      s.points.push_back(WorldToGrid(spec, {x, y, g(x, y)}));
    }
    const Reconstruction r = ReconstructCurve(s, dir, spec);
    for (const Point3& p : r.curve.points()) {
      const double u = lon ? p.x : p.y, v = lon ? p.y : p.x;
      worst = std::max({worst, std::abs(v - f(u)), std::abs(p.z - g(p.x, p.y))});
    }
  }
  int non_finite = 0, unexpected = 0, reduced = 0;
  for (int c = 0; c < 1000; ++c) {
    GridPointSet s;
    const int kind = c % 4;
    const int n = 2 + rng.Index(12);
    const double i0 = rng.Uniform(0, 199), j0 = rng.Uniform(0, 103);
    for (int k = 0; k < n; ++k) {
      double i = i0, j = j0;
      switch (kind) {
        case 0: i = i0 + k; break;
        case 1: j = j0 + k; break;
        case 2: i = i0 + (k % 2); j = j0 + rng.Uniform(-3, 3); break;
        default: i = i0 + 0.5 * k; j = j0 + 0.5 * k; break;
      }
      s.points.push_back({i, j, rng.Uniform(0, 1)});
    }
    try {
      const Reconstruction r =
          ReconstructCurve(s, static_cast<QuadDirection>(rng.Index(4)), spec);
      reduced += r.path.order_reduced || r.height.order_reduced;
      for (const Point3& p : r.curve.points()) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z)) ++non_finite;
      }
    } catch (const Error&) {
      ++unexpected;
    }
  }
  Outcome o;
  o.pass = worst < 1e-6 && non_finite == 0 && unexpected == 0;
  o.detail = Format("worst polynomial residual %.2e m over 200 fits; ", worst) +
             std::to_string(non_finite) + " non-finite coordinates and " +
             std::to_string(unexpected) + " failures in 1000 degenerate sets (" +
             std::to_string(reduced) + " order-reduced)";
  return o;
}

// ---- 7: CLI end to end ----
Outcome CliEndToEnd() {
  const fs::path scratch = fs::temp_directory_path() / "centerline_acceptance";
  fs::remove_all(scratch);
  const std::string cli = CENTERLINE_CLI_PATH;
  const fs::path fx = CENTERLINE_FIXTURE_DIR;
  auto run = [&](std::vector<std::string> args) {
    return testing::RunCli(cli, args, scratch / "io");
  };
  const int d1 = run({"demo", "--seed", "7", "--out", (scratch / "a").string()}).exit_code;
  const int d2 = run({"demo", "--seed", "7", "--out", (scratch / "b").string()}).exit_code;
  const bool identical =
      d1 == 0 && d2 == 0 && testing::Tree(scratch / "a") == testing::Tree(scratch / "b");

  const std::string gt = (scratch / "a" / "gt.json").string();
  const auto ev = run({"evaluate", "--pred", gt, "--gt", gt, "--json"});
  bool all100 = ev.exit_code == 0;
  if (all100) {
    const auto j = nlohmann::json::parse(ev.out);
    for (const char* key : {"det_l", "det_l_ch", "top_ll", "ols_l"}) {
      all100 = all100 && j[key].get<double>() == 100.0;
    }
  }

  const std::string sq = (fx / "audit_square.json").string();
  const int same = run({"split-audit", "--train", sq, "--val", sq}).exit_code;
  const int apart =
      run({"split-audit", "--train", sq, "--val", (fx / "audit_far.json").string()}).exit_code;
  const auto quarter =
      run({"split-audit", "--train", sq, "--val", (fx / "audit_shifted.json").string()});
  const int missing =
      run({"split-audit", "--train", sq, "--val", (fx / "audit_no_footprint.json").string()})
          .exit_code;
  const bool audit = same == 1 && apart == 0 && quarter.exit_code == 1 &&
                     quarter.out.find("intersection area: 0.250000") != std::string::npos &&
                     missing == 2;
  Outcome o;
  o.pass = identical && all100 && audit;
  o.detail = std::string("demo byte-identical: ") + (identical ? "yes" : "no") +
             ", evaluate pred==gt all 100: " + (all100 ? "yes" : "no") +
             ", split-audit exits identical/disjoint/quarter/missing = " +
             std::to_string(same) + "/" + std::to_string(apart) + "/" +
             std::to_string(quarter.exit_code) + "/" + std::to_string(missing);
  return o;
}

struct Criterion {
  const char* name;
  double budget_s;  // 0 = "instant", checked against 1 s
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace centerline

int main() {
  using namespace centerline;
  const Criterion criteria[] = {
      {"OLS_l composition on reference rows", 0.0, OlsComposition},
      {"oracle round-trip on 50 synthetic centerlines", 10.0, OracleRoundTrip},
      {"thresholding flaw on low-confidence fixture", 0.0, ThresholdFlaw},
      {"metric oracle suites", 30.0, MetricOracles},
      {"target-field exactness on 100 curves", 20.0, TargetExactness},
      {"numerical fitting checks", 20.0, FittingChecks},
      {"CLI end-to-end", 10.0, CliEndToEnd},
  };
  int failed = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const double budget = c.budget_s > 0.0 ? c.budget_s : 1.0;
    const bool in_time = secs < budget;
    const bool pass = o.pass && in_time;
    failed += pass ? 0 : 1;
    std::printf("%s [%d] %s: %s (%.2f s of %.0f s)\n", pass ? "PASS" : "FAIL", index, c.name,
                o.detail.c_str(), secs, budget);
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
