// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. The COCO-dependent criterion runs when
// MASKPOINTS_COCO_ANNOTATIONS points at an instances JSON and is skipped
// (without failing) otherwise.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "maskpoints/annotations.hpp"
#include "maskpoints/field_ops.hpp"
#include "maskpoints/losses.hpp"
#include "maskpoints/predicates.hpp"
#include "maskpoints/serialize.hpp"
#include "maskpoints/sweep.hpp"
#include "oracles.hpp"

using namespace maskpoints;

namespace {

enum class Outcome { Pass, Fail, Skip };

struct Criterion {
  std::string name;
  std::function<Outcome(std::string&)> run;
};

// Shared synthetic-corpus sweep, computed once for the criteria that read it.
const ReconstructionReport& surrogate_report(double* elapsed_seconds) {
  static double elapsed = 0.0;
  static const ReconstructionReport report = [] {
    SweepConfig config;
    config.corpus_id = "synthetic-200@128";
    config.seed = 0;
    const auto t0 = std::chrono::steady_clock::now();
    const auto items = make_items(synthetic_corpus({0}, 200, 128));
    const ReconstructionReport r = reconstruction_sweep(items, config);
    elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            t0)
                  .count();
    return r;
  }();
  if (elapsed_seconds != nullptr) *elapsed_seconds = elapsed;
  return report;
}

Outcome table8_coco(std::string& detail) {
  const char* path = std::getenv("MASKPOINTS_COCO_ANNOTATIONS");
  if (path == nullptr || std::string(path).empty()) {
    detail = "set MASKPOINTS_COCO_ANNOTATIONS=<instances_val2017.json> to run";
    return Outcome::Skip;
  }
  const std::vector<int> n_values = {9, 25, 49, 81, 225, 441, 729};
  const double expected[] = {53.9, 70.2, 78.5, 84.3, 91.2, 94.3, 95.6};
  const double tolerance = 3.0;

  SweepConfig config;
  config.strategies = {Strategy::Dts};
  config.decoders = {Decoder::Triangulation};
  config.n_values = n_values;
  config.corpus_id = path;
  config.threads = 4;
  const auto items = make_items(load_annotations(path));
  const ReconstructionReport report = reconstruction_sweep(items, config);

  bool ok = true;
  char buf[160];
  for (std::size_t i = 0; i < n_values.size(); ++i) {
    const double got =
        100.0 *
        report.row(Strategy::Dts, n_values[i], Decoder::Triangulation).mean_iou;
    std::snprintf(buf, sizeof(buf), "n=%d: %.1f (ref %.1f) ", n_values[i], got,
                  expected[i]);
    detail += buf;
    if (std::fabs(got - expected[i]) > tolerance) ok = false;
  }
  return ok ? Outcome::Pass : Outcome::Fail;
}

Outcome table8_surrogate(std::string& detail) {
  double elapsed = 0.0;
  const ReconstructionReport& report = surrogate_report(&elapsed);
  const std::vector<int> n_values = {9, 25, 49, 81, 225, 441, 729};

  bool ok = true;
  char buf[96];
  double prev = -1.0;
  for (const int n : n_values) {
    const double iou =
        report.row(Strategy::Dts, n, Decoder::Triangulation).mean_iou;
    std::snprintf(buf, sizeof(buf), "n=%d: %.4f ", n, iou);
    detail += buf;
    if (iou < prev) ok = false;
    prev = iou;
  }
  const double at225 =
      report.row(Strategy::Dts, 225, Decoder::Triangulation).mean_iou;
  const double at729 =
      report.row(Strategy::Dts, 729, Decoder::Triangulation).mean_iou;
  if (!(at225 > 0.90)) ok = false;
  if (!(at729 > 0.95)) ok = false;
  std::snprintf(buf, sizeof(buf), "(sweep %.1fs)", elapsed);
  detail += buf;
  if (elapsed >= 120.0) ok = false;
  return ok ? Outcome::Pass : Outcome::Fail;
}

Outcome decoder_ordering(std::string& detail) {
  const ReconstructionReport& report = surrogate_report(nullptr);
  bool ok = true;
  char buf[96];
  for (const int n : {9, 25, 49, 81, 225}) {
    const double tri =
        report.row(Strategy::Dts, n, Decoder::Triangulation).mean_iou;
    const double concave =
        report.row(Strategy::Dts, n, Decoder::Concave).mean_iou;
    std::snprintf(buf, sizeof(buf), "n=%d: tri %.4f vs hull %.4f ", n, tri,
                  concave);
    detail += buf;
    if (!(tri >= concave)) ok = false;
  }
  return ok ? Outcome::Pass : Outcome::Fail;
}

Outcome strategy_ordering(std::string& detail) {
  const ReconstructionReport& report = surrogate_report(nullptr);
  const double boundary9 =
      report.row(Strategy::Boundary, 9, Decoder::Concave).mean_iou;
  const double grid9 = report.row(Strategy::Grid, 9, Decoder::Grid).mean_iou;
  const double dts729 =
      report.row(Strategy::Dts, 729, Decoder::Triangulation).mean_iou;
  const double boundary729 =
      report.row(Strategy::Boundary, 729, Decoder::Concave).mean_iou;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "n=9: boundary+concave %.4f vs grid+grid %.4f; "
                "n=729: dts+tri %.4f vs boundary+concave %.4f",
                boundary9, grid9, dts729, boundary729);
  detail = buf;
  return boundary9 > grid9 && dts729 > boundary729 ? Outcome::Pass
                                                   : Outcome::Fail;
}

Outcome oracle_equivalence(std::string& detail) {
  // Distance transform vs brute force, exact, 100 random 32x32 masks.
  Pcg32 rng(424242);
  for (int trial = 0; trial < 100; ++trial) {
    BinaryMask mask(32, 32);
    bool any = false;
    for (int r = 0; r < 32; ++r) {
      for (int c = 0; c < 32; ++c) {
        if (rng.next_double() < 0.3) {
          mask.set(r, c, true);
          any = true;
        }
      }
    }
    if (!any) mask.set(16, 16, true);
    const auto boundary = boundary_points(mask);
    const DistanceField field = distance_map(boundary, 32, 32);
    const auto brute = oracles::brute_squared_distances(boundary, 32, 32);
    for (std::size_t i = 0; i < brute.size(); ++i) {
      if (field.squared_pixels[i] != brute[i]) {
        detail = "distance transform mismatch at trial " +
                 std::to_string(trial);
        return Outcome::Fail;
      }
    }
  }
  detail += "edt ok; ";

  // Chamfer vs the O(n^2) oracle, exact, through n = 64.
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.bounded(64));
    std::vector<AttributedPoint> a, b;
    for (int i = 0; i < n; ++i) {
      a.push_back({100 * rng.next_double(), 100 * rng.next_double(), 1.0});
      b.push_back({100 * rng.next_double(), 100 * rng.next_double(), 1.0});
    }
    const DensePointSet sa(a), sb(b);
    if (chamfer_loss(sa, sb) != oracles::brute_chamfer(sa, sb)) {
      detail += "chamfer mismatch at trial " + std::to_string(trial);
      return Outcome::Fail;
    }
  }
  detail += "chamfer ok; ";

  // Delaunay empty-circumcircle check on 100 random 200-point sets.
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<AttributedPoint> pts;
    for (int i = 0; i < 200; ++i) {
      pts.push_back({500 * rng.next_double(), 500 * rng.next_double(), 1.0});
    }
    const Triangulation tri = delaunay(DensePointSet(pts));
    for (const auto& t : tri.triangles) {
      const Point2 a{tri.vertices[t[0]].x, tri.vertices[t[0]].y};
      const Point2 b{tri.vertices[t[1]].x, tri.vertices[t[1]].y};
      const Point2 c{tri.vertices[t[2]].x, tri.vertices[t[2]].y};
      if (orient2d_sign(a, b, c) != 1) {
        detail += "non-CCW triangle at trial " + std::to_string(trial);
        return Outcome::Fail;
      }
      for (const auto& v : tri.vertices) {
        if (incircle_sign(a, b, c, {v.x, v.y}) > 0) {
          detail += "circumcircle violation at trial " + std::to_string(trial);
          return Outcome::Fail;
        }
      }
    }
  }
  detail += "delaunay ok";
  return Outcome::Pass;
}

Outcome loss_properties(std::string& detail) {
  Pcg32 rng(7777);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng.bounded(48));
    std::vector<AttributedPoint> a, b;
    for (int i = 0; i < n; ++i) {
      a.push_back({64 * rng.next_double(), 64 * rng.next_double(), 1.0});
      b.push_back({64 * rng.next_double(), 64 * rng.next_double(), 1.0});
    }
    const DensePointSet sa(a), sb(b);
    const double set_ab = chamfer_loss(sa, sb);
    if (set_ab != chamfer_loss(sb, sa)) {
      detail = "symmetry violated at trial " + std::to_string(trial);
      return Outcome::Fail;
    }
    if (set_ab > point_to_point_loss(sa, sb)) {
      detail = "L_set above L_point at trial " + std::to_string(trial);
      return Outcome::Fail;
    }
    // Permutation invariance of the set loss.
    std::vector<AttributedPoint> shuffled = b;
    for (std::size_t j = shuffled.size(); j > 1; --j) {
      std::swap(shuffled[j - 1],
                shuffled[rng.bounded(static_cast<std::uint32_t>(j))]);
    }
    const DensePointSet sb_shuffled(shuffled);
    if (std::fabs(chamfer_loss(sa, sb_shuffled) - set_ab) > 1e-9) {
      detail = "permutation variance at trial " + std::to_string(trial);
      return Outcome::Fail;
    }
    if (chamfer_loss(sa, sa) != 0.0 || point_to_point_loss(sa, sa) != 0.0) {
      detail = "identical sets gave a nonzero loss";
      return Outcome::Fail;
    }
  }
  detail = "1000 random pairs ok";
  return Outcome::Pass;
}

Outcome complexity_model(std::string& detail) {
  const int k = 9;
  const int channels = 256;
  bool ok = true;

  // Exact polynomial degrees via doubling ratios.
  for (const auto [mode, degree] :
       {std::pair{HeadMode::GroupPoolClassification, 0},
        std::pair{HeadMode::SharedOffsetRegression, 1},
        std::pair{HeadMode::ConcatRegression, 2}}) {
    for (const int n : {9, 18, 36, 72}) {
      const double ratio =
          static_cast<double>(head_cost(2 * n, k, channels, mode)) /
          static_cast<double>(head_cost(n, k, channels, mode));
      if (ratio != std::pow(2.0, degree)) ok = false;
    }
  }
  detail += ok ? "degrees exact; " : "degree check failed; ";

  auto efficient = [&](int n) {
    return static_cast<double>(
               head_cost(n, k, channels, HeadMode::GroupPoolClassification)) +
           static_cast<double>(
               head_cost(n, k, channels, HeadMode::SharedOffsetRegression));
  };
  const double rise = efficient(81) / efficient(9);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "GP+SOF rise 9->81: %.3fx", rise);
  detail += buf;
  if (!(rise < 1.10)) ok = false;
  return ok ? Outcome::Pass : Outcome::Fail;
}

Outcome determinism(std::string& detail) {
  SweepConfig config;
  config.n_values = {9, 25, 49};
  config.seed = 17;
  config.corpus_id = "determinism-40@64";
  const auto items = make_items(synthetic_corpus({17}, 40, 64));

  const ReconstructionReport first = reconstruction_sweep(items, config);
  const ReconstructionReport second = reconstruction_sweep(items, config);
  SweepConfig threaded = config;
  threaded.threads = 3;
  const ReconstructionReport third = reconstruction_sweep(items, threaded);

  if (first.to_csv() != second.to_csv() ||
      first.to_json() != second.to_json()) {
    detail = "two identical runs differ";
    return Outcome::Fail;
  }
  if (first.to_csv() != third.to_csv() ||
      first.to_json() != third.to_json()) {
    detail = "thread count changed the report";
    return Outcome::Fail;
  }
  detail = "byte-identical across reruns and threads=3";
  return Outcome::Pass;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"table8-coco", table8_coco},
      {"table8-surrogate", table8_surrogate},
      {"decoder-ordering", decoder_ordering},
      {"strategy-ordering", strategy_ordering},
      {"oracle-equivalence", oracle_equivalence},
      {"loss-properties", loss_properties},
      {"complexity-model", complexity_model},
      {"determinism", determinism},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    std::string detail;
    Outcome outcome = Outcome::Fail;
    try {
      outcome = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const char* tag = outcome == Outcome::Pass   ? "PASS"
                      : outcome == Outcome::Skip ? "SKIP"
                                                 : "FAIL";
    std::printf("[%s] %s: %s\n", tag, criterion.name.c_str(), detail.c_str());
    if (outcome == Outcome::Fail) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
