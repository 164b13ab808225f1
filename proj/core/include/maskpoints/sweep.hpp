#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maskpoints/annotations.hpp"
#include "maskpoints/corpus.hpp"
#include "maskpoints/decode.hpp"

namespace maskpoints {

enum class Strategy { Boundary, Grid, Dts };
enum class Decoder { Triangulation, Concave, Grid };

const char* to_string(Strategy s) noexcept;
const char* to_string(Decoder d) noexcept;
std::optional<Strategy> strategy_from_string(const std::string& name);
std::optional<Decoder> decoder_from_string(const std::string& name);

struct SweepConfig {
  std::vector<Strategy> strategies{Strategy::Boundary, Strategy::Grid,
                                   Strategy::Dts};
  std::vector<int> n_values{9, 25, 49, 81, 225, 441, 729};  // ascending
  std::vector<Decoder> decoders{Decoder::Triangulation, Decoder::Concave,
                                Decoder::Grid};
  double delta = 0.04;
  double tau = 0.5;
  int hull_k = 3;
  std::uint64_t seed = 0;
  int threads = 1;
  std::string corpus_id = "unnamed";
};

struct SweepRow {
  Strategy strategy{};
  int n = 0;
  Decoder decoder{};
  double mean_iou = 0.0;
  std::int64_t successes = 0;
  std::int64_t failures = 0;
  // COCO-style area buckets over the source masks (< 32^2, < 96^2, rest).
  double mean_iou_small = 0.0;
  double mean_iou_medium = 0.0;
  double mean_iou_large = 0.0;
  std::int64_t count_small = 0;
  std::int64_t count_medium = 0;
  std::int64_t count_large = 0;
};

struct ReconstructionReport {
  SweepConfig config;
  std::int64_t corpus_size = 0;
  std::vector<SweepRow> rows;

  std::string to_csv() const;
  std::string to_json() const;
  const SweepRow& row(Strategy s, int n, Decoder d) const;
};

/// One work item: the ground-truth mask plus an optional stored contour (the
/// annotation polygon); masks without one get a traced contour on demand.
struct SweepItem {
  BinaryMask mask;
  std::optional<Polygon> contour;
};

std::vector<SweepItem> make_items(const std::vector<BinaryMask>& corpus);
std::vector<SweepItem> make_items(const AnnotationSet& annotations);

/// Encode -> ground-truth attributes -> decode -> IoU against the source,
/// macro-averaged per (strategy, n, decoder) cell. Per-item failures
/// (infeasible pairings, degenerate point sets) are counted, not raised.
/// Output is a pure function of (items, config); the thread count only
/// partitions the work.
ReconstructionReport reconstruction_sweep(const std::vector<SweepItem>& items,
                                          const SweepConfig& config);

struct LossReportRow {
  int item = 0;
  std::string perturbation;  // "none", "shuffle", "jitter"
  int n = 0;
  double sigma = 0.0;
  double l_point = 0.0;
  double l_set = 0.0;
};

struct LossReport {
  std::vector<LossReportRow> rows;
  double mean_l_point_jitter = 0.0;
  double mean_l_set_jitter = 0.0;

  std::string to_csv() const;
};

/// DTS-encodes each mask, perturbs the encoding (index shuffle, Gaussian
/// jitter of the given sigma), and reports both localization losses against
/// the reference encoding.
LossReport loss_report(const std::vector<SweepItem>& items, int n,
                       double sigma, double delta, std::uint64_t seed);

}  // namespace maskpoints
