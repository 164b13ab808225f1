#include "maskpoints/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <thread>

#include "json.hpp"
#include "maskpoints/losses.hpp"
#include "maskpoints/sampling.hpp"

namespace maskpoints {

using nlohmann::json;

const char* to_string(Strategy s) noexcept {
  switch (s) {
    case Strategy::Boundary: return "boundary";
    case Strategy::Grid: return "grid";
    case Strategy::Dts: return "dts";
  }
  return "unknown";
}

const char* to_string(Decoder d) noexcept {
  switch (d) {
    case Decoder::Triangulation: return "triangulation";
    case Decoder::Concave: return "concave";
    case Decoder::Grid: return "grid";
  }
  return "unknown";
}

std::optional<Strategy> strategy_from_string(const std::string& name) {
  if (name == "boundary") return Strategy::Boundary;
  if (name == "grid") return Strategy::Grid;
  if (name == "dts") return Strategy::Dts;
  return std::nullopt;
}

std::optional<Decoder> decoder_from_string(const std::string& name) {
  if (name == "triangulation") return Decoder::Triangulation;
  if (name == "concave") return Decoder::Concave;
  if (name == "grid") return Decoder::Grid;
  return std::nullopt;
}

std::vector<SweepItem> make_items(const std::vector<BinaryMask>& corpus) {
  std::vector<SweepItem> items;
  items.reserve(corpus.size());
  for (const BinaryMask& mask : corpus) {
    items.push_back({mask, std::nullopt});
  }
  return items;
}

std::vector<SweepItem> make_items(const AnnotationSet& annotations) {
  std::vector<SweepItem> items;
  items.reserve(annotations.records.size());
  for (const AnnotationRecord& record : annotations.records) {
    items.push_back({record.to_mask(), record.longest_polygon()});
  }
  return items;
}

namespace {

struct CellOutcome {
  double iou = 0.0;
  bool ok = false;
};

// Deterministic per-(item, n) stream for DTS draws.
std::uint64_t dts_seed(std::uint64_t base, std::size_t item, int n) {
  return splitmix64(splitmix64(base ^ (item + 1)) ^
                    static_cast<std::uint64_t>(n));
}

// All cells for one item, in (strategy, n, decoder) order.
std::vector<CellOutcome> run_item(const SweepItem& item,
                                  const SweepConfig& config,
                                  std::size_t item_index) {
  const BinaryMask& mask = item.mask;
  const int h = mask.height();
  const int w = mask.width();
  const DecodeConfig decode_cfg(config.tau, config.hull_k);

  std::vector<CellOutcome> out;
  out.reserve(config.strategies.size() * config.n_values.size() *
              config.decoders.size());

  // Per-item intermediates, built lazily and shared across cells.
  std::optional<DistanceField> dist;
  std::optional<ProbField> prob;
  std::optional<Polygon> contour = item.contour;
  std::optional<Box> box;

  auto the_contour = [&]() -> const Polygon& {
    if (!contour) contour = trace_contour(mask);
    return *contour;
  };
  auto the_fields = [&]() {
    if (!dist) {
      dist = distance_map(boundary_points(mask), h, w);
      prob = sampling_probability(*dist, SamplingBandConfig(config.delta));
    }
  };
  auto the_box = [&]() -> const Box& {
    if (!box) box = foreground_center_box(mask);
    return *box;
  };

  for (const Strategy strategy : config.strategies) {
    for (const int n : config.n_values) {
      // Encode once per (strategy, n); per-decoder failures stay per-cell.
      std::optional<DensePointSet> encoded;
      std::optional<GridSpec> grid_spec;
      try {
        switch (strategy) {
          case Strategy::Boundary:
            encoded = sample_boundary(the_contour(), n);
            break;
          case Strategy::Grid: {
            grid_spec = GridSpec::for_box(the_box(), n);
            encoded = assign_attributes(sample_grid(the_box(), *grid_spec),
                                        mask);
            break;
          }
          case Strategy::Dts: {
            the_fields();
            encoded = assign_attributes(
                sample_dts(*prob, n, {dts_seed(config.seed, item_index, n)},
                           SamplingBandConfig(config.delta), *dist),
                mask);
            break;
          }
        }
      } catch (const Error&) {
        encoded.reset();
      }

      for (const Decoder decoder : config.decoders) {
        CellOutcome cell;
        if (encoded) {
          try {
            BinaryMask decoded(1, 1);
            switch (decoder) {
              case Decoder::Triangulation:
                decoded = decode_triangulation(*encoded, h, w, decode_cfg);
                break;
              case Decoder::Concave:
                decoded = concave_hull(*encoded, decode_cfg, h, w);
                break;
              case Decoder::Grid:
                if (strategy != Strategy::Grid) {
                  throw Error(ErrorKind::LayoutError,
                              "grid decoder needs grid-sampled points");
                }
                decoded = decode_grid(*encoded, *grid_spec, the_box(), h, w,
                                      decode_cfg);
                break;
            }
            cell.iou = mask_iou(mask, decoded);
            cell.ok = true;
          } catch (const Error&) {
            cell.ok = false;
          }
        }
        out.push_back(cell);
      }
    }
  }
  return out;
}

}  // namespace

ReconstructionReport reconstruction_sweep(const std::vector<SweepItem>& items,
                                          const SweepConfig& config) {
  if (items.empty()) {
    throw Error(ErrorKind::InvalidCount, "sweep needs a non-empty corpus");
  }
  if (!std::is_sorted(config.n_values.begin(), config.n_values.end())) {
    throw Error(ErrorKind::ConfigError, "n values must be ascending");
  }

  std::vector<std::vector<CellOutcome>> results(items.size());
  const int threads = std::max(1, config.threads);
  if (threads == 1) {
    for (std::size_t i = 0; i < items.size(); ++i) {
      results[i] = run_item(items[i], config, i);
    }
  } else {
    std::vector<std::thread> pool;
    std::size_t begin = 0;
    for (int t = 0; t < threads; ++t) {
      const std::size_t end =
          items.size() * (t + 1) / static_cast<std::size_t>(threads);
      pool.emplace_back([&, begin, end]() {
        for (std::size_t i = begin; i < end; ++i) {
          results[i] = run_item(items[i], config, i);
        }
      });
      begin = end;
    }
    for (std::thread& worker : pool) worker.join();
  }

  // Area buckets per item (COCO small/medium/large thresholds).
  std::vector<int> bucket(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::int64_t area = items[i].mask.foreground_count();
    bucket[i] = area < 32 * 32 ? 0 : area < 96 * 96 ? 1 : 2;
  }

  ReconstructionReport report;
  report.config = config;
  report.corpus_size = static_cast<std::int64_t>(items.size());

  std::size_t cell = 0;
  for (const Strategy strategy : config.strategies) {
    for (const int n : config.n_values) {
      for (const Decoder decoder : config.decoders) {
        SweepRow row;
        row.strategy = strategy;
        row.n = n;
        row.decoder = decoder;
        double sum = 0.0;
        double bucket_sum[3] = {0.0, 0.0, 0.0};
        std::int64_t bucket_count[3] = {0, 0, 0};
        for (std::size_t i = 0; i < items.size(); ++i) {
          const CellOutcome& outcome = results[i][cell];
          if (!outcome.ok) {
            ++row.failures;
            continue;
          }
          ++row.successes;
          sum += outcome.iou;
          bucket_sum[bucket[i]] += outcome.iou;
          ++bucket_count[bucket[i]];
        }
        row.mean_iou = row.successes > 0 ? sum / row.successes : 0.0;
        row.mean_iou_small =
            bucket_count[0] > 0 ? bucket_sum[0] / bucket_count[0] : 0.0;
        row.mean_iou_medium =
            bucket_count[1] > 0 ? bucket_sum[1] / bucket_count[1] : 0.0;
        row.mean_iou_large =
            bucket_count[2] > 0 ? bucket_sum[2] / bucket_count[2] : 0.0;
        row.count_small = bucket_count[0];
        row.count_medium = bucket_count[1];
        row.count_large = bucket_count[2];
        report.rows.push_back(row);
        ++cell;
      }
    }
  }
  return report;
}

const SweepRow& ReconstructionReport::row(Strategy s, int n, Decoder d) const {
  for (const SweepRow& row : rows) {
    if (row.strategy == s && row.n == n && row.decoder == d) return row;
  }
  throw Error(ErrorKind::SchemaError, "no such sweep row");
}

std::string ReconstructionReport::to_csv() const {
  char line[512];
  std::snprintf(line, sizeof(line),
                "# maskpoints-sweep v1 corpus=%s delta=%.9g tau=%.9g "
                "hull_k=%d seed=%llu size=%lld\n",
                config.corpus_id.c_str(), config.delta, config.tau,
                config.hull_k, static_cast<unsigned long long>(config.seed),
                static_cast<long long>(corpus_size));
  std::string out = line;
  out +=
      "strategy,n,decoder,mean_iou,successes,failures,"
      "mean_iou_small,count_small,mean_iou_medium,count_medium,"
      "mean_iou_large,count_large\n";
  for (const SweepRow& row : rows) {
    std::snprintf(line, sizeof(line),
                  "%s,%d,%s,%.6f,%lld,%lld,%.6f,%lld,%.6f,%lld,%.6f,%lld\n",
                  to_string(row.strategy), row.n, to_string(row.decoder),
                  row.mean_iou, static_cast<long long>(row.successes),
                  static_cast<long long>(row.failures), row.mean_iou_small,
                  static_cast<long long>(row.count_small), row.mean_iou_medium,
                  static_cast<long long>(row.count_medium), row.mean_iou_large,
                  static_cast<long long>(row.count_large));
    out += line;
  }
  return out;
}

std::string ReconstructionReport::to_json() const {
  json strategies = json::array();
  for (const Strategy s : config.strategies) strategies.push_back(to_string(s));
  json decoders = json::array();
  for (const Decoder d : config.decoders) decoders.push_back(to_string(d));

  json rows_json = json::array();
  for (const SweepRow& row : rows) {
    rows_json.push_back({{"strategy", to_string(row.strategy)},
                         {"n", row.n},
                         {"decoder", to_string(row.decoder)},
                         {"mean_iou", row.mean_iou},
                         {"successes", row.successes},
                         {"failures", row.failures},
                         {"mean_iou_small", row.mean_iou_small},
                         {"count_small", row.count_small},
                         {"mean_iou_medium", row.mean_iou_medium},
                         {"count_medium", row.count_medium},
                         {"mean_iou_large", row.mean_iou_large},
                         {"count_large", row.count_large}});
  }
  const json doc = {{"schema", "maskpoints-sweep-v1"},
                    {"config",
                     {{"corpus", config.corpus_id},
                      {"strategies", strategies},
                      {"n_values", config.n_values},
                      {"decoders", decoders},
                      {"delta", config.delta},
                      {"tau", config.tau},
                      {"hull_k", config.hull_k},
                      {"seed", config.seed}}},
                    {"corpus_size", corpus_size},
                    {"rows", rows_json}};
  return doc.dump(2);
}

LossReport loss_report(const std::vector<SweepItem>& items, int n,
                       double sigma, double delta, std::uint64_t seed) {
  if (items.empty()) {
    throw Error(ErrorKind::InvalidCount, "loss report needs a corpus");
  }
  LossReport report;
  double jitter_point_sum = 0.0;
  double jitter_set_sum = 0.0;
  std::int64_t jitter_count = 0;

  for (std::size_t i = 0; i < items.size(); ++i) {
    const BinaryMask& mask = items[i].mask;
    const DistanceField dist =
        distance_map(boundary_points(mask), mask.height(), mask.width());
    const ProbField prob =
        sampling_probability(dist, SamplingBandConfig(delta));
    const DensePointSet reference = assign_attributes(
        sample_dts(prob, n, {splitmix64(seed ^ (i + 1))},
                   SamplingBandConfig(delta), dist),
        mask);

    Pcg32 rng(seed, 2 * i + 1);

    // Index shuffle leaves the set identical, only the order moves.
    std::vector<AttributedPoint> shuffled = reference.points();
    for (std::size_t j = shuffled.size(); j > 1; --j) {
      const std::uint32_t k = rng.bounded(static_cast<std::uint32_t>(j));
      std::swap(shuffled[j - 1], shuffled[k]);
    }
    const DensePointSet shuffled_set(shuffled);

    std::vector<AttributedPoint> jittered = reference.points();
    for (AttributedPoint& p : jittered) {
      p.x += sigma * rng.next_gaussian();
      p.y += sigma * rng.next_gaussian();
    }
    const DensePointSet jittered_set(jittered);

    report.rows.push_back({static_cast<int>(i), "none", n, 0.0,
                           point_to_point_loss(reference, reference),
                           chamfer_loss(reference, reference)});
    report.rows.push_back({static_cast<int>(i), "shuffle", n, 0.0,
                           point_to_point_loss(reference, shuffled_set),
                           chamfer_loss(reference, shuffled_set)});
    const double jitter_point = point_to_point_loss(reference, jittered_set);
    const double jitter_set = chamfer_loss(reference, jittered_set);
    report.rows.push_back(
        {static_cast<int>(i), "jitter", n, sigma, jitter_point, jitter_set});
    jitter_point_sum += jitter_point;
    jitter_set_sum += jitter_set;
    ++jitter_count;
  }

  report.mean_l_point_jitter = jitter_point_sum / jitter_count;
  report.mean_l_set_jitter = jitter_set_sum / jitter_count;
  return report;
}

std::string LossReport::to_csv() const {
  std::string out = "item,perturbation,n,sigma,l_point,l_set\n";
  char line[160];
  for (const LossReportRow& row : rows) {
    std::snprintf(line, sizeof(line), "%d,%s,%d,%.6f,%.6f,%.6f\n", row.item,
                  row.perturbation.c_str(), row.n, row.sigma, row.l_point,
                  row.l_set);
    out += line;
  }
  return out;
}

}  // namespace maskpoints
