// Command-line front end: encode masks into attributed point sets, decode
// point sets back into masks, and run the reconstruction/loss/cost reports.
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "maskpoints/annotations.hpp"
#include "maskpoints/decode.hpp"
#include "maskpoints/field_ops.hpp"
#include "maskpoints/sampling.hpp"
#include "maskpoints/serialize.hpp"
#include "maskpoints/sweep.hpp"

using namespace maskpoints;
using nlohmann::json;

namespace {

BinaryMask load_mask_file(const std::string& path) {
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".pgm") {
    return read_pgm(path);
  }
  return rle_decode(rle_from_json(read_text_file(path)));
}

std::vector<SweepItem> load_items(const std::string& annotations,
                                  std::uint64_t seed, int count, int size,
                                  std::string* corpus_id) {
  if (!annotations.empty()) {
    *corpus_id = annotations;
    return make_items(load_annotations(annotations));
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "synthetic-%d@%d", count, size);
  *corpus_id = buf;
  return make_items(synthetic_corpus({seed}, count, size));
}

std::vector<Strategy> parse_strategies(const std::vector<std::string>& names) {
  if (names.empty()) {
    return {Strategy::Boundary, Strategy::Grid, Strategy::Dts};
  }
  std::vector<Strategy> out;
  for (const std::string& name : names) {
    const auto s = strategy_from_string(name);
    if (!s) throw CLI::ValidationError("--strategy", "unknown: " + name);
    out.push_back(*s);
  }
  return out;
}

std::vector<Decoder> parse_decoders(const std::vector<std::string>& names) {
  if (names.empty()) {
    return {Decoder::Triangulation, Decoder::Concave, Decoder::Grid};
  }
  std::vector<Decoder> out;
  for (const std::string& name : names) {
    const auto d = decoder_from_string(name);
    if (!d) throw CLI::ValidationError("--decoder", "unknown: " + name);
    out.push_back(*d);
  }
  return out;
}

// Metadata rider on the point-set JSON so `decode` can reconstruct grid
// layouts without re-deriving them.
json encode_meta(Strategy strategy, const BinaryMask& mask,
                 const std::optional<Box>& box, int n) {
  json meta = {{"strategy", to_string(strategy)},
               {"height", mask.height()},
               {"width", mask.width()},
               {"n", n}};
  if (box) {
    meta["box"] = {box->x_min, box->y_min, box->x_max, box->y_max};
  }
  return meta;
}

int run_encode(const std::string& mask_path, const std::string& annotations,
               int ann_index, const std::string& strategy_name, int n,
               double delta, std::uint64_t seed, const std::string& out_path,
               const std::string& dump_distance,
               const std::string& dump_probability) {
  const auto strategy = strategy_from_string(strategy_name);
  if (!strategy) {
    std::cerr << "unknown strategy " << strategy_name << "\n";
    return 2;
  }

  BinaryMask mask(1, 1);
  std::optional<Polygon> contour;
  if (!annotations.empty()) {
    const AnnotationSet set = load_annotations(annotations);
    if (ann_index < 0 || ann_index >= static_cast<int>(set.records.size())) {
      std::cerr << "annotation index " << ann_index << " out of range (have "
                << set.records.size() << ")\n";
      return 2;
    }
    mask = set.records[ann_index].to_mask();
    contour = set.records[ann_index].longest_polygon();
  } else if (!mask_path.empty()) {
    mask = load_mask_file(mask_path);
  } else {
    std::cerr << "encode needs --mask or --annotations\n";
    return 2;
  }

  DensePointSet pts;
  std::optional<Box> box;
  switch (*strategy) {
    case Strategy::Boundary: {
      if (!contour) contour = trace_contour(mask);
      pts = sample_boundary(*contour, n);
      break;
    }
    case Strategy::Grid: {
      box = foreground_center_box(mask);
      pts = assign_attributes(sample_grid(*box, GridSpec::for_box(*box, n)),
                              mask);
      break;
    }
    case Strategy::Dts: {
      const DistanceField dist = distance_map(boundary_points(mask),
                                              mask.height(), mask.width());
      const SamplingBandConfig band(delta);
      const ProbField prob = sampling_probability(dist, band);
      pts = assign_attributes(sample_dts(prob, n, {seed}, band, dist), mask);
      if (!dump_distance.empty()) {
        write_text_file(dump_distance,
                        field_json(dist.height, dist.width, dist.values));
      }
      if (!dump_probability.empty()) {
        write_text_file(dump_probability,
                        field_json(prob.height, prob.width, prob.values));
      }
      break;
    }
  }

  json doc = json::parse(point_set_json(pts));
  doc["meta"] = encode_meta(*strategy, mask, box, n);
  write_text_file(out_path, doc.dump());
  std::cout << "encoded " << pts.size() << " points (" << strategy_name
            << ") -> " << out_path << "\n";
  return 0;
}

int run_decode(const std::string& points_path, const std::string& decoder_name,
               double tau, int hull_k, int height, int width,
               const std::string& out_prefix) {
  const auto decoder = decoder_from_string(decoder_name);
  if (!decoder) {
    std::cerr << "unknown decoder " << decoder_name << "\n";
    return 2;
  }
  const std::string text = read_text_file(points_path);
  const DensePointSet pts = point_set_from_json(text);

  // Optional metadata fills in extent and grid layout.
  json doc = json::parse(text);
  std::optional<Box> box;
  if (doc.contains("meta")) {
    const json& meta = doc["meta"];
    if (height <= 0 && meta.contains("height")) height = meta["height"];
    if (width <= 0 && meta.contains("width")) width = meta["width"];
    if (meta.contains("box")) {
      box = Box(meta["box"][0], meta["box"][1], meta["box"][2], meta["box"][3]);
    }
  }
  if (height <= 0 || width <= 0) {
    std::cerr << "decode needs --height/--width (no meta in the input)\n";
    return 2;
  }

  const DecodeConfig cfg(tau, hull_k);
  BinaryMask mask(1, 1);
  switch (*decoder) {
    case Decoder::Triangulation:
      mask = decode_triangulation(pts, height, width, cfg);
      break;
    case Decoder::Concave:
      mask = concave_hull(pts, cfg, height, width);
      break;
    case Decoder::Grid: {
      if (!box) {
        std::cerr << "grid decode needs grid-encoded input with meta.box\n";
        return 2;
      }
      GridSpec spec = GridSpec::for_box(*box, static_cast<int>(pts.size()));
      mask = decode_grid(pts, spec, *box, height, width, cfg);
      break;
    }
  }

  write_pgm(out_prefix + ".pgm", mask);
  write_text_file(out_prefix + ".rle.json", rle_json(rle_encode(mask)));
  std::cout << "decoded " << mask.foreground_count() << " foreground px -> "
            << out_prefix << ".pgm, " << out_prefix << ".rle.json\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maskpoints: binary-mask <-> attributed-point-set codec"};
  app.require_subcommand(1);

  // encode
  auto* encode = app.add_subcommand("encode",
                                    "mask/annotation -> point-set JSON");
  std::string enc_mask, enc_ann, enc_strategy = "dts", enc_out = "points.json";
  std::string enc_dump_dist, enc_dump_prob;
  int enc_index = 0, enc_n = 225;
  double enc_delta = 0.04;
  std::uint64_t enc_seed = 0;
  encode->add_option("--mask", enc_mask, "input mask (.pgm or RLE .json)");
  encode->add_option("--annotations", enc_ann, "COCO-style annotation JSON");
  encode->add_option("--index", enc_index, "annotation index")->capture_default_str();
  encode->add_option("--strategy", enc_strategy, "boundary|grid|dts")->capture_default_str();
  encode->add_option("--n", enc_n, "point count")->capture_default_str();
  encode->add_option("--delta", enc_delta, "DTS band threshold")->capture_default_str();
  encode->add_option("--seed", enc_seed, "sampler seed")->capture_default_str();
  encode->add_option("--out", enc_out, "output point-set JSON")->capture_default_str();
  encode->add_option("--dump-distance-field", enc_dump_dist,
                     "write the distance field as JSON");
  encode->add_option("--dump-prob-field", enc_dump_prob,
                     "write the sampling probability field as JSON");

  // decode
  auto* decode = app.add_subcommand("decode",
                                    "point-set JSON -> mask (PGM + RLE JSON)");
  std::string dec_points, dec_decoder = "triangulation", dec_out = "decoded";
  double dec_tau = 0.5;
  int dec_hull_k = 3, dec_height = 0, dec_width = 0;
  decode->add_option("--points", dec_points, "input point-set JSON")
      ->required();
  decode->add_option("--decoder", dec_decoder, "triangulation|concave|grid")
      ->capture_default_str();
  decode->add_option("--tau", dec_tau, "binarization threshold")->capture_default_str();
  decode->add_option("--hull-k", dec_hull_k, "concave hull neighbours")->capture_default_str();
  decode->add_option("--height", dec_height, "output height (overrides meta)");
  decode->add_option("--width", dec_width, "output width (overrides meta)");
  decode->add_option("--out", dec_out, "output path prefix")->capture_default_str();

  // sweep
  auto* sweep = app.add_subcommand(
      "sweep", "reconstruction sweep over (strategy, n, decoder)");
  std::string sw_ann, sw_out = "sweep";
  std::vector<std::string> sw_strategies, sw_decoders;
  std::vector<int> sw_n = {9, 25, 49, 81, 225, 441, 729};
  double sw_delta = 0.04, sw_tau = 0.5;
  int sw_hull_k = 3, sw_count = 200, sw_size = 128, sw_threads = 1;
  std::uint64_t sw_seed = 0;
  sweep->add_option("--annotations", sw_ann,
                    "COCO-style annotations (default: synthetic corpus)");
  sweep->add_option("--count", sw_count, "synthetic corpus size")->capture_default_str();
  sweep->add_option("--size", sw_size, "synthetic mask extent")->capture_default_str();
  sweep->add_option("--strategy", sw_strategies,
                    "subset of boundary|grid|dts (default all)");
  sweep->add_option("--decoder", sw_decoders,
                    "subset of triangulation|concave|grid (default all)");
  sweep->add_option("--n", sw_n, "point counts, ascending")->capture_default_str();
  sweep->add_option("--delta", sw_delta, "DTS band threshold")->capture_default_str();
  sweep->add_option("--tau", sw_tau, "binarization threshold")->capture_default_str();
  sweep->add_option("--hull-k", sw_hull_k, "concave hull neighbours")->capture_default_str();
  sweep->add_option("--seed", sw_seed, "corpus/sampling seed")->capture_default_str();
  sweep->add_option("--threads", sw_threads, "worker threads")->capture_default_str();
  sweep->add_option("--out", sw_out, "output prefix (.csv, .json)")->capture_default_str();

  // losses
  auto* losses = app.add_subcommand(
      "losses", "point-to-point vs set-to-set losses under perturbation");
  std::string ls_ann, ls_out = "losses.csv";
  int ls_count = 100, ls_size = 64, ls_n = 81;
  double ls_sigma = 1.0, ls_delta = 0.04;
  std::uint64_t ls_seed = 0;
  losses->add_option("--annotations", ls_ann, "COCO-style annotations");
  losses->add_option("--count", ls_count, "synthetic corpus size")->capture_default_str();
  losses->add_option("--size", ls_size, "synthetic mask extent")->capture_default_str();
  losses->add_option("--n", ls_n, "points per encoding")->capture_default_str();
  losses->add_option("--sigma", ls_sigma, "jitter sigma in pixels")->capture_default_str();
  losses->add_option("--delta", ls_delta, "DTS band threshold")->capture_default_str();
  losses->add_option("--seed", ls_seed, "seed")->capture_default_str();
  losses->add_option("--out", ls_out, "output CSV")->capture_default_str();

  // cost
  auto* cost = app.add_subcommand("cost", "analytic head-cost model CSV");
  std::vector<int> ct_n = {9, 25, 49, 81};
  int ct_k = 9, ct_channels = 256;
  std::string ct_out = "cost.csv";
  cost->add_option("--n", ct_n, "point counts")->capture_default_str();
  cost->add_option("--k", ct_k, "group count")->capture_default_str();
  cost->add_option("--channels", ct_channels, "feature channels")->capture_default_str();
  cost->add_option("--out", ct_out, "output CSV")->capture_default_str();

  // synth
  auto* synth = app.add_subcommand("synth", "generate the synthetic corpus");
  int sy_count = 200, sy_size = 128;
  std::uint64_t sy_seed = 0;
  std::string sy_out = "corpus.json", sy_pgm_dir;
  synth->add_option("--count", sy_count, "number of masks")->capture_default_str();
  synth->add_option("--size", sy_size, "mask extent")->capture_default_str();
  synth->add_option("--seed", sy_seed, "seed")->capture_default_str();
  synth->add_option("--out", sy_out, "RLE JSON list output")->capture_default_str();
  synth->add_option("--pgm-dir", sy_pgm_dir, "also write one PGM per mask");

  CLI11_PARSE(app, argc, argv);

  try {
    if (encode->parsed()) {
      return run_encode(enc_mask, enc_ann, enc_index, enc_strategy, enc_n,
                        enc_delta, enc_seed, enc_out, enc_dump_dist,
                        enc_dump_prob);
    }
    if (decode->parsed()) {
      return run_decode(dec_points, dec_decoder, dec_tau, dec_hull_k,
                        dec_height, dec_width, dec_out);
    }
    if (sweep->parsed()) {
      SweepConfig config;
      config.strategies = parse_strategies(sw_strategies);
      config.decoders = parse_decoders(sw_decoders);
      config.n_values = sw_n;
      config.delta = sw_delta;
      config.tau = sw_tau;
      config.hull_k = sw_hull_k;
      config.seed = sw_seed;
      config.threads = sw_threads;
      const auto items =
          load_items(sw_ann, sw_seed, sw_count, sw_size, &config.corpus_id);
      const ReconstructionReport report = reconstruction_sweep(items, config);
      write_text_file(sw_out + ".csv", report.to_csv());
      write_text_file(sw_out + ".json", report.to_json());
      std::cout << report.to_csv();
      return 0;
    }
    if (losses->parsed()) {
      std::string corpus_id;
      const auto items =
          load_items(ls_ann, ls_seed, ls_count, ls_size, &corpus_id);
      const LossReport report =
          loss_report(items, ls_n, ls_sigma, ls_delta, ls_seed);
      write_text_file(ls_out, report.to_csv());
      std::cout << "losses over " << items.size() << " masks: mean L_point "
                << report.mean_l_point_jitter << ", mean L_set "
                << report.mean_l_set_jitter << " -> " << ls_out << "\n";
      return 0;
    }
    if (cost->parsed()) {
      const std::string csv = head_cost_csv(ct_n, ct_k, ct_channels);
      write_text_file(ct_out, csv);
      std::cout << csv;
      return 0;
    }
    if (synth->parsed()) {
      const auto corpus = synthetic_corpus({sy_seed}, sy_count, sy_size);
      json list = json::array();
      for (const BinaryMask& mask : corpus) {
        list.push_back(json::parse(rle_json(rle_encode(mask))));
      }
      write_text_file(sy_out, list.dump());
      if (!sy_pgm_dir.empty()) {
        for (std::size_t i = 0; i < corpus.size(); ++i) {
          char name[64];
          std::snprintf(name, sizeof(name), "/mask_%04zu.pgm", i);
          write_pgm(sy_pgm_dir + name, corpus[i]);
        }
      }
      std::cout << "wrote " << corpus.size() << " masks -> " << sy_out << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
