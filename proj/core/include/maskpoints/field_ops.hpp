#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "maskpoints/geometry.hpp"
#include "maskpoints/point_set.hpp"

namespace maskpoints {

/// Channel-major real-valued grid (channel, then row, then column).
struct FeatureField {
  int channels = 0;
  int height = 0;
  int width = 0;
  std::vector<double> values;

  FeatureField() = default;
  FeatureField(int channels_, int height_, int width_)
      : channels(channels_), height(height_), width(width_) {
    if (channels < 1 || height < 1 || width < 1) {
      throw Error(ErrorKind::ConfigError, "field extents must be >= 1");
    }
    values.assign(static_cast<std::size_t>(channels) * height * width, 0.0);
  }

  double& at(int ch, int r, int c) {
    return values[(static_cast<std::size_t>(ch) * height + r) * width + c];
  }
  double at(int ch, int r, int c) const {
    return values[(static_cast<std::size_t>(ch) * height + r) * width + c];
  }
};

/// One displacement grid pair (dx, dy) per point index; 2n scalar channels.
struct OffsetFieldStack {
  int count = 0;
  FeatureField fields;  // channel 2i = dx of point i, channel 2i+1 = dy

  OffsetFieldStack() = default;
  OffsetFieldStack(int count_, int height, int width)
      : count(count_), fields(2 * count_, height, width) {}
};

/// Position-sensitive score maps: an s x s grid of bins, one full-extent map
/// per bin.
struct AttributeMapStack {
  int bins_per_side = 0;
  FeatureField maps;  // s^2 channels, bin (row-major) -> channel

  AttributeMapStack() = default;
  AttributeMapStack(int bins, int height, int width)
      : bins_per_side(bins), maps(bins * bins, height, width) {
    if (bins < 1) {
      throw Error(ErrorKind::ConfigError, "bin count must be >= 1");
    }
  }
};

struct GroupPoolConfig {
  int group_count = 9;
};

/// Clamp-to-edge bilinear blend of the four surrounding cells, per channel.
std::vector<double> bilinear_sample(const FeatureField& field, double x,
                                    double y);

/// Index-contiguous grouping into cfg.group_count groups of ceil(n/k) points
/// (a shorter final group when k does not divide n), channelwise max within
/// each group, groups concatenated in order.
std::vector<double> group_pool(const std::vector<std::vector<double>>& features,
                               const GroupPoolConfig& cfg);

/// Moves point i by the bilinearly sampled (dx_i, dy_i) of field i at the
/// point's current location; attributes unchanged.
DensePointSet apply_offset_fields(const OffsetFieldStack& stack,
                                  const DensePointSet& pts);

/// Each point reads the bin whose s x s cell (relative to the box) contains
/// its normalized position, bilinearly sampled at the point location.
std::vector<double> sample_attribute_map(const AttributeMapStack& stack,
                                         const DensePointSet& pts,
                                         const Box& box);

/// Analytic multiply-accumulate model of the per-object head:
///   concat classification  n * channels^2
///   group-pool classification  k * channels^2
///   concat regression      2 * n^2 * channels
///   shared-offset regression  2 * n * channels
enum class HeadMode {
  ConcatClassification,
  GroupPoolClassification,
  ConcatRegression,
  SharedOffsetRegression,
};

std::int64_t head_cost(int n, int k, int channels, HeadMode mode);

const char* to_string(HeadMode mode) noexcept;

/// CSV rows (n, k, mode, macs) for all four modes at each n.
std::string head_cost_csv(const std::vector<int>& n_values, int k,
                          int channels);

}  // namespace maskpoints
