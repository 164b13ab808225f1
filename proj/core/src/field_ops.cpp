#include "maskpoints/field_ops.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace maskpoints {

std::vector<double> bilinear_sample(const FeatureField& field, double x,
                                    double y) {
  const double cx = std::clamp(x, 0.0, static_cast<double>(field.width - 1));
  const double cy = std::clamp(y, 0.0, static_cast<double>(field.height - 1));
  const int x0 = std::clamp(static_cast<int>(std::floor(cx)), 0, field.width - 1);
  const int y0 = std::clamp(static_cast<int>(std::floor(cy)), 0, field.height - 1);
  const int x1 = std::min(x0 + 1, field.width - 1);
  const int y1 = std::min(y0 + 1, field.height - 1);
  const double fx = cx - x0;
  const double fy = cy - y0;

  std::vector<double> out(field.channels);
  for (int ch = 0; ch < field.channels; ++ch) {
    const double top = field.at(ch, y0, x0) * (1.0 - fx) +
                       field.at(ch, y0, x1) * fx;
    const double bottom = field.at(ch, y1, x0) * (1.0 - fx) +
                          field.at(ch, y1, x1) * fx;
    out[ch] = top * (1.0 - fy) + bottom * fy;
  }
  return out;
}

std::vector<double> group_pool(const std::vector<std::vector<double>>& features,
                               const GroupPoolConfig& cfg) {
  const int n = static_cast<int>(features.size());
  const int k = cfg.group_count;
  if (k < 1 || k > n) {
    throw Error(ErrorKind::ConfigError,
                "group count must satisfy 1 <= k <= point count");
  }
  const std::size_t channels = features.empty() ? 0 : features[0].size();
  for (const auto& f : features) {
    if (f.size() != channels) {
      throw Error(ErrorKind::CardinalityMismatch,
                  "feature vectors differ in length");
    }
  }

  const int group_size = (n + k - 1) / k;  // last group may be smaller
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(k) * channels);
  for (int g = 0; g < k; ++g) {
    const int begin = g * group_size;
    const int end = std::min(n, begin + group_size);
    for (std::size_t ch = 0; ch < channels; ++ch) {
      double best = features[begin][ch];
      for (int i = begin + 1; i < end; ++i) {
        best = std::max(best, features[i][ch]);
      }
      out.push_back(best);
    }
  }
  return out;
}

DensePointSet apply_offset_fields(const OffsetFieldStack& stack,
                                  const DensePointSet& pts) {
  if (stack.count != static_cast<int>(pts.size())) {
    throw Error(ErrorKind::CardinalityMismatch,
                "offset field count does not match point count");
  }
  std::vector<AttributedPoint> out = pts.points();
  for (int i = 0; i < stack.count; ++i) {
    AttributedPoint& p = out[i];
    const double cx =
        std::clamp(p.x, 0.0, static_cast<double>(stack.fields.width - 1));
    const double cy =
        std::clamp(p.y, 0.0, static_cast<double>(stack.fields.height - 1));
    const int x0 = static_cast<int>(std::floor(cx));
    const int y0 = static_cast<int>(std::floor(cy));
    const int x1 = std::min(x0 + 1, stack.fields.width - 1);
    const int y1 = std::min(y0 + 1, stack.fields.height - 1);
    const double fx = cx - x0;
    const double fy = cy - y0;
    auto blend = [&](int ch) {
      const double top = stack.fields.at(ch, y0, x0) * (1.0 - fx) +
                         stack.fields.at(ch, y0, x1) * fx;
      const double bottom = stack.fields.at(ch, y1, x0) * (1.0 - fx) +
                            stack.fields.at(ch, y1, x1) * fx;
      return top * (1.0 - fy) + bottom * fy;
    };
    p.x += blend(2 * i);
    p.y += blend(2 * i + 1);
  }
  return DensePointSet(std::move(out));
}

std::vector<double> sample_attribute_map(const AttributeMapStack& stack,
                                         const DensePointSet& pts,
                                         const Box& box) {
  const int s = stack.bins_per_side;
  std::vector<double> out;
  out.reserve(pts.size());
  for (const AttributedPoint& p : pts.points()) {
    if (!box.contains(p.x, p.y)) {
      throw Error(ErrorKind::OutOfBounds, "point outside the box");
    }
    const double u = box.width() > 0.0 ? (p.x - box.x_min) / box.width() : 0.0;
    const double v = box.height() > 0.0 ? (p.y - box.y_min) / box.height() : 0.0;
    const int bc = std::min(s - 1, static_cast<int>(std::floor(u * s)));
    const int br = std::min(s - 1, static_cast<int>(std::floor(v * s)));
    const int ch = br * s + bc;

    const double cx =
        std::clamp(p.x, 0.0, static_cast<double>(stack.maps.width - 1));
    const double cy =
        std::clamp(p.y, 0.0, static_cast<double>(stack.maps.height - 1));
    const int x0 = static_cast<int>(std::floor(cx));
    const int y0 = static_cast<int>(std::floor(cy));
    const int x1 = std::min(x0 + 1, stack.maps.width - 1);
    const int y1 = std::min(y0 + 1, stack.maps.height - 1);
    const double fx = cx - x0;
    const double fy = cy - y0;
    const double top = stack.maps.at(ch, y0, x0) * (1.0 - fx) +
                       stack.maps.at(ch, y0, x1) * fx;
    const double bottom = stack.maps.at(ch, y1, x0) * (1.0 - fx) +
                          stack.maps.at(ch, y1, x1) * fx;
    out.push_back(top * (1.0 - fy) + bottom * fy);
  }
  return out;
}

std::int64_t head_cost(int n, int k, int channels, HeadMode mode) {
  if (n < 1 || k < 1 || channels < 1) {
    throw Error(ErrorKind::ConfigError, "head cost inputs must be >= 1");
  }
  const std::int64_t nn = n;
  const std::int64_t kk = k;
  const std::int64_t ch = channels;
  switch (mode) {
    case HeadMode::ConcatClassification: return nn * ch * ch;
    case HeadMode::GroupPoolClassification: return kk * ch * ch;
    case HeadMode::ConcatRegression: return 2 * nn * nn * ch;
    case HeadMode::SharedOffsetRegression: return 2 * nn * ch;
  }
  return 0;
}

const char* to_string(HeadMode mode) noexcept {
  switch (mode) {
    case HeadMode::ConcatClassification: return "concat_cls";
    case HeadMode::GroupPoolClassification: return "group_pool_cls";
    case HeadMode::ConcatRegression: return "concat_reg";
    case HeadMode::SharedOffsetRegression: return "shared_offset_reg";
  }
  return "unknown";
}

std::string head_cost_csv(const std::vector<int>& n_values, int k,
                          int channels) {
  std::string out = "n,k,mode,macs\n";
  char line[128];
  for (const int n : n_values) {
    for (const HeadMode mode :
         {HeadMode::ConcatClassification, HeadMode::GroupPoolClassification,
          HeadMode::ConcatRegression, HeadMode::SharedOffsetRegression}) {
      std::snprintf(line, sizeof(line), "%d,%d,%s,%lld\n", n, k,
                    to_string(mode),
                    static_cast<long long>(head_cost(n, k, channels, mode)));
      out += line;
    }
  }
  return out;
}

}  // namespace maskpoints
