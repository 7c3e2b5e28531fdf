#include "sgseg/cam.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sgseg/error.hpp"

namespace sgseg {

Cam::Cam(int height, int width, std::vector<double> values)
    : height_(height), width_(width), values_(std::move(values)) {
  if (height < 0 || width < 0 ||
      values_.size() != static_cast<std::size_t>(height) * width) {
    throw Error(Errc::DimensionMismatch, "Cam buffer does not match its dimensions");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw Error(Errc::NonFiniteValue, "Cam contains a non-finite value");
  }
}

ImageLabels::ImageLabels(std::vector<int> classes) : classes_(std::move(classes)) {
  std::sort(classes_.begin(), classes_.end());
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    const int c = classes_[i];
    if (c <= 0 || c >= kIgnore) {
      throw Error(Errc::InvalidArgument, "image-level class " + std::to_string(c) +
                                             " outside 1..254");
    }
    if (i > 0 && classes_[i - 1] == c) {
      throw Error(Errc::InvalidArgument, "duplicate image-level class " + std::to_string(c));
    }
  }
}

bool ImageLabels::contains(int c) const {
  return std::binary_search(classes_.begin(), classes_.end(), c);
}

std::vector<double> global_average_pool(const ActivationStack& acts) {
  std::vector<double> pooled(acts.channels(), 0.0);
  for (int k = 0; k < acts.channels(); ++k) {
    double sum = 0.0;
    for (float v : acts.plane(k)) sum += v;
    pooled[k] = sum;
  }
  return pooled;
}

double class_score(std::span<const double> pooled, const ClassWeights& weights, int c) {
  if (c < 0 || c >= weights.num_classes()) {
    throw Error(Errc::IndexOutOfRange, "class row " + std::to_string(c) + " of " +
                                           std::to_string(weights.num_classes()));
  }
  if (pooled.size() != static_cast<std::size_t>(weights.channels())) {
    throw Error(Errc::ChannelMismatch, "pooled vector has " + std::to_string(pooled.size()) +
                                           " channels, weights have " +
                                           std::to_string(weights.channels()));
  }
  const auto row = weights.row(c);
  double score = 0.0;
  for (std::size_t k = 0; k < pooled.size(); ++k) score += static_cast<double>(row[k]) * pooled[k];
  return score;
}

Cam class_activation_map(const ActivationStack& acts, const ClassWeights& weights, int c) {
  if (acts.channels() != weights.channels()) {
    throw Error(Errc::ChannelMismatch, "activations have " + std::to_string(acts.channels()) +
                                           " channels, weights have " +
                                           std::to_string(weights.channels()));
  }
  if (c < 0 || c >= weights.num_classes()) {
    throw Error(Errc::IndexOutOfRange, "class row " + std::to_string(c) + " of " +
                                           std::to_string(weights.num_classes()));
  }
  std::vector<double> map(acts.plane_size(), 0.0);
  const auto row = weights.row(c);
  for (int k = 0; k < acts.channels(); ++k) {
    const double w = row[k];
    if (w == 0.0) continue;
    const auto plane = acts.plane(k);
    for (std::size_t i = 0; i < map.size(); ++i) map[i] += w * plane[i];
  }
  return Cam(acts.height(), acts.width(), std::move(map));
}

namespace {

// Source coordinate and the two bracketing cells for output index i.
struct Tap {
  int lo;
  int hi;
  double frac;
};

Tap corner_aligned_tap(int i, int in_size, int out_size) {
  if (in_size == 1 || out_size == 1) return {0, 0, 0.0};
  const double src = static_cast<double>(i) * (in_size - 1) / (out_size - 1);
  int lo = static_cast<int>(std::floor(src));
  lo = std::clamp(lo, 0, in_size - 1);
  const int hi = std::min(lo + 1, in_size - 1);
  return {lo, hi, src - lo};
}

double lerp(double a, double b, double t) { return a + (b - a) * t; }

}  // namespace

Cam upsample_bilinear(const Cam& cam, int out_height, int out_width) {
  if (out_height < 1 || out_width < 1) {
    throw Error(Errc::InvalidArgument, "output size must be at least 1x1");
  }
  if (cam.height() < 1 || cam.width() < 1) {
    throw Error(Errc::InvalidArgument, "cannot resample an empty map");
  }
  if (cam.height() == out_height && cam.width() == out_width) {
    return cam;
  }
  std::vector<Tap> cols(out_width);
  for (int x = 0; x < out_width; ++x) cols[x] = corner_aligned_tap(x, cam.width(), out_width);

  std::vector<double> out(static_cast<std::size_t>(out_height) * out_width);
  for (int y = 0; y < out_height; ++y) {
    const Tap ty = corner_aligned_tap(y, cam.height(), out_height);
    for (int x = 0; x < out_width; ++x) {
      const Tap& tx = cols[x];
      // a + (b - a) * t keeps constant regions exactly constant.
      const double top = lerp(cam.at(ty.lo, tx.lo), cam.at(ty.lo, tx.hi), tx.frac);
      const double bottom = lerp(cam.at(ty.hi, tx.lo), cam.at(ty.hi, tx.hi), tx.frac);
      out[static_cast<std::size_t>(y) * out_width + x] = lerp(top, bottom, ty.frac);
    }
  }
  return Cam(out_height, out_width, std::move(out));
}

}  // namespace sgseg
