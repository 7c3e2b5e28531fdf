#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace sgseg {

inline constexpr std::uint8_t kBackground = 0;
inline constexpr std::uint8_t kIgnore = 255;

/// Row/column position on a pixel grid.
struct Pixel {
  int row = 0;
  int col = 0;

  friend bool operator==(const Pixel&, const Pixel&) = default;
};

/// 8-bit interleaved RGB image, row-major.
struct RgbImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;  // 3 * width * height

  std::size_t size() const { return static_cast<std::size_t>(width) * height; }
};

/// 8-bit single-channel image, row-major.
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;

  std::size_t size() const { return static_cast<std::size_t>(width) * height; }
};

/// One HSV sample; every channel lies in [0, 255].
struct Hsv {
  double h = 0.0;
  double s = 0.0;
  double v = 0.0;

  friend bool operator==(const Hsv&, const Hsv&) = default;
};

class HsvImage {
 public:
  HsvImage() = default;
  HsvImage(int width, int height, std::vector<Hsv> pixels);

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return pixels_.size(); }
  const Hsv& at(std::size_t index) const { return pixels_[index]; }
  const Hsv& at(Pixel p) const { return pixels_[index_of(p)]; }
  std::span<const Hsv> pixels() const { return pixels_; }
  std::size_t index_of(Pixel p) const {
    return static_cast<std::size_t>(p.row) * width_ + p.col;
  }

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<Hsv> pixels_;
};

/// Per-pixel saliency in [0, 1].
class SaliencyMap {
 public:
  SaliencyMap() = default;
  SaliencyMap(int width, int height, std::vector<double> values);

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return values_.size(); }
  double at(std::size_t index) const { return values_[index]; }
  double at(Pixel p) const { return values_[static_cast<std::size_t>(p.row) * width_ + p.col]; }
  std::span<const double> values() const { return values_; }

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<double> values_;
};

/// K feature maps of H x W cells, channel-major then row-major.
class ActivationStack {
 public:
  ActivationStack() = default;
  ActivationStack(int channels, int height, int width, std::vector<float> values);

  int channels() const { return channels_; }
  int height() const { return height_; }
  int width() const { return width_; }
  std::size_t plane_size() const { return static_cast<std::size_t>(height_) * width_; }
  float at(int channel, int row, int col) const {
    return values_[channel * plane_size() + static_cast<std::size_t>(row) * width_ + col];
  }
  std::span<const float> plane(int channel) const {
    return std::span<const float>(values_).subspan(channel * plane_size(), plane_size());
  }
  std::span<const float> values() const { return values_; }

  friend bool operator==(const ActivationStack&, const ActivationStack&) = default;

 private:
  int channels_ = 0;
  int height_ = 0;
  int width_ = 0;
  std::vector<float> values_;
};

/// Row-major C x K matrix; row r holds the weights of object class r + 1.
class ClassWeights {
 public:
  ClassWeights() = default;
  ClassWeights(int num_classes, int channels, std::vector<float> values);

  int num_classes() const { return num_classes_; }
  int channels() const { return channels_; }
  float at(int row, int channel) const {
    return values_[static_cast<std::size_t>(row) * channels_ + channel];
  }
  std::span<const float> row(int r) const {
    return std::span<const float>(values_).subspan(static_cast<std::size_t>(r) * channels_, channels_);
  }
  std::span<const float> values() const { return values_; }

  friend bool operator==(const ClassWeights&, const ClassWeights&) = default;

 private:
  int num_classes_ = 0;
  int channels_ = 0;
  std::vector<float> values_;
};

/// Per-pixel class codes: 0 background, 1..C objects, 255 ignore.
class LabelMap {
 public:
  LabelMap() = default;
  LabelMap(int width, int height, std::vector<std::uint8_t> codes);
  /// Filled with a single code.
  LabelMap(int width, int height, std::uint8_t fill);

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return codes_.size(); }
  std::uint8_t at(std::size_t index) const { return codes_[index]; }
  std::uint8_t at(Pixel p) const { return codes_[static_cast<std::size_t>(p.row) * width_ + p.col]; }
  void set(std::size_t index, std::uint8_t code) { codes_[index] = code; }
  std::span<const std::uint8_t> codes() const { return codes_; }

  /// Throws InvalidLabelCode when a code lies outside {0..num_classes} and is not 255.
  void validate(int num_classes) const;

  friend bool operator==(const LabelMap&, const LabelMap&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> codes_;
};

struct GrowConfig {
  double theta = 10.0;
  int connectivity = 4;
  double seed_fraction = 0.2;
  double bg_saliency_threshold = 0.1;
  int num_classes = 20;

  /// Throws InvalidArgument on an out-of-range field.
  void validate() const;
};

}  // namespace sgseg
