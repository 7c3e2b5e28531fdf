#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sgseg/types.hpp"

namespace sgseg {

/// One class's activation map, row-major.
class Cam {
 public:
  Cam() = default;
  Cam(int height, int width, std::vector<double> values);

  int height() const { return height_; }
  int width() const { return width_; }
  std::size_t size() const { return values_.size(); }
  double at(int row, int col) const { return values_[static_cast<std::size_t>(row) * width_ + col]; }
  std::span<const double> values() const { return values_; }

 private:
  int height_ = 0;
  int width_ = 0;
  std::vector<double> values_;
};

/// Object classes present at image level: strictly increasing codes in 1..254.
class ImageLabels {
 public:
  ImageLabels() = default;
  /// Sorts the input; throws InvalidArgument on duplicates, 0 or 255.
  explicit ImageLabels(std::vector<int> classes);

  std::span<const int> classes() const { return classes_; }
  bool empty() const { return classes_.empty(); }
  bool contains(int c) const;

 private:
  std::vector<int> classes_;
};

/// F_k = sum over all cells of channel k. The sum is unnormalized; dividing
/// by H*W would scale every score of an image by the same constant.
std::vector<double> global_average_pool(const ActivationStack& acts);

/// S_c = sum_k w[c,k] * F[k], with c a row of the weight matrix.
double class_score(std::span<const double> pooled, const ClassWeights& weights, int c);

/// M_c(y,x) = sum_k w[c,k] * f_k(y,x) at the stack's spatial resolution.
Cam class_activation_map(const ActivationStack& acts, const ClassWeights& weights, int c);

/// Corner-aligned bilinear resampling: input corner cells land exactly on
/// output corner pixels; a 1-cell axis broadcasts.
Cam upsample_bilinear(const Cam& cam, int out_height, int out_width);

}  // namespace sgseg
