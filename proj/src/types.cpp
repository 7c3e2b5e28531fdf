#include "sgseg/types.hpp"

#include <cmath>
#include <string>

#include "sgseg/error.hpp"

namespace sgseg {

namespace {

void check_dims(int a, int b, const char* what) {
  if (a < 0 || b < 0) {
    throw Error(Errc::InvalidArgument, std::string(what) + ": negative dimension");
  }
}

void check_length(std::size_t actual, std::size_t expected, const char* what) {
  if (actual != expected) {
    throw Error(Errc::DimensionMismatch, std::string(what) + ": expected " +
                                             std::to_string(expected) + " values, got " +
                                             std::to_string(actual));
  }
}

template <typename T>
void check_finite(const std::vector<T>& values, const char* what) {
  for (T v : values) {
    if (!std::isfinite(v)) {
      throw Error(Errc::NonFiniteValue, std::string(what) + " contains a non-finite value");
    }
  }
}

}  // namespace

HsvImage::HsvImage(int width, int height, std::vector<Hsv> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  check_dims(width, height, "HsvImage");
  check_length(pixels_.size(), static_cast<std::size_t>(width) * height, "HsvImage");
  for (const Hsv& p : pixels_) {
    for (double c : {p.h, p.s, p.v}) {
      if (!(c >= 0.0 && c <= 255.0)) {
        throw Error(Errc::InvalidArgument, "HsvImage channel outside [0, 255]");
      }
    }
  }
}

SaliencyMap::SaliencyMap(int width, int height, std::vector<double> values)
    : width_(width), height_(height), values_(std::move(values)) {
  check_dims(width, height, "SaliencyMap");
  check_length(values_.size(), static_cast<std::size_t>(width) * height, "SaliencyMap");
  for (double v : values_) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw Error(Errc::InvalidArgument, "SaliencyMap value outside [0, 1]");
    }
  }
}

ActivationStack::ActivationStack(int channels, int height, int width, std::vector<float> values)
    : channels_(channels), height_(height), width_(width), values_(std::move(values)) {
  check_dims(channels, height, "ActivationStack");
  check_dims(width, 0, "ActivationStack");
  check_length(values_.size(), static_cast<std::size_t>(channels) * height * width,
               "ActivationStack");
  check_finite(values_, "ActivationStack");
}

ClassWeights::ClassWeights(int num_classes, int channels, std::vector<float> values)
    : num_classes_(num_classes), channels_(channels), values_(std::move(values)) {
  check_dims(num_classes, channels, "ClassWeights");
  check_length(values_.size(), static_cast<std::size_t>(num_classes) * channels, "ClassWeights");
  check_finite(values_, "ClassWeights");
}

LabelMap::LabelMap(int width, int height, std::vector<std::uint8_t> codes)
    : width_(width), height_(height), codes_(std::move(codes)) {
  check_dims(width, height, "LabelMap");
  check_length(codes_.size(), static_cast<std::size_t>(width) * height, "LabelMap");
}

LabelMap::LabelMap(int width, int height, std::uint8_t fill)
    : width_(width), height_(height) {
  check_dims(width, height, "LabelMap");
  codes_.assign(static_cast<std::size_t>(width) * height, fill);
}

void LabelMap::validate(int num_classes) const {
  for (std::size_t i = 0; i < codes_.size(); ++i) {
    const int code = codes_[i];
    if (code != kIgnore && code > num_classes) {
      throw Error(Errc::InvalidLabelCode, "label code " + std::to_string(code) + " at pixel " +
                                              std::to_string(i) + " exceeds class count " +
                                              std::to_string(num_classes));
    }
  }
}

void GrowConfig::validate() const {
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw Error(Errc::InvalidArgument, "theta must be a positive finite number");
  }
  if (connectivity != 4 && connectivity != 8) {
    throw Error(Errc::InvalidArgument, "connectivity must be 4 or 8");
  }
  if (!(seed_fraction > 0.0 && seed_fraction <= 1.0)) {
    throw Error(Errc::InvalidArgument, "seed_fraction must lie in (0, 1]");
  }
  if (!(bg_saliency_threshold >= 0.0 && bg_saliency_threshold <= 1.0)) {
    throw Error(Errc::InvalidArgument, "bg_saliency_threshold must lie in [0, 1]");
  }
  if (num_classes < 1 || num_classes > 254) {
    throw Error(Errc::InvalidArgument, "num_classes must lie in [1, 254]");
  }
}

}  // namespace sgseg
