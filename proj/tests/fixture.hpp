#pragma once

// Synthetic end-to-end dataset: 16x16 images holding one or two flat-coloured
// axis-aligned squares on a distinct flat background. Activation channel k
// peaks on the square of class k + 1, the saliency map is the square mask
// (0.9 inside, 0.05 outside, quantized to 8 bits) and the ground truth is
// the squares themselves.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "sgseg/cam.hpp"
#include "sgseg/types.hpp"

namespace sgseg::testing {

struct FixtureImage {
  std::string id;
  RgbImage image;
  GrayImage saliency;
  ActivationStack acts;
  LabelMap gt;
  ImageLabels classes;
};

struct Fixture {
  std::vector<FixtureImage> images;
  ClassWeights weights;  // identity: channel k -> class k + 1
  int num_classes = 20;
};

Fixture make_synthetic_fixture(std::uint64_t seed = 2024, int count = 20, int side = 16);

/// Writes every file plus manifest.csv (paths relative to `dir`); returns the
/// manifest path.
std::filesystem::path write_fixture(const Fixture& fixture, const std::filesystem::path& dir);

}  // namespace sgseg::testing
