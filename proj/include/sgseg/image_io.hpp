#pragma once

#include <filesystem>

#include "sgseg/types.hpp"

namespace sgseg {

// PNG reading accepts 8-bit grayscale, RGB and palette images. Palette
// images are returned as their raw indices by read_gray_png, which is how
// PASCAL-style ground truth is stored. 16-bit and alpha images are rejected
// with UnsupportedImage.

RgbImage read_rgb_png(const std::filesystem::path& path);
GrayImage read_gray_png(const std::filesystem::path& path);

void write_rgb_png(const std::filesystem::path& path, const RgbImage& image);
void write_gray_png(const std::filesystem::path& path, const GrayImage& image);

/// value / 255.0 per pixel.
SaliencyMap normalize_saliency(const GrayImage& gray);

/// Validates every code against {0..num_classes} and 255.
LabelMap decode_label_map(const GrayImage& gray, int num_classes);

GrayImage to_gray_image(const LabelMap& labels);

}  // namespace sgseg
