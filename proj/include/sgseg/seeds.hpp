#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "sgseg/cam.hpp"
#include "sgseg/types.hpp"

namespace sgseg {

/// ceil(fraction * pixel_count), clamped to [0, pixel_count]. Products within
/// 1e-9 (relative) of an integer count as that integer, so 0.07 * 100 is 7 and
/// not 4.
std::size_t seed_budget(double fraction, std::size_t pixel_count);

/// (v - min) / (max - min) per pixel; nullopt for a constant map.
std::optional<std::vector<double>> normalize_min_max(const Cam& cam);

/// Row-major indices of the seed_budget highest normalized values, highest
/// first; equal values are taken in ascending pixel order. Empty for a
/// constant map.
std::vector<std::size_t> top_fraction_pixels(const Cam& cam, double fraction);

/// Builds the sparse seed map from image-resolution CAMs keyed by class code.
///  - each present class marks its top fraction of pixels;
///  - a pixel marked by several classes takes the one with the larger
///    normalized value, ties going to the smaller class code;
///  - unmarked pixels with saliency below cfg.bg_saliency_threshold become
///    background;
///  - everything else is 255.
/// Cams for classes not listed in `labels` are not consulted.
LabelMap extract_seeds(const std::map<int, Cam>& cams, const ImageLabels& labels,
                       const SaliencyMap& saliency, const GrowConfig& cfg);

}  // namespace sgseg
