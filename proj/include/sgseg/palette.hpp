#pragma once

#include <array>
#include <cstdint>

#include "sgseg/types.hpp"

namespace sgseg {

using Rgb = std::array<std::uint8_t, 3>;

/// PASCAL VOC colour for a label code: the low bits of the code are spread
/// over R, G, B starting at each channel's MSB. Code 255 is (224, 224, 192).
Rgb voc_color(std::uint8_t code);

RgbImage colorize_labels(const LabelMap& labels);

}  // namespace sgseg
