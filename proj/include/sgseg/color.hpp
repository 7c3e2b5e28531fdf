#pragma once

#include <cstdint>

#include "sgseg/types.hpp"

namespace sgseg {

/// Standard RGB -> HSV with every channel scaled to [0, 255]; hue is
/// compressed from [0, 360) degrees and is 0 wherever saturation is 0.
Hsv rgb_to_hsv(std::uint8_t r, std::uint8_t g, std::uint8_t b);

HsvImage rgb_to_hsv(const RgbImage& rgb);

}  // namespace sgseg
