#include "sgseg/color.hpp"

#include <algorithm>

#include "sgseg/error.hpp"

namespace sgseg {

Hsv rgb_to_hsv(std::uint8_t r8, std::uint8_t g8, std::uint8_t b8) {
  const double r = r8;
  const double g = g8;
  const double b = b8;
  const double max = std::max({r, g, b});
  const double min = std::min({r, g, b});
  const double delta = max - min;

  Hsv out;
  out.v = max;
  if (max <= 0.0 || delta <= 0.0) {
    return out;
  }
  out.s = delta / max * 255.0;

  double degrees;
  if (max == r) {
    degrees = 60.0 * ((g - b) / delta);
    if (degrees < 0.0) degrees += 360.0;
  } else if (max == g) {
    degrees = 60.0 * ((b - r) / delta + 2.0);
  } else {
    degrees = 60.0 * ((r - g) / delta + 4.0);
  }
  out.h = degrees / 360.0 * 255.0;
  return out;
}

HsvImage rgb_to_hsv(const RgbImage& rgb) {
  if (rgb.data.size() != 3 * rgb.size()) {
    throw Error(Errc::DimensionMismatch, "RGB buffer does not match its dimensions");
  }
  std::vector<Hsv> pixels(rgb.size());
  for (std::size_t i = 0; i < pixels.size(); ++i) {
    pixels[i] = rgb_to_hsv(rgb.data[3 * i], rgb.data[3 * i + 1], rgb.data[3 * i + 2]);
  }
  return HsvImage(rgb.width, rgb.height, std::move(pixels));
}

}  // namespace sgseg
