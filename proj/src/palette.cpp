#include "sgseg/palette.hpp"

namespace sgseg {

Rgb voc_color(std::uint8_t code) {
  if (code == kIgnore) return {224, 224, 192};
  Rgb rgb{0, 0, 0};
  unsigned c = code;
  for (int bit = 7; bit >= 0; --bit) {
    rgb[0] |= static_cast<std::uint8_t>(((c >> 0) & 1u) << bit);
    rgb[1] |= static_cast<std::uint8_t>(((c >> 1) & 1u) << bit);
    rgb[2] |= static_cast<std::uint8_t>(((c >> 2) & 1u) << bit);
    c >>= 3;
  }
  return rgb;
}

RgbImage colorize_labels(const LabelMap& labels) {
  RgbImage out{labels.width(), labels.height(), {}};
  out.data.reserve(3 * labels.size());
  for (std::uint8_t code : labels.codes()) {
    const Rgb rgb = voc_color(code);
    out.data.insert(out.data.end(), rgb.begin(), rgb.end());
  }
  return out;
}

}  // namespace sgseg
