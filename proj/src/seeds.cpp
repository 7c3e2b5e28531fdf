#include "sgseg/seeds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "sgseg/error.hpp"

namespace sgseg {

std::size_t seed_budget(double fraction, std::size_t pixel_count) {
  if (pixel_count == 0 || !(fraction > 0.0)) return 0;
  const double exact = fraction * static_cast<double>(pixel_count);
  const double nearest = std::nearbyint(exact);
  double count = std::ceil(exact);
  if (std::abs(exact - nearest) <= 1e-9 * std::max(1.0, exact)) count = nearest;
  return std::min(pixel_count, static_cast<std::size_t>(std::max(0.0, count)));
}

std::optional<std::vector<double>> normalize_min_max(const Cam& cam) {
  const auto values = cam.values();
  if (values.empty()) return std::nullopt;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double min = *lo;
  const double range = *hi - min;
  if (!(range > 0.0)) return std::nullopt;
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = (values[i] - min) / range;
  return out;
}

namespace {

std::vector<std::size_t> top_indices(const std::vector<double>& normalized, double fraction) {
  const std::size_t budget = seed_budget(fraction, normalized.size());
  std::vector<std::size_t> order(normalized.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  const auto by_rank = [&](std::size_t a, std::size_t b) {
    if (normalized[a] != normalized[b]) return normalized[a] > normalized[b];
    return a < b;
  };
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(budget), order.end(),
                    by_rank);
  order.resize(budget);
  return order;
}

}  // namespace

std::vector<std::size_t> top_fraction_pixels(const Cam& cam, double fraction) {
  const auto normalized = normalize_min_max(cam);
  if (!normalized) return {};
  return top_indices(*normalized, fraction);
}

LabelMap extract_seeds(const std::map<int, Cam>& cams, const ImageLabels& labels,
                       const SaliencyMap& saliency, const GrowConfig& cfg) {
  cfg.validate();
  const int height = saliency.height();
  const int width = saliency.width();
  const std::size_t n = saliency.size();

  // Winning class per pixel and its normalized value; 0 means unmarked.
  std::vector<int> owner(n, 0);
  std::vector<double> owner_value(n, 0.0);

  for (int c : labels.classes()) {
    if (c > cfg.num_classes) {
      throw Error(Errc::InvalidLabelCode, "class " + std::to_string(c) + " exceeds class count " +
                                              std::to_string(cfg.num_classes));
    }
    const auto it = cams.find(c);
    if (it == cams.end()) {
      throw Error(Errc::MissingCam, "no activation map for class " + std::to_string(c));
    }
    const Cam& cam = it->second;
    if (cam.height() != height || cam.width() != width) {
      throw Error(Errc::DimensionMismatch,
                  "activation map for class " + std::to_string(c) + " is " +
                      std::to_string(cam.height()) + "x" + std::to_string(cam.width()) +
                      ", saliency is " + std::to_string(height) + "x" + std::to_string(width));
    }
    const auto normalized = normalize_min_max(cam);
    if (!normalized) continue;
    // Classes arrive in increasing order, so a strict comparison hands exact
    // ties to the smaller class.
    for (std::size_t i : top_indices(*normalized, cfg.seed_fraction)) {
      if (owner[i] == 0 || (*normalized)[i] > owner_value[i]) {
        owner[i] = c;
        owner_value[i] = (*normalized)[i];
      }
    }
  }

  std::vector<std::uint8_t> codes(n, kIgnore);
  for (std::size_t i = 0; i < n; ++i) {
    if (owner[i] != 0) {
      codes[i] = static_cast<std::uint8_t>(owner[i]);
    } else if (saliency.at(i) < cfg.bg_saliency_threshold) {
      codes[i] = kBackground;
    }
  }
  return LabelMap(width, height, std::move(codes));
}

}  // namespace sgseg
