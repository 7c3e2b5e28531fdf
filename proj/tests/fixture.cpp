#include "fixture.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <random>

#include "sgseg/image_io.hpp"
#include "sgseg/tensor_codec.hpp"

namespace sgseg::testing {

namespace {

struct Square {
  int row;
  int col;
  int size;
  int label;
};

// Saturated, mutually distant colours; the first entries double as
// backgrounds.
constexpr std::array<std::array<std::uint8_t, 3>, 8> kColors = {{
    {40, 120, 40},    // green
    {30, 40, 140},    // navy
    {220, 30, 30},    // red
    {240, 200, 20},   // yellow
    {20, 200, 220},   // cyan
    {200, 40, 200},   // magenta
    {120, 40, 200},   // purple
    {250, 130, 10},   // orange
}};

std::uint8_t saliency_byte(double v) { return static_cast<std::uint8_t>(std::lround(v * 255.0)); }

}  // namespace

Fixture make_synthetic_fixture(std::uint64_t seed, int count, int side) {
  std::mt19937_64 rng(seed);
  const auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  Fixture fixture;
  const int num_classes = fixture.num_classes;
  std::vector<float> identity(static_cast<std::size_t>(num_classes) * num_classes, 0.f);
  for (int c = 0; c < num_classes; ++c) identity[static_cast<std::size_t>(c) * num_classes + c] = 1.f;
  fixture.weights = ClassWeights(num_classes, num_classes, std::move(identity));

  const int half = side / 2;
  for (int n = 0; n < count; ++n) {
    std::vector<Square> squares;
    const int first = pick(1, num_classes);
    if (pick(0, 1) == 0) {
      // One square of 8..10 pixels per side.
      const int size = pick(half, std::min(side, half + 2));
      squares.push_back({pick(0, side - size), pick(0, side - size), size, first});
    } else {
      // Two half-side squares in opposite quadrants. Each must hold at least
      // the per-class seed budget (52 of 256 pixels) so no seed lands on the
      // background.
      int second = pick(1, num_classes - 1);
      if (second >= first) ++second;
      const bool main_diagonal = pick(0, 1) == 0;
      squares.push_back({0, main_diagonal ? 0 : half, half, first});
      squares.push_back({half, main_diagonal ? half : 0, half, second});
    }

    const int bg_color = pick(0, 1);
    std::vector<int> palette;
    for (int c = 2; c < static_cast<int>(kColors.size()); ++c) palette.push_back(c);
    std::shuffle(palette.begin(), palette.end(), rng);

    const std::size_t pixels = static_cast<std::size_t>(side) * side;
    RgbImage image{side, side, std::vector<std::uint8_t>(3 * pixels)};
    GrayImage saliency{side, side, std::vector<std::uint8_t>(pixels, saliency_byte(0.05))};
    std::vector<std::uint8_t> gt(pixels, kBackground);
    std::vector<float> acts(static_cast<std::size_t>(num_classes) * pixels, 0.f);

    for (std::size_t i = 0; i < pixels; ++i) {
      for (int ch = 0; ch < 3; ++ch) image.data[3 * i + ch] = kColors[bg_color][ch];
    }
    std::vector<int> present;
    for (std::size_t s = 0; s < squares.size(); ++s) {
      const Square& sq = squares[s];
      present.push_back(sq.label);
      const auto& color = kColors[palette[s]];
      const double cy = sq.row + (sq.size - 1) / 2.0;
      const double cx = sq.col + (sq.size - 1) / 2.0;
      float* plane = acts.data() + static_cast<std::size_t>(sq.label - 1) * pixels;
      for (int y = 0; y < side; ++y) {
        for (int x = 0; x < side; ++x) {
          const std::size_t i = static_cast<std::size_t>(y) * side + x;
          const bool inside = y >= sq.row && y < sq.row + sq.size && x >= sq.col && x < sq.col + sq.size;
          const double dist = std::hypot(y - cy, x - cx);
          // Plateau on the square with a mild central peak; a weaker halo
          // outside that never exceeds the plateau.
          plane[i] = inside ? static_cast<float>(2.0 + std::exp(-dist / 4.0))
                            : static_cast<float>(0.5 * std::exp(-dist / 3.0));
          if (!inside) continue;
          // +-2 intensity jitter keeps the square textured but coherent.
          for (int ch = 0; ch < 3; ++ch) {
            image.data[3 * i + ch] = static_cast<std::uint8_t>(std::clamp(color[ch] + pick(-2, 2), 0, 255));
          }
          saliency.data[i] = saliency_byte(0.9);
          gt[i] = static_cast<std::uint8_t>(sq.label);
        }
      }
    }

    FixtureImage entry;
    entry.id = "synth_" + std::string(n < 10 ? "0" : "") + std::to_string(n);
    entry.image = std::move(image);
    entry.saliency = std::move(saliency);
    entry.acts = ActivationStack(num_classes, side, side, std::move(acts));
    entry.gt = LabelMap(side, side, std::move(gt));
    entry.classes = ImageLabels(std::move(present));
    fixture.images.push_back(std::move(entry));
  }
  return fixture;
}

std::filesystem::path write_fixture(const Fixture& fixture, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  write_tensor(dir / "weights.sgt", fixture.weights);
  std::ofstream manifest(dir / "manifest.csv");
  manifest << "# image_id,image,saliency,activations,weights,ground_truth,classes\n";
  for (const FixtureImage& img : fixture.images) {
    write_rgb_png(dir / (img.id + ".png"), img.image);
    write_gray_png(dir / (img.id + "_sal.png"), img.saliency);
    write_tensor(dir / (img.id + "_acts.sgt"), img.acts);
    write_gray_png(dir / (img.id + "_gt.png"), to_gray_image(img.gt));
    manifest << img.id << ',' << img.id << ".png," << img.id << "_sal.png," << img.id
             << "_acts.sgt,weights.sgt," << img.id << "_gt.png,";
    const auto classes = img.classes.classes();
    for (std::size_t k = 0; k < classes.size(); ++k) manifest << (k ? ";" : "") << classes[k];
    manifest << '\n';
  }
  return dir / "manifest.csv";
}

}  // namespace sgseg::testing
