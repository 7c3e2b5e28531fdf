#include "sgseg/srg.hpp"

#include <cmath>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <queue>
#include <string>
#include <tuple>

#include "sgseg/error.hpp"

namespace sgseg {

namespace {

double similarity(const Hsv& a, const Hsv& b, double sal_a, double sal_b) {
  const double raw_dh = std::abs(a.h - b.h);
  const double dh = std::min(raw_dh, 255.0 - raw_dh);
  const double ds = std::abs(a.s - b.s);
  const double dv = std::abs(a.v - b.v);
  const double weight = std::exp(std::abs(sal_a - sal_b));
  return weight * std::sqrt(dh * dh + ds * ds + dv * dv);
}

void check_shapes(const HsvImage& img, const SaliencyMap& sal, const LabelMap* seeds) {
  if (img.width() != sal.width() || img.height() != sal.height()) {
    throw Error(Errc::DimensionMismatch, "image and saliency map differ in size");
  }
  if (seeds && (seeds->width() != img.width() || seeds->height() != img.height())) {
    throw Error(Errc::DimensionMismatch, "seed map and image differ in size");
  }
}

void check_connectivity(int connectivity) {
  if (connectivity != 4 && connectivity != 8) {
    throw Error(Errc::InvalidArgument, "connectivity must be 4 or 8");
  }
}

// Shared neighbourhood walk on a width x height grid.
class Grid {
 public:
  Grid(int width, int height, int connectivity)
      : width_(width), height_(height), connectivity_(connectivity) {}

  template <typename Fn>
  void for_each_neighbor(std::size_t index, Fn&& fn) const {
    static constexpr int kDy[] = {-1, 0, 0, 1, -1, -1, 1, 1};
    static constexpr int kDx[] = {0, -1, 1, 0, -1, 1, -1, 1};
    const int row = static_cast<int>(index / width_);
    const int col = static_cast<int>(index % width_);
    for (int k = 0; k < connectivity_; ++k) {
      const int r = row + kDy[k];
      const int c = col + kDx[k];
      if (r < 0 || r >= height_ || c < 0 || c >= width_) continue;
      fn(static_cast<std::size_t>(r) * width_ + c);
    }
  }

 private:
  int width_;
  int height_;
  int connectivity_;
};

struct Candidate {
  double key;
  std::uint8_t label;
  std::uint32_t target;  // unlabeled pixel p
  std::uint32_t source;  // labeled pixel q

  auto tie() const { return std::tie(key, label, target, source); }
  friend bool operator<(const Candidate& a, const Candidate& b) { return a.tie() < b.tie(); }
  friend bool operator>(const Candidate& a, const Candidate& b) { return b < a; }
};

double similarity_at(const HsvImage& img, const SaliencyMap& sal, std::size_t p, std::size_t q) {
  return similarity(img.at(p), img.at(q), sal.at(p), sal.at(q));
}

}  // namespace

double pixel_similarity(const HsvImage& img, const SaliencyMap& sal, Pixel i, Pixel j) {
  check_shapes(img, sal, nullptr);
  for (const Pixel& p : {i, j}) {
    if (p.row < 0 || p.row >= img.height() || p.col < 0 || p.col >= img.width()) {
      throw Error(Errc::OutOfBounds, "pixel (" + std::to_string(p.row) + ", " +
                                         std::to_string(p.col) + ") outside " +
                                         std::to_string(img.height()) + "x" +
                                         std::to_string(img.width()));
    }
  }
  return similarity(img.at(i), img.at(j), sal.at(i), sal.at(j));
}

LabelMap grow_regions(const HsvImage& img, const SaliencyMap& sal, const LabelMap& seeds,
                      const GrowConfig& cfg) {
  cfg.validate();
  check_shapes(img, sal, &seeds);
  seeds.validate(cfg.num_classes);

  LabelMap out = seeds;
  const Grid grid(img.width(), img.height(), cfg.connectivity);
  std::priority_queue<Candidate, std::vector<Candidate>, std::greater<>> front;

  const auto push_from = [&](std::size_t q) {
    const std::uint8_t label = out.at(q);
    grid.for_each_neighbor(q, [&](std::size_t p) {
      if (out.at(p) != kIgnore) return;
      const double key = similarity_at(img, sal, p, q);
      // Inadmissible candidates can never win later, so they are not queued.
      if (!growing_predicate(key, cfg.theta)) return;
      front.push({key, label, static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(q)});
    });
  };

  for (std::size_t q = 0; q < out.size(); ++q) {
    if (out.at(q) != kIgnore) push_from(q);
  }
  while (!front.empty()) {
    const Candidate best = front.top();
    front.pop();
    if (out.at(best.target) != kIgnore) continue;
    out.set(best.target, best.label);
    push_from(best.target);
  }
  return out;
}

LabelMap grow_regions_oracle(const HsvImage& img, const SaliencyMap& sal, const LabelMap& seeds,
                             const GrowConfig& cfg) {
  cfg.validate();
  check_shapes(img, sal, &seeds);
  seeds.validate(cfg.num_classes);

  LabelMap out = seeds;
  const Grid grid(img.width(), img.height(), cfg.connectivity);
  while (true) {
    std::optional<Candidate> best;
    for (std::size_t q = 0; q < out.size(); ++q) {
      if (out.at(q) == kIgnore) continue;
      grid.for_each_neighbor(q, [&](std::size_t p) {
        if (out.at(p) != kIgnore) return;
        const Candidate c{similarity_at(img, sal, p, q), out.at(q), static_cast<std::uint32_t>(p),
                          static_cast<std::uint32_t>(q)};
        if (!growing_predicate(c.key, cfg.theta)) return;
        if (!best || c < *best) best = c;
      });
    }
    if (!best) break;
    out.set(best->target, best->label);
  }
  return out;
}

std::vector<bool> reachable_set(const HsvImage& img, const SaliencyMap& sal, const LabelMap& seeds,
                                double theta, int connectivity) {
  check_shapes(img, sal, &seeds);
  check_connectivity(connectivity);
  const Grid grid(img.width(), img.height(), connectivity);

  std::vector<bool> reached(seeds.size(), false);
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    if (seeds.at(i) != kIgnore) {
      reached[i] = true;
      queue.push_back(i);
    }
  }
  while (!queue.empty()) {
    const std::size_t q = queue.front();
    queue.pop_front();
    grid.for_each_neighbor(q, [&](std::size_t p) {
      if (reached[p]) return;
      if (!growing_predicate(similarity_at(img, sal, p, q), theta)) return;
      reached[p] = true;
      queue.push_back(p);
    });
  }
  return reached;
}

}  // namespace sgseg
