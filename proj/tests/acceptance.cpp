// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "color_srg_reference.hpp"
#include "fixture.hpp"
#include "random_instances.hpp"
#include "sgseg/cam.hpp"
#include "sgseg/color.hpp"
#include "sgseg/eval.hpp"
#include "sgseg/pipeline.hpp"
#include "sgseg/seeds.hpp"
#include "sgseg/srg.hpp"
#include "sgseg/tensor_codec.hpp"

using namespace sgseg;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

constexpr std::array<double, 4> kThetas = {1.0, 5.0, 10.0, 50.0};

struct Result {
  bool pass = true;
  std::string detail;
};

Result fail(std::string why) { return {false, std::move(why)}; }

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::vector<testing::GrowInstance> grow_instances(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<testing::GrowInstance> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(testing::random_grow_instance(rng, kThetas[i % 4]));
  return out;
}

Result oracle_equivalence() {
  const auto start = Clock::now();
  const auto instances = grow_instances(1001, 240);
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& in = instances[i];
    if (grow_regions(in.img, in.sal, in.seeds, in.cfg) != grow_regions_oracle(in.img, in.sal, in.seeds, in.cfg)) {
      return fail("instance " + std::to_string(i) + " differs");
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 10.0) return fail("took " + fmt("%.2f", elapsed) + " s (limit 10 s)");
  return {true, "240 instances, " + fmt("%.2f", elapsed) + " s"};
}

Result labeled_set_characterization() {
  const auto instances = grow_instances(1001, 240);
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& in = instances[i];
    const LabelMap out = grow_regions(in.img, in.sal, in.seeds, in.cfg);
    const auto reach = reachable_set(in.img, in.sal, in.seeds, in.cfg.theta, in.cfg.connectivity);
    for (std::size_t p = 0; p < out.size(); ++p) {
      if ((out.at(p) != kIgnore) != reach[p]) return fail("instance " + std::to_string(i));
    }
  }
  return {true, "240 instances"};
}

Result theta_monotonicity() {
  std::mt19937_64 rng(1003);
  int checked = 0;
  for (int i = 0; i < 150; ++i) {
    auto in = testing::random_grow_instance(rng, 1.0);
    double lo = testing::uniform_real(rng, 0.5, 40.0);
    double hi = testing::uniform_real(rng, 0.5, 40.0);
    if (i % 3 == 0) {
      lo = kThetas[testing::uniform_int(rng, 0, 2)];
      hi = kThetas[3];
    }
    if (lo == hi) continue;
    if (lo > hi) std::swap(lo, hi);
    in.cfg.theta = lo;
    const LabelMap small = grow_regions(in.img, in.sal, in.seeds, in.cfg);
    in.cfg.theta = hi;
    const LabelMap large = grow_regions(in.img, in.sal, in.seeds, in.cfg);
    for (std::size_t p = 0; p < small.size(); ++p) {
      if (small.at(p) != kIgnore && large.at(p) == kIgnore) return fail("instance " + std::to_string(i));
    }
    ++checked;
  }
  if (checked < 100) return fail("only " + std::to_string(checked) + " pairs");
  return {true, std::to_string(checked) + " pairs"};
}

Result saliency_neutral_reduction() {
  std::mt19937_64 rng(1004);
  for (int i = 0; i < 150; ++i) {
    const auto in = testing::random_grow_instance(rng, kThetas[i % 4]);
    const double level = testing::uniform_real(rng, 0.0, 1.0);
    const SaliencyMap flat(in.img.width(), in.img.height(), std::vector<double>(in.img.size(), level));
    const LabelMap out = grow_regions(in.img, flat, in.seeds, in.cfg);
    if (out != testing::color_only_srg(in.img, in.seeds, in.cfg.theta, in.cfg.connectivity)) {
      return fail("instance " + std::to_string(i));
    }
  }
  return {true, "150 instances"};
}

Result cam_linearity() {
  std::mt19937_64 rng(1005);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const ActivationStack acts = testing::random_stack(rng, 8, 12);
    const int classes = testing::uniform_int(rng, 1, 5);
    const ClassWeights w(classes, acts.channels(),
                         testing::random_floats(rng, static_cast<std::size_t>(classes) * acts.channels(), -3.f, 3.f));
    const int c = testing::uniform_int(rng, 0, classes - 1);
    double sum = 0.0;
    const Cam cam = class_activation_map(acts, w, c);
    for (double v : cam.values()) sum += v;
    const double score = class_score(global_average_pool(acts), w, c);
    const double err = std::abs(sum - score) / std::max(1.0, std::abs(score));
    worst = std::max(worst, err);
    if (err > 1e-4) return fail("triple " + std::to_string(i) + " relative error " + fmt("%.3g", err));
  }
  return {true, "200 triples, worst scaled error " + fmt("%.2g", worst)};
}

Result strict_boundary() {
  // Colour step of exactly 10 in V with equal saliency: sim == theta.
  const HsvImage img(3, 1, {{0, 0, 50}, {0, 0, 60}, {0, 0, 60}});
  const SaliencyMap sal(3, 1, {0.4, 0.4, 0.4});
  const LabelMap seeds(3, 1, std::vector<std::uint8_t>{1, 255, 255});
  GrowConfig cfg;
  cfg.theta = 10.0;
  if (pixel_similarity(img, sal, {0, 0}, {0, 1}) != 10.0) return fail("edge is not exactly theta");
  if (growing_predicate(10.0, 10.0)) return fail("predicate accepts sim == theta");
  if (grow_regions(img, sal, seeds, cfg) != seeds) return fail("grow_regions crossed the edge");
  if (grow_regions_oracle(img, sal, seeds, cfg) != seeds) return fail("oracle crossed the edge");
  if (reachable_set(img, sal, seeds, 10.0, 4)[1]) return fail("reachable_set crossed the edge");
  return {true, "sim == theta == 10 blocks growth"};
}

Result iou_exactness() {
  const auto row = [](std::vector<std::uint8_t> v) {
    const int w = static_cast<int>(v.size());
    return LabelMap(w, 1, std::move(v));
  };
  const auto ident = ConfusionAccumulator(2).accumulate(row({0, 1, 2, 2}), row({0, 1, 2, 2}));
  for (int c = 0; c <= 2; ++c) {
    if (iou(ident, c) != 1.0) return fail("identity IoU != 1 for class " + std::to_string(c));
  }
  const auto disjoint = ConfusionAccumulator(2).accumulate(row({1, 1, 2, 2}), row({2, 2, 1, 1}));
  if (iou(disjoint, 1) != 0.0 || iou(disjoint, 2) != 0.0) return fail("disjoint IoU != 0");
  const auto overlap =
      ConfusionAccumulator(1).accumulate(row({0, 0, 1, 1, 1, 1, 0, 0}), row({1, 1, 1, 1, 0, 0, 0, 0}));
  const double third = iou(overlap, 1).value_or(-1.0);
  if (std::abs(third - 1.0 / 3.0) > 1e-12) return fail("2-of-6 overlap gave " + fmt("%.17g", third));

  std::mt19937_64 rng(1007);
  for (int t = 0; t < 100; ++t) {
    const int classes = testing::uniform_int(rng, 1, 6);
    const int images = testing::uniform_int(rng, 2, 6);
    std::vector<std::pair<LabelMap, LabelMap>> pairs;
    for (int k = 0; k < images; ++k) {
      const int w = testing::uniform_int(rng, 1, 10);
      const int h = testing::uniform_int(rng, 1, 10);
      std::vector<std::uint8_t> p(static_cast<std::size_t>(w) * h);
      std::vector<std::uint8_t> g(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) {
        p[i] = testing::uniform_int(rng, 0, 9) == 0 ? kIgnore : static_cast<std::uint8_t>(testing::uniform_int(rng, 0, classes));
        g[i] = testing::uniform_int(rng, 0, 9) == 0 ? kIgnore : static_cast<std::uint8_t>(testing::uniform_int(rng, 0, classes));
      }
      pairs.emplace_back(LabelMap(w, h, p), LabelMap(w, h, g));
    }
    ConfusionAccumulator whole(classes);
    for (const auto& [p, g] : pairs) whole = whole.accumulate(p, g);
    std::vector<ConfusionAccumulator> parts(testing::uniform_int(rng, 2, 4), ConfusionAccumulator(classes));
    for (const auto& [p, g] : pairs) {
      auto& part = parts[testing::uniform_int(rng, 0, static_cast<int>(parts.size()) - 1)];
      part = part.accumulate(p, g);
    }
    ConfusionAccumulator merged(classes);
    for (const auto& part : parts) merged = merged.merged(part);
    if (merged != whole) return fail("additivity broken on split " + std::to_string(t));
  }
  return {true, "identity/disjoint/1-of-3 exact, 100 random splits additive"};
}

Result seed_budget_criterion() {
  std::mt19937_64 rng(1008);
  for (int t = 0; t < 300; ++t) {
    const int h = testing::uniform_int(rng, 1, 16);
    const int w = testing::uniform_int(rng, 1, 16);
    const std::size_t n = static_cast<std::size_t>(h) * w;
    const int levels = t % 10 == 0 ? 1 : testing::uniform_int(rng, 2, 50);
    const Cam cam = testing::random_integer_cam(rng, h, w, levels);
    const bool constant = std::all_of(cam.values().begin(), cam.values().end(),
                                      [&](double v) { return v == cam.values()[0]; });
    const std::size_t defined = constant ? 0 : n;
    const std::size_t expected = std::min(static_cast<std::size_t>(std::ceil(0.2 * static_cast<double>(n) - 1e-9)), defined);

    GrowConfig cfg;
    cfg.num_classes = 1;
    const SaliencyMap sal(w, h, std::vector<double>(n, 1.0));
    const LabelMap seeds = extract_seeds({{1, cam}}, ImageLabels({1}), sal, cfg);
    const auto count = static_cast<std::size_t>(std::count(seeds.codes().begin(), seeds.codes().end(), 1));
    if (count != expected || top_fraction_pixels(cam, 0.2).size() != expected) {
      return fail("grid " + std::to_string(h) + "x" + std::to_string(w) + ": " + std::to_string(count) +
                  " seeds, expected " + std::to_string(expected));
    }
  }
  return {true, "300 random CAMs"};
}

// Byte-for-byte listing of every regular file under `root`.
std::map<std::string, std::string> snapshot(const fs::path& root) {
  std::map<std::string, std::string> files;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file()) continue;
    std::ifstream in(entry.path(), std::ios::binary);
    files[fs::relative(entry.path(), root).string()] = std::string(std::istreambuf_iterator<char>(in), {});
  }
  return files;
}

struct FixtureRun {
  fs::path work;
  fs::path manifest;
  testing::Fixture fixture;
};

FixtureRun& fixture_run() {
  static FixtureRun run = [] {
    FixtureRun r;
    r.work = fs::temp_directory_path() / "sgseg_acceptance";
    fs::remove_all(r.work);
    r.fixture = testing::make_synthetic_fixture();
    r.manifest = testing::write_fixture(r.fixture, r.work / "data");
    return r;
  }();
  return run;
}

Result end_to_end_fixture() {
  FixtureRun& run = fixture_run();
  const GrowConfig cfg;

  // Floor from the brute-force grower, computed in memory.
  ConfusionAccumulator oracle_acc(cfg.num_classes);
  for (const auto& img : run.fixture.images) {
    const PseudoLabels seeds_only = generate_pseudo_labels(img.image, img.saliency, img.acts, run.fixture.weights,
                                                           img.classes, cfg, false);
    SaliencyMap sal(img.saliency.width, img.saliency.height, [&] {
      std::vector<double> v(img.saliency.data.size());
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = img.saliency.data[i] / 255.0;
      return v;
    }());
    HsvImage hsv = [&] {
      std::vector<Hsv> px;
      for (std::size_t i = 0; i < img.image.size(); ++i) {
        px.push_back(rgb_to_hsv(img.image.data[3 * i], img.image.data[3 * i + 1], img.image.data[3 * i + 2]));
      }
      return HsvImage(img.image.width, img.image.height, std::move(px));
    }();
    oracle_acc = oracle_acc.accumulate(grow_regions_oracle(hsv, sal, seeds_only.seeds, cfg), img.gt);
  }
  const double floor = mean_iou(oracle_acc).miou;

  const auto start = Clock::now();
  PipelineOptions options;
  options.out_dir = run.work / "run_a";
  const PipelineSummary summary = run_pipeline(read_manifest(run.manifest), options);
  const double elapsed = seconds_since(start);

  if (summary.failed() != 0) return fail(std::to_string(summary.failed()) + " entries failed");
  if (summary.entries.size() != 20) return fail("expected 20 entries");
  if (!summary.evaluation) return fail("no evaluation");
  const double miou = summary.evaluation->miou;
  const std::string numbers = "mIoU " + fmt("%.4f", miou) + ", oracle floor " + fmt("%.4f", floor) + ", " +
                              fmt("%.2f", elapsed) + " s";
  if (miou < 0.90) return fail(numbers);
  if (miou != floor) return fail("pipeline and oracle disagree: " + numbers);
  if (elapsed >= 5.0) return fail("too slow: " + numbers);
  return {true, numbers};
}

Result determinism() {
  FixtureRun& run = fixture_run();
  const auto entries = read_manifest(run.manifest);
  PipelineOptions a;
  a.out_dir = run.work / "det_a";
  PipelineOptions b;
  b.out_dir = run.work / "det_b";
  b.jobs = 3;
  run_pipeline(entries, a);
  run_pipeline(entries, b);
  const auto sa = snapshot(a.out_dir);
  const auto sb = snapshot(b.out_dir);
  if (sa.empty()) return fail("no output written");
  if (sa != sb) return fail("output trees differ");
  return {true, std::to_string(sa.size()) + " files identical (serial vs 3 jobs)"};
}

Result codec_round_trip() {
  std::mt19937_64 rng(1011);
  for (int t = 0; t < 1000; ++t) {
    Tensor tensor;
    if (t % 2 == 0) {
      tensor = testing::random_stack(rng, 5, 9);
    } else {
      const int c = testing::uniform_int(rng, 1, 21);
      const int k = testing::uniform_int(rng, 1, 16);
      tensor = ClassWeights(c, k, testing::random_floats(rng, static_cast<std::size_t>(c) * k, -1e4f, 1e4f));
    }
    const auto bytes = encode_tensor(tensor);
    const Tensor back = decode_tensor(bytes);
    if (back.index() != tensor.index() || encode_tensor(back) != bytes) {
      return fail("tensor " + std::to_string(t) + " changed");
    }
  }
  return {true, "1000 tensors bit-exact"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
      {"1 oracle equivalence", oracle_equivalence},
      {"2 labeled-set characterization", labeled_set_characterization},
      {"3 theta monotonicity", theta_monotonicity},
      {"4 saliency-neutral reduction", saliency_neutral_reduction},
      {"5 CAM linearity identity", cam_linearity},
      {"6 strict growing boundary", strict_boundary},
      {"7 IoU exactness", iou_exactness},
      {"8 seed budget", seed_budget_criterion},
      {"9 end-to-end synthetic fixture", end_to_end_fixture},
      {"10 determinism", determinism},
      {"11 codec round trip", codec_round_trip},
  };

  const auto start = Clock::now();
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Result r;
    try {
      r = check();
    } catch (const std::exception& e) {
      r = fail(std::string("exception: ") + e.what());
    }
    failures += !r.pass;
    std::printf("[%s] %s: %s\n", r.pass ? "PASS" : "FAIL", name.c_str(), r.detail.c_str());
  }
  const double total = seconds_since(start);
  const bool fast = total < 60.0;
  std::printf("[%s] suite runtime: %.2f s (limit 60 s)\n", fast ? "PASS" : "FAIL", total);
  fs::remove_all(fixture_run().work);
  return failures == 0 && fast ? 0 : 1;
}
