#include "sgseg/pipeline.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdio>
#include <exception>
#include <map>
#include <thread>

#include "sgseg/color.hpp"
#include "sgseg/error.hpp"
#include "sgseg/image_io.hpp"
#include "sgseg/palette.hpp"
#include "sgseg/seeds.hpp"
#include "sgseg/srg.hpp"
#include "sgseg/tensor_codec.hpp"

namespace sgseg {

PseudoLabels generate_pseudo_labels(const RgbImage& image, const GrayImage& saliency,
                                    const ActivationStack& acts, const ClassWeights& weights,
                                    const ImageLabels& classes, const GrowConfig& cfg, bool grow) {
  cfg.validate();
  if (image.width != saliency.width || image.height != saliency.height) {
    throw Error(Errc::DimensionMismatch, "image is " + std::to_string(image.height) + "x" +
                                             std::to_string(image.width) + ", saliency is " +
                                             std::to_string(saliency.height) + "x" +
                                             std::to_string(saliency.width));
  }
  const SaliencyMap sal = normalize_saliency(saliency);

  std::map<int, Cam> cams;
  for (int c : classes.classes()) {
    if (c > cfg.num_classes) {
      throw Error(Errc::InvalidLabelCode, "class " + std::to_string(c) + " exceeds class count " +
                                              std::to_string(cfg.num_classes));
    }
    const Cam low_res = class_activation_map(acts, weights, c - 1);
    cams.emplace(c, upsample_bilinear(low_res, image.height, image.width));
  }
  LabelMap seeds = extract_seeds(cams, classes, sal, cfg);
  if (!grow) {
    return {seeds, seeds};
  }
  LabelMap labels = grow_regions(rgb_to_hsv(image), sal, seeds, cfg);
  return {std::move(seeds), std::move(labels)};
}

namespace {

struct EntryResult {
  EntryOutcome outcome;
  std::optional<ConfusionAccumulator> confusion;
  std::exception_ptr failure;
};

double ignore_fraction(const LabelMap& labels) {
  if (labels.size() == 0) return 0.0;
  const auto n = std::count(labels.codes().begin(), labels.codes().end(), kIgnore);
  return static_cast<double>(n) / static_cast<double>(labels.size());
}

LabelMap read_label_png(const std::filesystem::path& path, int num_classes) {
  return decode_label_map(read_gray_png(path), num_classes);
}

void process_entry(const ManifestEntry& entry, const PipelineOptions& options, EntryResult& result) {
  const GrowConfig& cfg = options.cfg;
  const RgbImage image = read_rgb_png(entry.image_path);
  const GrayImage saliency = read_gray_png(entry.saliency_path);
  const ActivationStack acts = read_activation_stack(entry.activations_path);
  const ClassWeights weights = read_class_weights(entry.weights_path);

  const bool grow = options.stage != Stage::Seed;
  const PseudoLabels out =
      generate_pseudo_labels(image, saliency, acts, weights, entry.present_classes, cfg, grow);

  // Ground truth is read before anything is written so a bad file leaves no
  // partial output for this entry.
  std::optional<LabelMap> gt;
  if (options.stage == Stage::Full && entry.gt_path) {
    gt = read_label_png(*entry.gt_path, cfg.num_classes);
    result.confusion = ConfusionAccumulator(cfg.num_classes).accumulate(out.labels, *gt);
    result.outcome.evaluated = true;
  }

  const std::filesystem::path stem = options.out_dir / entry.image_id;
  write_gray_png(stem.string() + "_seeds.png", to_gray_image(out.seeds));
  if (grow) {
    write_gray_png(stem.string() + "_labels.png", to_gray_image(out.labels));
  }
  write_rgb_png(stem.string() + "_vis.png", colorize_labels(out.labels));
  result.outcome.ignore_fraction = ignore_fraction(out.labels);
}

// Runs fn(i) for every index on up to `jobs` threads.
template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
  const std::size_t workers = std::min<std::size_t>(std::max(1, jobs), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
  for (std::thread& t : threads) t.join();
}

PipelineSummary summarize(std::vector<EntryResult>& results, bool strict, bool require_evaluation) {
  PipelineSummary summary;
  for (EntryResult& r : results) {
    if (r.failure && strict) std::rethrow_exception(r.failure);
    if (r.confusion) {
      summary.confusion = summary.confusion ? summary.confusion->merged(*r.confusion) : *r.confusion;
    }
    summary.entries.push_back(std::move(r.outcome));
  }
  if (summary.confusion) {
    summary.evaluation = mean_iou(*summary.confusion);
  } else if (require_evaluation) {
    throw Error(Errc::EmptyEvaluation, "no entry has ground truth");
  }
  return summary;
}

std::string describe(const std::exception_ptr& failure) {
  try {
    std::rethrow_exception(failure);
  } catch (const std::exception& e) {
    return e.what();
  } catch (...) {
    return "unknown error";
  }
}

}  // namespace

std::size_t PipelineSummary::failed() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const EntryOutcome& e) { return e.error.has_value(); }));
}

std::string PipelineSummary::render(int num_classes) const {
  std::string out;
  out += "entries " + std::to_string(entries.size()) + "\n";
  out += "failed " + std::to_string(failed()) + "\n";
  for (const EntryOutcome& e : entries) {
    if (e.error) {
      out += e.image_id + " skipped: " + *e.error + "\n";
      continue;
    }
    std::array<char, 32> buf{};
    std::snprintf(buf.data(), buf.size(), "%.4f", e.ignore_fraction);
    out += e.image_id + " ignore_fraction " + buf.data() + "\n";
  }
  if (evaluation) {
    out += "\n";
    out += render_report(evaluation->per_class, default_class_names(num_classes));
  }
  return out;
}

PipelineSummary run_pipeline(const std::vector<ManifestEntry>& entries,
                             const PipelineOptions& options) {
  options.cfg.validate();
  std::error_code ec;
  std::filesystem::create_directories(options.out_dir, ec);
  if (ec) {
    throw Error(Errc::Io, "cannot create " + options.out_dir.string() + ": " + ec.message());
  }

  std::vector<EntryResult> results(entries.size());
  parallel_for(entries.size(), options.jobs, [&](std::size_t i) {
    EntryResult& r = results[i];
    r.outcome.image_id = entries[i].image_id;
    try {
      process_entry(entries[i], options, r);
    } catch (const std::exception&) {
      r.failure = std::current_exception();
      r.outcome.error = describe(r.failure);
      r.confusion.reset();
      r.outcome.evaluated = false;
    }
  });
  return summarize(results, options.strict, false);
}

PipelineSummary evaluate_predictions(const std::vector<ManifestEntry>& entries,
                                     const std::filesystem::path& pred_dir, int num_classes) {
  std::vector<EntryResult> results(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const ManifestEntry& entry = entries[i];
    EntryResult& r = results[i];
    r.outcome.image_id = entry.image_id;
    if (!entry.gt_path) continue;
    const LabelMap pred =
        read_label_png(pred_dir / (entry.image_id + "_labels.png"), num_classes);
    const LabelMap gt = read_label_png(*entry.gt_path, num_classes);
    r.confusion = ConfusionAccumulator(num_classes).accumulate(pred, gt);
    r.outcome.evaluated = true;
    r.outcome.ignore_fraction = ignore_fraction(pred);
  }
  return summarize(results, true, true);
}

}  // namespace sgseg
