#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sgseg/cam.hpp"
#include "sgseg/eval.hpp"
#include "sgseg/manifest.hpp"
#include "sgseg/types.hpp"

namespace sgseg {

struct PseudoLabels {
  LabelMap seeds;
  LabelMap labels;  // equals `seeds` when growing was not requested
};

/// In-memory seed -> grow for one image. Class code c uses weight row c - 1.
/// The activation maps are resampled to the image size before seeding.
PseudoLabels generate_pseudo_labels(const RgbImage& image, const GrayImage& saliency,
                                    const ActivationStack& acts, const ClassWeights& weights,
                                    const ImageLabels& classes, const GrowConfig& cfg,
                                    bool grow = true);

enum class Stage { Seed, Grow, Full };

struct PipelineOptions {
  GrowConfig cfg;
  std::filesystem::path out_dir;
  Stage stage = Stage::Full;
  bool strict = false;
  int jobs = 1;
};

struct EntryOutcome {
  std::string image_id;
  std::optional<std::string> error;  // set when the entry was skipped
  double ignore_fraction = 0.0;      // of the final label map
  bool evaluated = false;
};

struct PipelineSummary {
  std::vector<EntryOutcome> entries;  // manifest order
  std::optional<ConfusionAccumulator> confusion;  // set when any entry had ground truth
  std::optional<MeanIou> evaluation;

  std::size_t failed() const;
  /// Human-readable summary. Deterministic: no timings or absolute paths.
  std::string render(int num_classes) const;
};

/// Runs every entry, writing <id>_seeds.png, <id>_labels.png (Grow/Full) and
/// <id>_vis.png into out_dir, and accumulating evaluation when ground truth is
/// given (Full). Per-entry failures are recorded and skipped unless `strict`,
/// in which case the first failure in manifest order is rethrown after all
/// workers stop. Evaluation with ground truth but no scoreable class throws
/// EmptyEvaluation.
PipelineSummary run_pipeline(const std::vector<ManifestEntry>& entries,
                             const PipelineOptions& options);

/// Scores <pred_dir>/<id>_labels.png against each entry's ground truth.
/// Entries without ground truth are skipped. Throws EmptyEvaluation when
/// nothing is scoreable.
PipelineSummary evaluate_predictions(const std::vector<ManifestEntry>& entries,
                                     const std::filesystem::path& pred_dir, int num_classes);

}  // namespace sgseg
