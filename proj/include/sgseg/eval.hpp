#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sgseg/types.hpp"

namespace sgseg {

/// Confusion counts over classes 0..C. Row = ground truth, column =
/// prediction; column C+1 collects predictions of 255, which never match.
/// Ground-truth 255 pixels are skipped.
class ConfusionAccumulator {
 public:
  explicit ConfusionAccumulator(int num_classes);

  int num_classes() const { return num_classes_; }
  /// Ground truth g predicted as p; p may be 255.
  std::uint64_t count(int gt, int pred) const;
  std::uint64_t total() const;

  /// Returns a new accumulator with pred/gt added. Throws DimensionMismatch
  /// or InvalidLabelCode.
  [[nodiscard]] ConfusionAccumulator accumulate(const LabelMap& pred, const LabelMap& gt) const;
  /// Element-wise sum; both sides must have the same class count.
  [[nodiscard]] ConfusionAccumulator merged(const ConfusionAccumulator& other) const;

  friend bool operator==(const ConfusionAccumulator&, const ConfusionAccumulator&) = default;

 private:
  std::size_t cell(int gt, int pred_column) const {
    return static_cast<std::size_t>(gt) * columns() + pred_column;
  }
  int columns() const { return num_classes_ + 2; }

  int num_classes_;
  std::vector<std::uint64_t> matrix_;
};

/// TP / (TP + FP + FN) for class c; nullopt when the class's union is empty.
std::optional<double> iou(const ConfusionAccumulator& acc, int c);

struct MeanIou {
  std::map<int, double> per_class;  // classes with a non-empty union only
  double miou = 0.0;
};

/// Mean over every class 0..C with a defined IoU. Throws EmptyEvaluation.
MeanIou mean_iou(const ConfusionAccumulator& acc);

/// "background", "aeroplane", ... for num_classes == 20; "class<N>" otherwise.
std::map<int, std::string> default_class_names(int num_classes);

/// One "<name> <percent>" row per class in index order, then "mIoU <percent>".
/// Percentages carry one decimal. Throws MissingName, EmptyEvaluation.
std::string render_report(const std::map<int, double>& per_class,
                          const std::map<int, std::string>& class_names);

/// Same content as flat "name=percent" lines ending in "miou=percent".
std::string render_key_values(const std::map<int, double>& per_class,
                              const std::map<int, std::string>& class_names);

}  // namespace sgseg
