#include "sgseg/eval.hpp"

#include <array>
#include <cstdio>
#include <numeric>

#include "sgseg/error.hpp"

namespace sgseg {

ConfusionAccumulator::ConfusionAccumulator(int num_classes) : num_classes_(num_classes) {
  if (num_classes < 1 || num_classes > 254) {
    throw Error(Errc::InvalidArgument, "num_classes must lie in [1, 254]");
  }
  matrix_.assign(static_cast<std::size_t>(num_classes + 1) * columns(), 0);
}

std::uint64_t ConfusionAccumulator::count(int gt, int pred) const {
  if (gt < 0 || gt > num_classes_) {
    throw Error(Errc::IndexOutOfRange, "ground-truth class " + std::to_string(gt));
  }
  if (pred == kIgnore) return matrix_[cell(gt, num_classes_ + 1)];
  if (pred < 0 || pred > num_classes_) {
    throw Error(Errc::IndexOutOfRange, "predicted class " + std::to_string(pred));
  }
  return matrix_[cell(gt, pred)];
}

std::uint64_t ConfusionAccumulator::total() const {
  return std::accumulate(matrix_.begin(), matrix_.end(), std::uint64_t{0});
}

ConfusionAccumulator ConfusionAccumulator::accumulate(const LabelMap& pred, const LabelMap& gt) const {
  if (pred.width() != gt.width() || pred.height() != gt.height()) {
    throw Error(Errc::DimensionMismatch, "prediction is " + std::to_string(pred.height()) + "x" +
                                             std::to_string(pred.width()) + ", ground truth is " +
                                             std::to_string(gt.height()) + "x" +
                                             std::to_string(gt.width()));
  }
  pred.validate(num_classes_);
  gt.validate(num_classes_);

  ConfusionAccumulator out = *this;
  for (std::size_t i = 0; i < gt.size(); ++i) {
    const int g = gt.at(i);
    if (g == kIgnore) continue;
    const int p = pred.at(i);
    ++out.matrix_[cell(g, p == kIgnore ? num_classes_ + 1 : p)];
  }
  return out;
}

ConfusionAccumulator ConfusionAccumulator::merged(const ConfusionAccumulator& other) const {
  if (other.num_classes_ != num_classes_) {
    throw Error(Errc::DimensionMismatch, "cannot merge accumulators with different class counts");
  }
  ConfusionAccumulator out = *this;
  for (std::size_t i = 0; i < matrix_.size(); ++i) out.matrix_[i] += other.matrix_[i];
  return out;
}

std::optional<double> iou(const ConfusionAccumulator& acc, int c) {
  if (c < 0 || c > acc.num_classes()) {
    throw Error(Errc::IndexOutOfRange, "class " + std::to_string(c) + " outside 0.." +
                                           std::to_string(acc.num_classes()));
  }
  const std::uint64_t tp = acc.count(c, c);
  std::uint64_t gt_total = acc.count(c, kIgnore);
  std::uint64_t pred_total = 0;
  for (int k = 0; k <= acc.num_classes(); ++k) {
    gt_total += acc.count(c, k);
    pred_total += acc.count(k, c);
  }
  const std::uint64_t uni = gt_total + pred_total - tp;
  if (uni == 0) return std::nullopt;
  return static_cast<double>(tp) / static_cast<double>(uni);
}

namespace {

double mean_of(const std::map<int, double>& per_class) {
  if (per_class.empty()) {
    throw Error(Errc::EmptyEvaluation, "no class has a non-empty union");
  }
  double sum = 0.0;
  for (const auto& [c, v] : per_class) sum += v;
  return sum / static_cast<double>(per_class.size());
}

std::string percent(double v) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.1f", 100.0 * v);
  return buf.data();
}

template <typename Fn>
std::string render_rows(const std::map<int, double>& per_class,
                        const std::map<int, std::string>& class_names, Fn&& row,
                        const std::string& final_name) {
  const double miou = mean_of(per_class);
  std::string out;
  for (const auto& [c, v] : per_class) {
    const auto it = class_names.find(c);
    if (it == class_names.end()) {
      throw Error(Errc::MissingName, "no name for class " + std::to_string(c));
    }
    out += row(it->second, percent(v));
  }
  out += row(final_name, percent(miou));
  return out;
}

}  // namespace

MeanIou mean_iou(const ConfusionAccumulator& acc) {
  MeanIou result;
  for (int c = 0; c <= acc.num_classes(); ++c) {
    if (auto v = iou(acc, c)) result.per_class.emplace(c, *v);
  }
  result.miou = mean_of(result.per_class);
  return result;
}

std::map<int, std::string> default_class_names(int num_classes) {
  static const char* const kVoc[] = {
      "background", "aeroplane", "bicycle", "bird",  "boat",        "bottle", "bus",
      "car",        "cat",       "chair",   "cow",   "diningtable", "dog",    "horse",
      "motorbike",  "person",    "pottedplant", "sheep", "sofa",    "train",  "tvmonitor"};
  std::map<int, std::string> names;
  names.emplace(0, "background");
  for (int c = 1; c <= num_classes; ++c) {
    names.emplace(c, num_classes == 20 ? kVoc[c] : "class" + std::to_string(c));
  }
  return names;
}

std::string render_report(const std::map<int, double>& per_class,
                          const std::map<int, std::string>& class_names) {
  return render_rows(
      per_class, class_names,
      [](const std::string& name, const std::string& pct) { return name + " " + pct + "\n"; },
      "mIoU");
}

std::string render_key_values(const std::map<int, double>& per_class,
                              const std::map<int, std::string>& class_names) {
  return render_rows(
      per_class, class_names,
      [](const std::string& name, const std::string& pct) { return name + "=" + pct + "\n"; },
      "miou");
}

}  // namespace sgseg
