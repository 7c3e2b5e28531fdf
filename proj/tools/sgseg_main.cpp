// sgseg: seed, grow and evaluate pixel-level pseudo-labels from image-level
// class labels, activation tensors and saliency maps.
//
// Exit codes: 0 success, 1 fatal I/O or format error, 2 evaluation impossible.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "sgseg/error.hpp"
#include "sgseg/eval.hpp"
#include "sgseg/manifest.hpp"
#include "sgseg/pipeline.hpp"

namespace {

constexpr int kExitFatal = 1;
constexpr int kExitEmptyEvaluation = 2;

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw sgseg::Error(sgseg::Errc::Io, "cannot write " + path.string());
}

int run_stage(const std::string& manifest, const sgseg::PipelineOptions& options,
              const std::string& kv_path) {
  const auto entries = sgseg::read_manifest(manifest);
  const sgseg::PipelineSummary summary = sgseg::run_pipeline(entries, options);
  for (const auto& e : summary.entries) {
    if (e.error) std::cerr << "warning: " << e.image_id << " skipped: " << *e.error << "\n";
  }
  const std::string text = summary.render(options.cfg.num_classes);
  write_text(options.out_dir / "summary.txt", text);
  std::cout << text;
  if (!kv_path.empty() && summary.evaluation) {
    write_text(kv_path, sgseg::render_key_values(summary.evaluation->per_class,
                                                 sgseg::default_class_names(options.cfg.num_classes)));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Saliency-guided seeded region growing for weak pseudo-labels"};
  app.require_subcommand(1);

  std::string manifest;
  std::string out_dir;
  std::string pred_dir;
  std::string report_path;
  std::string kv_path;
  sgseg::GrowConfig cfg;
  bool strict = false;
  int jobs = 1;

  const auto add_common = [&](CLI::App* cmd, bool with_out) {
    cmd->add_option("--manifest", manifest, "Manifest file")->required()->check(CLI::ExistingFile);
    if (with_out) cmd->add_option("--out", out_dir, "Output directory")->required();
    cmd->add_option("--num-classes", cfg.num_classes, "Object class count (background excluded)")
        ->capture_default_str()
        ->check(CLI::Range(1, 254));
  };
  const auto add_seed_flags = [&](CLI::App* cmd) {
    cmd->add_option("--seed-fraction", cfg.seed_fraction, "Per-class seed fraction of pixels")
        ->capture_default_str();
    cmd->add_option("--bg-thresh", cfg.bg_saliency_threshold,
                    "Saliency below which unseeded pixels become background")
        ->capture_default_str();
  };
  const auto add_grow_flags = [&](CLI::App* cmd) {
    cmd->add_option("--theta", cfg.theta, "Growing threshold (strict)")->capture_default_str();
    cmd->add_option("--connectivity", cfg.connectivity, "Neighbourhood: 4 or 8")
        ->capture_default_str()
        ->check(CLI::IsMember({4, 8}));
  };

  CLI::App* seed = app.add_subcommand("seed", "Emit seed maps only");
  add_common(seed, true);
  add_seed_flags(seed);

  CLI::App* grow = app.add_subcommand("grow", "Emit seeds and grown label maps");
  add_common(grow, true);
  add_seed_flags(grow);
  add_grow_flags(grow);

  CLI::App* eval = app.add_subcommand("eval", "Score <id>_labels.png predictions against ground truth");
  add_common(eval, false);
  eval->add_option("--pred-dir", pred_dir, "Directory holding <id>_labels.png")
      ->required()
      ->check(CLI::ExistingDirectory);
  eval->add_option("--report", report_path, "Also write the text report here");
  eval->add_option("--kv", kv_path, "Write a key=value listing here");

  CLI::App* pipeline = app.add_subcommand("pipeline", "Seed, grow and evaluate");
  add_common(pipeline, true);
  add_seed_flags(pipeline);
  add_grow_flags(pipeline);
  pipeline->add_flag("--strict", strict, "Abort on the first failing entry");
  pipeline->add_option("--jobs", jobs, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  pipeline->add_option("--kv", kv_path, "Write a key=value evaluation listing here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitFatal;
  }

  try {
    sgseg::PipelineOptions options;
    options.cfg = cfg;
    options.out_dir = out_dir;
    options.strict = strict;
    options.jobs = jobs;

    if (*seed) {
      options.stage = sgseg::Stage::Seed;
      return run_stage(manifest, options, {});
    }
    if (*grow) {
      options.stage = sgseg::Stage::Grow;
      return run_stage(manifest, options, {});
    }
    if (*pipeline) {
      options.stage = sgseg::Stage::Full;
      return run_stage(manifest, options, kv_path);
    }

    const auto entries = sgseg::read_manifest(manifest);
    const sgseg::PipelineSummary summary =
        sgseg::evaluate_predictions(entries, pred_dir, cfg.num_classes);
    const auto names = sgseg::default_class_names(cfg.num_classes);
    const std::string report = sgseg::render_report(summary.evaluation->per_class, names);
    std::cout << report;
    if (!report_path.empty()) write_text(report_path, report);
    if (!kv_path.empty()) {
      write_text(kv_path, sgseg::render_key_values(summary.evaluation->per_class, names));
    }
    return 0;
  } catch (const sgseg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == sgseg::Errc::EmptyEvaluation ? kExitEmptyEvaluation : kExitFatal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFatal;
  }
}
