// Writes the synthetic squares dataset (images, saliency, activation
// tensors, ground truth and manifest.csv) into a directory.

#include <CLI11.hpp>

#include <iostream>

#include "fixture.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Generate the synthetic squares dataset"};
  std::string out_dir;
  std::uint64_t seed = 2024;
  int count = 20;
  app.add_option("out", out_dir, "Output directory")->required();
  app.add_option("--seed", seed, "Generator seed")->capture_default_str();
  app.add_option("--count", count, "Number of images")->capture_default_str()->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  try {
    const auto fixture = sgseg::testing::make_synthetic_fixture(seed, count);
    std::cout << sgseg::testing::write_fixture(fixture, out_dir).string() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
