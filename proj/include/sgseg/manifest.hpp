#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgseg/cam.hpp"

namespace sgseg {

struct ManifestEntry {
  std::string image_id;
  std::filesystem::path image_path;
  std::filesystem::path saliency_path;
  std::filesystem::path activations_path;
  std::filesystem::path weights_path;
  std::optional<std::filesystem::path> gt_path;
  ImageLabels present_classes;
};

/// One record per line:
///   image_id,image_path,saliency_path,activations_path,weights_path,gt_path,classes
/// `classes` is a ';'-separated list of class codes and may be empty, as may
/// gt_path. Blank lines and lines starting with '#' are skipped. Throws
/// MalformedLine (message carries the 1-based line number), DuplicateId,
/// EmptyManifest.
std::vector<ManifestEntry> parse_manifest(std::string_view text);

/// Reads and parses a manifest file; relative paths are resolved against the
/// manifest's own directory.
std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path);

}  // namespace sgseg
