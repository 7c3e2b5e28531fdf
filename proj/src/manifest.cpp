#include "sgseg/manifest.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "sgseg/error.hpp"

namespace sgseg {

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = s.find(sep, start);
    if (end == std::string_view::npos) {
      parts.push_back(trim(s.substr(start)));
      return parts;
    }
    parts.push_back(trim(s.substr(start, end - start)));
    start = end + 1;
  }
}

[[noreturn]] void malformed(std::size_t line_no, const std::string& why) {
  throw Error(Errc::MalformedLine, "line " + std::to_string(line_no) + ": " + why);
}

ImageLabels parse_classes(std::string_view field, std::size_t line_no) {
  std::vector<int> classes;
  if (!field.empty()) {
    for (std::string_view token : split(field, ';')) {
      int value = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
        malformed(line_no, "bad class index \"" + std::string(token) + "\"");
      }
      classes.push_back(value);
    }
  }
  try {
    return ImageLabels(std::move(classes));
  } catch (const Error& e) {
    malformed(line_no, e.what());
  }
}

}  // namespace

std::vector<ManifestEntry> parse_manifest(std::string_view text) {
  std::vector<ManifestEntry> entries;
  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const auto fields = split(line, ',');
    if (fields.size() != 7) {
      malformed(line_no, "expected 7 comma-separated fields, found " + std::to_string(fields.size()));
    }
    static const char* const kRequired[] = {"image_id", "image_path", "saliency_path",
                                            "activations_path", "weights_path"};
    for (std::size_t i = 0; i < 5; ++i) {
      if (fields[i].empty()) malformed(line_no, std::string("empty ") + kRequired[i]);
    }

    ManifestEntry entry;
    entry.image_id = std::string(fields[0]);
    entry.image_path = std::string(fields[1]);
    entry.saliency_path = std::string(fields[2]);
    entry.activations_path = std::string(fields[3]);
    entry.weights_path = std::string(fields[4]);
    if (!fields[5].empty()) entry.gt_path = std::string(fields[5]);
    entry.present_classes = parse_classes(fields[6], line_no);

    if (!seen.insert(entry.image_id).second) {
      throw Error(Errc::DuplicateId, "line " + std::to_string(line_no) + ": image_id \"" +
                                         entry.image_id + "\" already used");
    }
    entries.push_back(std::move(entry));
  }
  if (entries.empty()) {
    throw Error(Errc::EmptyManifest, "manifest has no records");
  }
  return entries;
}

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::Io, "cannot open " + path.string());
  }
  std::ostringstream text;
  text << in.rdbuf();
  auto entries = parse_manifest(text.str());

  const std::filesystem::path base = path.parent_path();
  const auto resolve = [&](std::filesystem::path& p) {
    if (p.is_relative()) p = base / p;
  };
  for (ManifestEntry& e : entries) {
    resolve(e.image_path);
    resolve(e.saliency_path);
    resolve(e.activations_path);
    resolve(e.weights_path);
    if (e.gt_path) resolve(*e.gt_path);
  }
  return entries;
}

}  // namespace sgseg
