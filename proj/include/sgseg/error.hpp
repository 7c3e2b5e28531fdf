#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sgseg {

enum class Errc {
  BadMagic,
  TruncatedPayload,
  NonFiniteValue,
  UnsupportedRank,
  InvalidLabelCode,
  IndexOutOfRange,
  ChannelMismatch,
  DimensionMismatch,
  MissingCam,
  OutOfBounds,
  EmptyEvaluation,
  MissingName,
  MalformedLine,
  DuplicateId,
  EmptyManifest,
  InvalidArgument,
  UnsupportedImage,
  Io,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the Errc kinds so
/// callers (tests, the CLI exit-code mapping) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace sgseg
