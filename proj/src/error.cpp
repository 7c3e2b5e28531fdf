#include "sgseg/error.hpp"

namespace sgseg {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::BadMagic: return "BadMagic";
    case Errc::TruncatedPayload: return "TruncatedPayload";
    case Errc::NonFiniteValue: return "NonFiniteValue";
    case Errc::UnsupportedRank: return "UnsupportedRank";
    case Errc::InvalidLabelCode: return "InvalidLabelCode";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::ChannelMismatch: return "ChannelMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::MissingCam: return "MissingCam";
    case Errc::OutOfBounds: return "OutOfBounds";
    case Errc::EmptyEvaluation: return "EmptyEvaluation";
    case Errc::MissingName: return "MissingName";
    case Errc::MalformedLine: return "MalformedLine";
    case Errc::DuplicateId: return "DuplicateId";
    case Errc::EmptyManifest: return "EmptyManifest";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::UnsupportedImage: return "UnsupportedImage";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace sgseg
