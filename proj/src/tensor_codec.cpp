#include "sgseg/tensor_codec.hpp"

#include <array>
#include <bit>
#include <fstream>
#include <iterator>
#include <string>

#include "sgseg/error.hpp"

namespace sgseg {

namespace {

constexpr std::array<std::uint8_t, 4> kMagic = {'S', 'G', 'T', '1'};

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::uint32_t u32() {
    if (remaining() < 4) {
      throw Error(Errc::TruncatedPayload, "header ends at byte " + std::to_string(bytes_.size()));
    }
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) {
      v |= static_cast<std::uint32_t>(bytes_[pos_ + i]) << (8 * i);
    }
    pos_ += 4;
    return v;
  }

  float f32() { return std::bit_cast<float>(u32()); }

  std::size_t remaining() const { return bytes_.size() - pos_; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) {
    out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
}

std::vector<std::uint8_t> encode(std::span<const std::uint32_t> dims, std::span<const float> values) {
  std::vector<std::uint8_t> out;
  out.reserve(8 + 4 * dims.size() + 4 * values.size());
  for (std::uint8_t b : kMagic) out.push_back(b);
  put_u32(out, static_cast<std::uint32_t>(dims.size()));
  for (std::uint32_t d : dims) put_u32(out, d);
  for (float v : values) put_u32(out, std::bit_cast<std::uint32_t>(v));
  return out;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Errc::Io, "cannot open " + path.string());
  }
  return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

Tensor decode_tensor(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kMagic.size()) {
    throw Error(Errc::TruncatedPayload, "file shorter than its magic");
  }
  if (!std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) {
    throw Error(Errc::BadMagic, "expected \"SGT1\"");
  }
  Reader reader(bytes.subspan(kMagic.size()));
  const std::uint32_t rank = reader.u32();
  if (rank != 2 && rank != 3) {
    throw Error(Errc::UnsupportedRank, "rank " + std::to_string(rank));
  }
  std::array<std::uint32_t, 3> dims{};
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < rank; ++i) {
    dims[i] = reader.u32();
    if (dims[i] > 0x7fffffffu) {
      throw Error(Errc::TruncatedPayload, "dimension " + std::to_string(dims[i]) + " too large");
    }
    count *= dims[i];
    if (count > reader.remaining()) {
      // Keeps the product bounded; the byte-count check below reports it.
      count = reader.remaining() + 1;
    }
  }
  if (count * 4 != reader.remaining()) {
    throw Error(Errc::TruncatedPayload, "expected " + std::to_string(count) + " floats, found " +
                                            std::to_string(reader.remaining()) + " payload bytes");
  }
  std::vector<float> values(count);
  for (float& v : values) v = reader.f32();

  if (rank == 3) {
    return ActivationStack(static_cast<int>(dims[0]), static_cast<int>(dims[1]),
                           static_cast<int>(dims[2]), std::move(values));
  }
  return ClassWeights(static_cast<int>(dims[0]), static_cast<int>(dims[1]), std::move(values));
}

std::vector<std::uint8_t> encode_tensor(const ActivationStack& stack) {
  const std::array<std::uint32_t, 3> dims = {static_cast<std::uint32_t>(stack.channels()),
                                             static_cast<std::uint32_t>(stack.height()),
                                             static_cast<std::uint32_t>(stack.width())};
  return encode(dims, stack.values());
}

std::vector<std::uint8_t> encode_tensor(const ClassWeights& weights) {
  const std::array<std::uint32_t, 2> dims = {static_cast<std::uint32_t>(weights.num_classes()),
                                             static_cast<std::uint32_t>(weights.channels())};
  return encode(dims, weights.values());
}

std::vector<std::uint8_t> encode_tensor(const Tensor& tensor) {
  return std::visit([](const auto& t) { return encode_tensor(t); }, tensor);
}

ActivationStack read_activation_stack(const std::filesystem::path& path) {
  Tensor t = decode_tensor(read_file(path));
  if (auto* stack = std::get_if<ActivationStack>(&t)) return std::move(*stack);
  throw Error(Errc::UnsupportedRank, path.string() + ": expected a rank-3 activation stack");
}

ClassWeights read_class_weights(const std::filesystem::path& path) {
  Tensor t = decode_tensor(read_file(path));
  if (auto* weights = std::get_if<ClassWeights>(&t)) return std::move(*weights);
  throw Error(Errc::UnsupportedRank, path.string() + ": expected a rank-2 weight matrix");
}

void write_tensor(const std::filesystem::path& path, const Tensor& tensor) {
  const auto bytes = encode_tensor(tensor);
  std::ofstream out(path, std::ios::binary);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw Error(Errc::Io, "cannot write " + path.string());
  }
}

}  // namespace sgseg
