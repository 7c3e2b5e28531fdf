#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <variant>
#include <vector>

#include "sgseg/types.hpp"

namespace sgseg {

// .sgt layout, all little-endian:
//   "SGT1" | u32 rank | rank x u32 dims | product(dims) x f32
// rank 3 is an ActivationStack (K, H, W); rank 2 is ClassWeights (C, K).

using Tensor = std::variant<ActivationStack, ClassWeights>;

Tensor decode_tensor(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> encode_tensor(const ActivationStack& stack);
std::vector<std::uint8_t> encode_tensor(const ClassWeights& weights);
std::vector<std::uint8_t> encode_tensor(const Tensor& tensor);

/// File helpers. The typed readers throw UnsupportedRank when the file holds
/// the other kind of tensor.
ActivationStack read_activation_stack(const std::filesystem::path& path);
ClassWeights read_class_weights(const std::filesystem::path& path);
void write_tensor(const std::filesystem::path& path, const Tensor& tensor);

}  // namespace sgseg
