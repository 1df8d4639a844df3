#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "seqlab/residue_table.hpp"

namespace seqlab {

// Residue-pass checkpoint, bit-exact layout:
//   magic "SQLB" | u32 LE format version (1) | u32 LE modulus |
//   u64 LE reached index N | payload | u64 LE FNV-1a over payload
// Payload is N bytes for m <= 256 and 2N little-endian bytes otherwise.
inline constexpr std::uint32_t kCheckpointVersion = 1;

std::uint64_t fnv1a(std::span<const std::uint8_t> bytes);

void write_residue_checkpoint(const std::string& path, const ResidueTable& table);

// Loads and verifies; resuming from the result is bit-identical to an
// uninterrupted run.
ResidueTable read_residue_checkpoint(const std::string& path);

}  // namespace seqlab
