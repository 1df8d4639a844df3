#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "seqlab/budget.hpp"
#include "seqlab/modulus.hpp"

namespace seqlab {

// All values a_k mod m for 1 <= k <= limit, stored one byte per entry when
// m <= 256 and two bytes otherwise. Entry 0 is unused so every interface
// speaks 1-based indices. Immutable after construction (extend() excepted)
// and safe to read from many threads.
class ResidueTable {
 public:
  // Single sequential pass: r[k] = (r[k-1] + r[k/2]) mod m.
  static ResidueTable stream(Modulus m, std::uint64_t limit);

  // Rebuild from a checkpointed prefix (entries 1..limit, 0-based buffer).
  static ResidueTable adopt(Modulus m, std::vector<std::uint8_t> prefix);
  static ResidueTable adopt(Modulus m, std::vector<std::uint16_t> prefix);

  // Continue the recurrence up to new_limit; no-op when already past it.
  void extend(std::uint64_t new_limit);

  Modulus modulus() const { return mod_; }
  std::uint64_t limit() const { return limit_; }

  // 1-based access, k in [1, limit].
  std::uint32_t operator[](std::uint64_t k) const {
    return narrow_.empty() ? wide_[k] : narrow_[k];
  }

  bool narrow() const { return !narrow_.empty(); }

  // Raw 1-based views for hot loops; index 0 is a dead slot.
  std::span<const std::uint8_t> narrow_data() const { return narrow_; }
  std::span<const std::uint16_t> wide_data() const { return wide_; }

 private:
  explicit ResidueTable(Modulus m) : mod_(m) {}

  Modulus mod_;
  std::uint64_t limit_ = 0;
  std::vector<std::uint8_t> narrow_;
  std::vector<std::uint16_t> wide_;
  budget::Reservation reservation_;
};

inline ResidueTable residue_stream(Modulus m, std::uint64_t limit) {
  return ResidueTable::stream(m, limit);
}

}  // namespace seqlab
