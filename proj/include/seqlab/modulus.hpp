#pragma once

#include <bit>
#include <cassert>
#include <cstdint>

#include "seqlab/error.hpp"

namespace seqlab {

// Modulus together with its 2-adic split m = 2^two_exponent * odd_part.
class Modulus {
 public:
  static constexpr std::uint32_t kMax = 65536;

  static Modulus of(std::uint32_t m) {
    if (m < 2) fail(ErrorCode::invalid_argument, "modulus must be >= 2");
    if (m > kMax)
      fail(ErrorCode::invalid_argument,
           "modulus " + std::to_string(m) + " exceeds the supported maximum " +
               std::to_string(kMax));
    std::uint32_t k = static_cast<std::uint32_t>(std::countr_zero(m));
    return Modulus(m, m >> k, k);
  }

  std::uint32_t value() const { return m_; }
  std::uint32_t odd_part() const { return odd_; }
  std::uint32_t two_exponent() const { return two_exp_; }

  // One byte per residue suffices below this; two bytes otherwise.
  bool narrow() const { return m_ <= 256; }

  friend bool operator==(const Modulus& a, const Modulus& b) {
    return a.m_ == b.m_;
  }

 private:
  Modulus(std::uint32_t m, std::uint32_t odd, std::uint32_t two_exp)
      : m_(m), odd_(odd), two_exp_(two_exp) {}

  std::uint32_t m_;
  std::uint32_t odd_;
  std::uint32_t two_exp_;
};

// Exponent of the largest power of two dividing n. Pre: n >= 1.
inline std::uint32_t two_adic_valuation(std::uint64_t n) {
  assert(n >= 1);
  return static_cast<std::uint32_t>(std::countr_zero(n));
}

// a_n mod 2 without touching the sequence: the parity depends only on the
// parity of the 2-adic valuation of n. Returns 1 when a_n is odd.
inline std::uint32_t parity_predict(std::uint64_t n) {
  return (two_adic_valuation(n) + 1u) & 1u;
}

}  // namespace seqlab
