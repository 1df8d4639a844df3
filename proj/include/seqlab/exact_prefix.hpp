#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "seqlab/budget.hpp"

namespace seqlab {

// Exact values a_1..a_limit as arbitrary-precision naturals. a_n has bit
// length Theta(log^2 n), so even the default cap stays around 120 bits per
// entry; the cap guards against accidental blowups, not real cost.
class ExactPrefix {
 public:
  static constexpr std::uint64_t kDefaultCap = 200000;

  static ExactPrefix compute(std::uint64_t limit,
                             std::uint64_t cap = kDefaultCap);

  std::uint64_t limit() const { return limit_; }

  // 1-based, k in [1, limit].
  const mpz_class& value(std::uint64_t k) const { return values_[k]; }

 private:
  ExactPrefix() = default;

  std::uint64_t limit_ = 0;
  std::vector<mpz_class> values_;
  budget::Reservation reservation_;
};

inline ExactPrefix exact_prefix(std::uint64_t limit,
                                std::uint64_t cap = ExactPrefix::kDefaultCap) {
  return ExactPrefix::compute(limit, cap);
}

}  // namespace seqlab
