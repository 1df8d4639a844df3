#include "seqlab/exact_prefix.hpp"

#include "seqlab/error.hpp"

namespace seqlab {

ExactPrefix ExactPrefix::compute(std::uint64_t limit, std::uint64_t cap) {
  if (limit < 1) fail(ErrorCode::invalid_argument, "exact prefix limit must be >= 1");
  if (limit > cap)
    fail(ErrorCode::capacity, "exact prefix limit " + std::to_string(limit) +
                                  " exceeds the cap " + std::to_string(cap));
  ExactPrefix p;
  // mpz_class plus a couple of limbs on the heap; 64 bytes/entry is a safe over-estimate.
  p.reservation_.grow((limit + 1) * 64);
  p.values_.resize(limit + 1);
  p.values_[1] = 1;
  for (std::uint64_t k = 2; k <= limit; ++k)
    p.values_[k] = p.values_[k - 1] + p.values_[k >> 1];
  p.limit_ = limit;
  return p;
}

}  // namespace seqlab
