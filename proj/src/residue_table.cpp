#include "seqlab/residue_table.hpp"

#include <utility>

#include "seqlab/error.hpp"

namespace seqlab {

namespace {

template <typename T>
void run_recurrence(std::vector<T>& r, std::uint32_t m, std::uint64_t from,
                    std::uint64_t to) {
  for (std::uint64_t k = from; k <= to; ++k) {
    std::uint32_t v = static_cast<std::uint32_t>(r[k - 1]) +
                      static_cast<std::uint32_t>(r[k >> 1]);
    if (v >= m) v -= m;
    r[k] = static_cast<T>(v);
  }
}

}  // namespace

ResidueTable ResidueTable::stream(Modulus m, std::uint64_t limit) {
  if (limit < 1) fail(ErrorCode::invalid_argument, "residue table limit must be >= 1");
  ResidueTable t(m);
  t.extend(limit);
  return t;
}

ResidueTable ResidueTable::adopt(Modulus m, std::vector<std::uint8_t> prefix) {
  if (!m.narrow() || prefix.empty())
    fail(ErrorCode::invalid_argument, "byte prefix requires m <= 256 and size >= 1");
  ResidueTable t(m);
  t.limit_ = prefix.size();
  t.reservation_.grow(prefix.size() + 1);
  t.narrow_.resize(prefix.size() + 1);
  std::copy(prefix.begin(), prefix.end(), t.narrow_.begin() + 1);
  return t;
}

ResidueTable ResidueTable::adopt(Modulus m, std::vector<std::uint16_t> prefix) {
  if (m.narrow() || prefix.empty())
    fail(ErrorCode::invalid_argument, "word prefix requires m > 256 and size >= 1");
  ResidueTable t(m);
  t.limit_ = prefix.size();
  t.reservation_.grow(2 * (prefix.size() + 1));
  t.wide_.resize(prefix.size() + 1);
  std::copy(prefix.begin(), prefix.end(), t.wide_.begin() + 1);
  return t;
}

void ResidueTable::extend(std::uint64_t new_limit) {
  if (new_limit <= limit_) return;
  const std::uint32_t m = mod_.value();
  const std::uint64_t extra = new_limit - limit_;
  if (mod_.narrow()) {
    reservation_.grow(extra + (limit_ == 0 ? 1 : 0));
    narrow_.resize(new_limit + 1);
    if (limit_ == 0) {
      narrow_[1] = static_cast<std::uint8_t>(1 % m);
      limit_ = 1;
    }
    run_recurrence(narrow_, m, limit_ + 1, new_limit);
  } else {
    reservation_.grow(2 * (extra + (limit_ == 0 ? 1 : 0)));
    wide_.resize(new_limit + 1);
    if (limit_ == 0) {
      wide_[1] = 1;
      limit_ = 1;
    }
    run_recurrence(wide_, m, limit_ + 1, new_limit);
  }
  limit_ = new_limit;
}

}  // namespace seqlab
