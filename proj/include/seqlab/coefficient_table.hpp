#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

#include "seqlab/budget.hpp"
#include "seqlab/modulus.hpp"

namespace seqlab {

// Integer coefficients expressing every window-set element as a combination
// of the base elements b_s = a_{2^s k + 1}: row (i, t) holds the vector c
// with a_{2^i k + t} = sum_s c[s] * b_s. The vectors depend only on j, never
// on k or the window, and satisfy c(i,1) = unit_i and
// c(i,t) = c(i,t-1) + c(i-1, floor(t/2)).
//
// Coefficients grow like the sequence itself (past j = 13 they overflow 64
// bits), so rows are exact big integers; hot paths use reduce(m).
class CoefficientTable {
 public:
  static CoefficientTable build(int j);

  int j() const { return j_; }
  std::uint64_t row_count() const { return rows_.size(); }

  // Rows ordered level-major: all (1,t), then (2,t), ... Flat index of (i,t).
  static std::uint64_t row_index(int i, std::uint64_t t) {
    return ((std::uint64_t{1} << i) - static_cast<std::uint64_t>(i) - 1) + (t - 1);
  }

  std::span<const mpz_class> row(int i, std::uint64_t t) const {
    return rows_[row_index(i, t)];
  }
  std::span<const mpz_class> row(std::uint64_t flat) const { return rows_[flat]; }

  // All rows with coefficients reduced mod m, flattened row-major
  // (row_count() x j). Feeds the dot-product evaluation paths.
  std::vector<std::uint32_t> reduce(Modulus m) const;

 private:
  explicit CoefficientTable(int j) : j_(j) {}

  int j_;
  std::vector<std::vector<mpz_class>> rows_;
  budget::Reservation reservation_;
};

}  // namespace seqlab
