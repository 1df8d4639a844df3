#include "seqlab/coefficient_table.hpp"

#include "seqlab/error.hpp"

namespace seqlab {

CoefficientTable CoefficientTable::build(int j) {
  if (j < 1 || j > 24) fail(ErrorCode::invalid_argument, "coefficient table needs 1 <= j <= 24");
  const std::uint64_t rows = (std::uint64_t{2} << j) - 2 - static_cast<std::uint64_t>(j);
  CoefficientTable table(j);
  // Vector headers dominate for small j; coefficient limbs stay modest since
  // only ~i of the j entries of a level-i row are nonzero.
  table.reservation_.grow(rows * (static_cast<std::uint64_t>(j) * 24 + 48));
  table.rows_.resize(rows);
  for (int i = 1; i <= j; ++i) {
    const std::uint64_t level_rows = (std::uint64_t{1} << i) - 1;
    for (std::uint64_t t = 1; t <= level_rows; ++t) {
      std::vector<mpz_class>& row = table.rows_[row_index(i, t)];
      row.resize(static_cast<std::size_t>(j));
      if (t == 1) {
        row[static_cast<std::size_t>(i - 1)] = 1;
        continue;
      }
      const std::vector<mpz_class>& left = table.rows_[row_index(i, t - 1)];
      const std::vector<mpz_class>& up = table.rows_[row_index(i - 1, t >> 1)];
      for (int s = 0; s < j; ++s) row[static_cast<std::size_t>(s)] = left[s] + up[s];
    }
  }
  return table;
}

std::vector<std::uint32_t> CoefficientTable::reduce(Modulus m) const {
  std::vector<std::uint32_t> reduced(rows_.size() * static_cast<std::size_t>(j_));
  mpz_class tmp;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (int s = 0; s < j_; ++s) {
      tmp = rows_[r][static_cast<std::size_t>(s)] % m.value();
      reduced[r * static_cast<std::size_t>(j_) + static_cast<std::size_t>(s)] =
          static_cast<std::uint32_t>(tmp.get_ui());
    }
  }
  return reduced;
}

}  // namespace seqlab
