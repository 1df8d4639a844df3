#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seqlab/rational.hpp"
#include "seqlab/residue_table.hpp"

namespace seqlab {

struct ClassStat {
  std::uint32_t x = 0;
  std::uint64_t count = 0;
  double empirical = 0.0;  // count / N
  std::optional<Rational> predicted;  // absent when 32 | m
  double deviation = 0.0;             // empirical - predicted
  double deviation_rel = 0.0;         // deviation / predicted, 0 where predicted is 0
};

struct CensusReport {
  std::uint32_t m = 0;
  std::uint64_t limit = 0;
  std::vector<ClassStat> classes;  // one per residue class, x ascending
  double worst_abs_deviation = 0.0;
};

// Conjectured density of {n : a_n = x (mod m)}. Exact by cases on m mod 4;
// throws Error(unsupported_modulus) when 32 | m, where no prediction is made.
Rational predicted_density(std::uint32_t x, Modulus m);

// Count S_{x,m}(N) for every class x and attach predictions where available.
CensusReport run_census(Modulus m, std::uint64_t limit);
CensusReport census_from_table(const ResidueTable& table, std::uint64_t limit);

struct ScanResult {
  std::vector<CensusReport> reports;   // sorted by worst |deviation|, descending
  std::vector<std::uint32_t> skipped;  // moduli divisible by 32
};

// One census per modulus in [2, max_m], moduli processed independently (in
// parallel); results are deterministic regardless of thread count.
ScanResult deviation_scan(std::uint32_t max_m, std::uint64_t limit);
ScanResult deviation_scan_serial(std::uint32_t max_m, std::uint64_t limit);

struct BoundCheckResult {
  bool pass = true;
  std::uint64_t n = 0;  // first violating index when !pass
  std::uint32_t x = 0;  // violating class
};

// Checks S_{x,8}(n) > n/6 - 2 ln n - 11 for every n <= N and every class
// x in {1,2,3,5,6,7}, maintaining cumulative counts in one pass.
BoundCheckResult mod8_bound_check(std::uint64_t limit);
BoundCheckResult mod8_bound_check_from_table(const ResidueTable& table,
                                             std::uint64_t limit);

// CSV rows `m,x,count,N,empirical,predicted,deviation`, one per (m,x).
std::string census_csv(const std::vector<CensusReport>& reports);
inline std::string census_csv(const CensusReport& report) {
  return census_csv(std::vector<CensusReport>{report});
}

}  // namespace seqlab
