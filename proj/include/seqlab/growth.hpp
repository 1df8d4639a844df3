#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seqlab/exact_prefix.hpp"
#include "seqlab/structure.hpp"

namespace seqlab {

// Growth exponent f(n) = c1 ln n - 2 c1 ln ln n + c2 with c1 = 1/(2 ln 2)
// (~0.721) and c2 = 1/2 + (1 + ln ln 2)/ln 2 (~1.414).
namespace growth_params {
long double c1();
long double c2();
long double f(long double n);
}  // namespace growth_params

enum class GrowthVerdict { pass, fail, indeterminate };

struct GrowthRecord {
  std::uint64_t n = 0;
  double log_a_n = 0.0;   // ln a_n, certified relative error well under 2^-40
  double threshold = 0.0; // f(n) ln n
  double margin = 0.0;    // log_a_n - threshold
  GrowthVerdict verdict = GrowthVerdict::indeterminate;
};

// a_n > n^{f(n)} decided per n by comparing ln a_n against f(n) ln n.
// Margins inside the certified error bound are re-evaluated at doubled
// precision until resolved; `indeterminate` survives only if 4096 bits does
// not separate the sides, which never happens at desk scale.
// Pre: 2 <= from <= to <= prefix.limit().
std::vector<GrowthRecord> growth_lower_check(const ExactPrefix& prefix,
                                             std::uint64_t from, std::uint64_t to);
std::vector<GrowthRecord> growth_lower_check_serial(const ExactPrefix& prefix,
                                                    std::uint64_t from,
                                                    std::uint64_t to);

struct UpperBoundProbe {
  double epsilon = 0.0;
  std::uint64_t limit = 0;
  double log_c_observed = 0.0;  // max over n of ln a_n - (f(n)+eps) ln n
  std::uint64_t argmax_n = 0;
  bool max_in_last_decade = false;  // the max was still moving past limit/10
};

// Running max of a_n / n^{f(n)+eps} in the log domain. Evidence for the
// epsilon upper bound, never a proof.
UpperBoundProbe upper_probe(const ExactPrefix& prefix, double epsilon,
                            std::uint64_t limit);

// The ten auxiliary inequalities behind the growth theorem, checked with
// 1e-9 relative slack: integer-indexed ones on every integer of their domain
// up to 1e5, real ones on log-spaced grids up to 1e6.
std::vector<LemmaVerdict> analytic_lemma_suite(int grid_per_decade);

std::string growth_csv(const std::vector<GrowthRecord>& records);
const char* verdict_name(GrowthVerdict v);

}  // namespace seqlab
