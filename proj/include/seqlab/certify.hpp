#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "seqlab/coefficient_table.hpp"
#include "seqlab/modulus.hpp"
#include "seqlab/rational.hpp"
#include "seqlab/residue_table.hpp"
#include "seqlab/structure.hpp"

namespace seqlab {

// Residue domain of the base-element tuples (b_1, ..., b_j) mod m. Base
// elements are always odd and, when 4 | m, congruent to each other mod 4, so
// the domain is one family of per-coordinate values for odd m and m = 2 mod 4,
// and two families (shared class 1 mod 4 / 3 mod 4) when 4 | m.
struct AdmissibleTupleSpec {
  std::uint32_t m = 0;
  int j = 0;
  std::vector<std::vector<std::uint32_t>> families;  // values ascending
  mpz_class total_count;
};

AdmissibleTupleSpec admissible_tuples(Modulus m, int j);

struct SearchOptions {
  int threads = 0;               // 0 = library default
  std::uint64_t max_tuples = 0;  // leaf evaluations; 0 = unlimited
  double max_seconds = 0.0;      // wall clock; 0 = unlimited
  std::string checkpoint_path;   // resume/record at partition granularity
};

// A (x, m, j, e) record: e is the exact minimum, over all admissible base
// tuples, of the number of window-set elements congruent to x mod m. When a
// budget aborts the search, `certified` is false and e is only the best
// upper bound seen.
struct Certificate {
  std::uint32_t x = 0;
  std::uint32_t m = 0;
  int j = 0;
  std::uint64_t e = 0;
  std::uint64_t denominator = 0;  // 2^{j+1} - 2
  std::vector<std::uint32_t> witness;
  std::uint64_t tuples_examined = 0;
  double elapsed_seconds = 0.0;
  bool certified = false;
};

// Depth-first enumeration with shared-prefix reuse and branch pruning against
// the running minimum. Deterministic in e and witness (lexicographically
// smallest minimizer) regardless of thread count.
Certificate search_min_hits(std::uint32_t x, Modulus m, int j,
                            const SearchOptions& options = {});

// Independent oracle: flat lexicographic enumeration with explicit dot
// products through the coefficient table. Small instances only
// (total tuples x rows <= 1e8).
Certificate naive_min_hits(std::uint32_t x, Modulus m, int j);

// Exact e / (2^{j+1} - 2). Refuses partial certificates.
Rational density_bound(const Certificate& cert);

// Lower-bound curve (e/(2^{j+1}-2)) n - (3e/ln 2^j) ln n - e. Pre: n >= 2.
double bound_curve(const Certificate& cert, std::uint64_t n);

// Dot-product re-evaluation of a tuple, the route independent of the
// search's residue recurrence: rows of `table` reduced mod m against the
// tuple, counting values congruent to x.
std::uint64_t evaluate_tuple_hits(const CoefficientTable& table, Modulus m,
                                  std::uint32_t x,
                                  std::span<const std::uint32_t> tuple);

struct WindowRef {
  std::uint64_t k = 0;
  int w = 0;
};

// All (k, w) windows realized below n: w >= 1 with 2^{jw} <= n and
// ceil(n/2^{jw+1}) <= k <= floor(n/2^{jw}) - 1.
std::vector<WindowRef> enumerate_windows(std::uint64_t n, int j);

// The index runs {2^i k + 1 .. 2^i k + 2^i - 1} all land in [3, n] and are
// pairwise disjoint across every (i, k, w). Pre: n >= 8.
LemmaVerdict verify_window_disjoint(std::uint64_t n, int j);

// Every realized window below N has its base tuple inside the admissible
// domain and at least cert.e elements congruent to cert.x mod cert.m.
// Pre: cert certified; table modulus equals cert.m; N <= table limit.
LemmaVerdict empirical_window_check(const Certificate& cert,
                                    const ResidueTable& table, std::uint64_t N);

std::string certificate_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& text);

}  // namespace seqlab
