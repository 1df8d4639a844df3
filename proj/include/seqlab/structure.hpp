#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seqlab/residue_table.hpp"

namespace seqlab {

struct LemmaVerdict {
  std::string lemma_id;
  std::uint64_t range_checked = 0;  // [1, N] (or [0, N] for the quadruple families)
  bool pass = true;
  std::vector<std::uint64_t> counterexample;  // empty iff pass
};

// a_n parity equals the parity predicted from v2(n), for all n <= N.
// Pre: table modulus even, N <= table limit.
LemmaVerdict verify_parity_lemma(const ResidueTable& table, std::uint64_t N);

// a_{4n} vs a_n congruences at modulus `level` in {8, 16, 32}, split by the
// parity of n. Pre: level | table modulus, 4N <= table limit.
LemmaVerdict verify_quadrupling(const ResidueTable& table, std::uint64_t N, int level);

// {a_{8k+1}, a_{8k+3}, a_{8k+5}, a_{8k+7}} mod 8 covers every odd class once,
// for 0 <= k <= N. Strong form additionally pins the ordered tuple to the
// scaled pattern (t,3t,7t,5t) and to one of the two realized patterns
// (1,3,7,5) / (7,5,1,3). Pre: 8 | modulus, 8N+7 <= limit.
LemmaVerdict verify_odd_quadruples(const ResidueTable& table, std::uint64_t N, bool strong);

// {a_{16k+2}, a_{16k+6}, a_{16k+10}, a_{16k+14}} mod 8 is {2,2,6,6} with the
// sign chain r2 = r6 = -r10 = -r14, for 0 <= k <= N. Pre: 16N+14 <= limit.
LemmaVerdict verify_even_quadruples(const ResidueTable& table, std::uint64_t N);

// Scaled families: for 0 <= k <= N, 0 <= p <= max_power, the odd quadruple at
// indices 4^p(8k+c) keeps covering all odd classes once, and the even one at
// 4^p(16k+c) keeps the {2,2,6,6} profile. Pre: 4^max_power*(16N+14) <= limit.
LemmaVerdict verify_scaled_sets(const ResidueTable& table, std::uint64_t N, int max_power);

std::string verdict_json(const LemmaVerdict& v);

namespace detail {

constexpr std::uint64_t kNoViolation = ~std::uint64_t{0};

// Smallest i in [lo, hi] violating `ok`, scanned in parallel chunks; merge
// keeps the minimum so the result matches the serial scan.
template <class Pred>
std::uint64_t first_violation(std::uint64_t lo, std::uint64_t hi, Pred&& ok) {
  std::uint64_t bad = kNoViolation;
  const long long llo = static_cast<long long>(lo);
  const long long lhi = static_cast<long long>(hi);
#pragma omp parallel for schedule(static) reduction(min : bad)
  for (long long i = llo; i <= lhi; ++i) {
    if (!ok(static_cast<std::uint64_t>(i)))
      bad = std::min(bad, static_cast<std::uint64_t>(i));
  }
  return bad;
}

template <class Pred>
std::uint64_t first_violation_serial(std::uint64_t lo, std::uint64_t hi, Pred&& ok) {
  for (std::uint64_t i = lo; i <= hi; ++i)
    if (!ok(i)) return i;
  return kNoViolation;
}

}  // namespace detail

}  // namespace seqlab
