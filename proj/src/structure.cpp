#include "seqlab/structure.hpp"

#include <array>
#include <sstream>

#include "seqlab/error.hpp"

namespace seqlab {

namespace {

using detail::first_violation;
using detail::kNoViolation;

void require(bool cond, const char* what) {
  if (!cond) fail(ErrorCode::invalid_argument, what);
}

LemmaVerdict make_verdict(std::string id, std::uint64_t N, std::uint64_t bad_index,
                          std::vector<std::uint64_t> counterexample) {
  LemmaVerdict v;
  v.lemma_id = std::move(id);
  v.range_checked = N;
  v.pass = (bad_index == kNoViolation);
  if (!v.pass) v.counterexample = std::move(counterexample);
  return v;
}

}  // namespace

LemmaVerdict verify_parity_lemma(const ResidueTable& table, std::uint64_t N) {
  require(table.modulus().value() % 2 == 0, "parity lemma needs an even modulus");
  require(N >= 1 && N <= table.limit(), "parity lemma range exceeds table");
  std::uint64_t bad = first_violation(1, N, [&](std::uint64_t n) {
    return (table[n] & 1u) == parity_predict(n);
  });
  return make_verdict("parity", N, bad, {bad});
}

LemmaVerdict verify_quadrupling(const ResidueTable& table, std::uint64_t N, int level) {
  require(level == 8 || level == 16 || level == 32, "quadrupling level must be 8, 16 or 32");
  require(table.modulus().value() % static_cast<std::uint32_t>(level) == 0,
          "table modulus must be divisible by the quadrupling level");
  require(N >= 1 && 4 * N <= table.limit(), "quadrupling range exceeds table");
  const std::uint32_t mask = static_cast<std::uint32_t>(level) - 1;
  std::uint64_t bad = first_violation(1, N, [&](std::uint64_t n) {
    const std::uint32_t a4n = table[4 * n] & mask;
    const std::uint32_t an = table[n] & mask;
    std::uint32_t expect;
    if (n & 1) {
      // odd n: a_{4n} = a_n + 4 (mod 8), sharpening to 5*a_n at 16 and 32
      expect = (level == 8) ? (an + 4) & mask : (5 * an) & mask;
    } else {
      // even n: a_{4n} = a_n (mod 16), sharpening to a_n + 8n (mod 32)
      expect = (level == 32) ? (an + 8 * (n & 3)) & mask : an;
    }
    return a4n == expect;
  });
  return make_verdict("quadrupling-" + std::to_string(level), N, bad, {bad});
}

LemmaVerdict verify_odd_quadruples(const ResidueTable& table, std::uint64_t N, bool strong) {
  require(table.modulus().value() % 8 == 0, "odd quadruples need 8 | m");
  require(8 * N + 7 <= table.limit(), "odd quadruple range exceeds table");
  std::uint64_t bad = first_violation(0, N, [&](std::uint64_t k) {
    const std::uint32_t r1 = table[8 * k + 1] & 7u;
    const std::uint32_t r3 = table[8 * k + 3] & 7u;
    const std::uint32_t r5 = table[8 * k + 5] & 7u;
    const std::uint32_t r7 = table[8 * k + 7] & 7u;
    const std::uint32_t mask = (1u << r1) | (1u << r3) | (1u << r5) | (1u << r7);
    if (mask != 0xAAu) return false;  // every odd class exactly once
    if (!strong) return true;
    // the ordered tuple is (t, 3t, 7t, 5t) mod 8 ...
    if (r3 != (3 * r1) % 8 || r5 != (7 * r1) % 8 || r7 != (5 * r1) % 8) return false;
    // ... and only the t = 1 and t = 7 patterns occur
    return r1 == 1 || r1 == 7;
  });
  return make_verdict(strong ? "odd-quadruples-strong" : "odd-quadruples", N, bad, {bad});
}

LemmaVerdict verify_even_quadruples(const ResidueTable& table, std::uint64_t N) {
  require(table.modulus().value() % 8 == 0, "even quadruples need 8 | m");
  require(16 * N + 14 <= table.limit(), "even quadruple range exceeds table");
  std::uint64_t bad = first_violation(0, N, [&](std::uint64_t k) {
    const std::uint32_t r2 = table[16 * k + 2] & 7u;
    const std::uint32_t r6 = table[16 * k + 6] & 7u;
    const std::uint32_t r10 = table[16 * k + 10] & 7u;
    const std::uint32_t r14 = table[16 * k + 14] & 7u;
    if (r2 != 2 && r2 != 6) return false;
    // sign chain r2 = r6 = -r10 = -r14 forces the multiset {2,2,6,6}
    return r6 == r2 && r10 == 8 - r2 && r14 == r10;
  });
  return make_verdict("even-quadruples", N, bad, {bad});
}

LemmaVerdict verify_scaled_sets(const ResidueTable& table, std::uint64_t N, int max_power) {
  require(table.modulus().value() % 8 == 0, "scaled sets need 8 | m");
  require(max_power >= 0 && max_power < 30, "max_power out of range");
  std::uint64_t scale = 1;
  for (int p = 0; p < max_power; ++p) scale *= 4;
  require(scale * (16 * N + 14) <= table.limit(), "scaled-set range exceeds table");

  auto check_k = [&](std::uint64_t k, int p) {
    std::uint64_t s = 1;
    for (int q = 0; q < p; ++q) s *= 4;
    std::uint32_t odd_mask = 0;
    for (std::uint32_t c : {1u, 3u, 5u, 7u}) odd_mask |= 1u << (table[s * (8 * k + c)] & 7u);
    if (odd_mask != 0xAAu) return false;
    int twos = 0, sixes = 0;
    for (std::uint32_t c : {2u, 6u, 10u, 14u}) {
      const std::uint32_t r = table[s * (16 * k + c)] & 7u;
      if (r == 2)
        ++twos;
      else if (r == 6)
        ++sixes;
    }
    return twos == 2 && sixes == 2;
  };

  std::uint64_t bad = first_violation(0, N, [&](std::uint64_t k) {
    for (int p = 0; p <= max_power; ++p)
      if (!check_k(k, p)) return false;
    return true;
  });
  std::vector<std::uint64_t> counterexample;
  if (bad != kNoViolation) {
    for (int p = 0; p <= max_power; ++p) {
      if (!check_k(bad, p)) {
        counterexample = {bad, static_cast<std::uint64_t>(p)};
        break;
      }
    }
  }
  return make_verdict("scaled-sets", N, bad, std::move(counterexample));
}

std::string verdict_json(const LemmaVerdict& v) {
  std::ostringstream out;
  out << "{\"lemma_id\":\"" << v.lemma_id << "\",\"N\":" << v.range_checked
      << ",\"status\":\"" << (v.pass ? "pass" : "fail") << "\",\"counterexample\":";
  if (v.pass) {
    out << "null";
  } else {
    out << '[';
    for (std::size_t i = 0; i < v.counterexample.size(); ++i) {
      if (i) out << ',';
      out << v.counterexample[i];
    }
    out << ']';
  }
  out << '}';
  return out.str();
}

}  // namespace seqlab
