#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seqlab/error.hpp"
#include "seqlab/structure.hpp"

using namespace seqlab;

namespace {

const ResidueTable& table32() {
  static ResidueTable t = residue_stream(Modulus::of(32), 1100000);
  return t;
}

}  // namespace

TEST_CASE("parity lemma") {
  CHECK(verify_parity_lemma(table32(), 1).pass);
  CHECK(verify_parity_lemma(table32(), 10).pass);
  const LemmaVerdict v = verify_parity_lemma(table32(), 1000000);
  CHECK(v.pass);
  CHECK(v.counterexample.empty());
}

TEST_CASE("quadrupling congruences at all levels") {
  // a_4 = 5 = a_1 + 4 (mod 8); a_8 = 18 = a_2 + 16 (mod 32); a_12 = 47 = 5 a_3 (mod 32)
  for (int level : {8, 16, 32}) {
    const LemmaVerdict v = verify_quadrupling(table32(), 250000, level);
    CHECK(v.pass);
    CHECK(v.lemma_id == "quadrupling-" + std::to_string(level));
  }
}

TEST_CASE("level consistency: 32 implies 16 implies 8") {
  const bool p32 = verify_quadrupling(table32(), 100000, 32).pass;
  const bool p16 = verify_quadrupling(table32(), 100000, 16).pass;
  const bool p8 = verify_quadrupling(table32(), 100000, 8).pass;
  CHECK((!p32 || p16));
  CHECK((!p16 || p8));
}

TEST_CASE("odd quadruples, weak and strong") {
  CHECK(verify_odd_quadruples(table32(), 0, true).pass);  // (1,3,7,5) at k = 0
  CHECK(verify_odd_quadruples(table32(), 100000, false).pass);
  CHECK(verify_odd_quadruples(table32(), 100000, true).pass);
}

TEST_CASE("even quadruples") {
  // k = 0: {2, 10, 30, 70} mod 8 = {2, 2, 6, 6} with 2 = 2 = -6 = -6
  CHECK(verify_even_quadruples(table32(), 0).pass);
  CHECK(verify_even_quadruples(table32(), 10000).pass);
}

TEST_CASE("scaled quadruple families") {
  // k = 0, power 1: indices {4, 12, 20, 28} give residues {5, 7, 3, 1}
  CHECK(table32()[4] % 8 == 5);
  CHECK(table32()[12] % 8 == 7);
  CHECK(table32()[20] % 8 == 3);
  CHECK(table32()[28] % 8 == 1);
  CHECK(verify_scaled_sets(table32(), 0, 1).pass);
  CHECK(verify_scaled_sets(table32(), 1000, 3).pass);
}

TEST_CASE("verifiers reject unusable tables") {
  const ResidueTable odd = residue_stream(Modulus::of(3), 100);
  CHECK_THROWS_AS(verify_parity_lemma(odd, 10), Error);
  CHECK_THROWS_AS(verify_quadrupling(table32(), 10, 12), Error);
  const ResidueTable mod8 = residue_stream(Modulus::of(8), 100);
  CHECK_THROWS_AS(verify_quadrupling(mod8, 10, 32), Error);
}

TEST_CASE("counterexamples surface with the smallest index") {
  // corrupt two entries of a genuine mod-2 prefix and expect the smaller one
  const ResidueTable good = residue_stream(Modulus::of(2), 1000);
  std::vector<std::uint8_t> prefix(good.narrow_data().begin() + 1, good.narrow_data().end());
  prefix[500 - 1] ^= 1;
  prefix[777 - 1] ^= 1;
  const ResidueTable bad = ResidueTable::adopt(Modulus::of(2), std::move(prefix));
  const LemmaVerdict v = verify_parity_lemma(bad, 1000);
  CHECK_FALSE(v.pass);
  REQUIRE(v.counterexample.size() == 1);
  CHECK(v.counterexample[0] == 500);
}

TEST_CASE("parallel scan matches the serial scan") {
  auto pred = [](std::uint64_t n) { return n % 577 != 0; };
  CHECK(detail::first_violation(1, 100000, pred) ==
        detail::first_violation_serial(1, 100000, pred));
  auto all_good = [](std::uint64_t) { return true; };
  CHECK(detail::first_violation(1, 1000, all_good) == detail::kNoViolation);
  CHECK(detail::first_violation_serial(1, 1000, all_good) == detail::kNoViolation);
}

TEST_CASE("verdict json") {
  LemmaVerdict v;
  v.lemma_id = "parity";
  v.range_checked = 42;
  CHECK(verdict_json(v) ==
        "{\"lemma_id\":\"parity\",\"N\":42,\"status\":\"pass\",\"counterexample\":null}");
  v.pass = false;
  v.counterexample = {7, 2};
  CHECK(verdict_json(v) ==
        "{\"lemma_id\":\"parity\",\"N\":42,\"status\":\"fail\",\"counterexample\":[7,2]}");
}
