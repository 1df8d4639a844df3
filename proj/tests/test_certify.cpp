#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <random>

#include "seqlab/certify.hpp"
#include "seqlab/census.hpp"
#include "seqlab/error.hpp"
#include "seqlab/exact_prefix.hpp"

using namespace seqlab;

TEST_CASE("coefficient rows match the unrolled recurrence") {
  const CoefficientTable t = CoefficientTable::build(3);
  CHECK(t.row_count() == 11);  // 2^4 - 2 - 3
  // c(1,1) = e1
  CHECK(t.row(1, 1)[0] == 1);
  CHECK(t.row(1, 1)[1] == 0);
  // c(2,3) = 2 e1 + e2: a_{4k+3} = 2 a_{2k+1} + a_{4k+1}
  CHECK(t.row(2, 3)[0] == 2);
  CHECK(t.row(2, 3)[1] == 1);
  CHECK(t.row(2, 3)[2] == 0);
  // c(3,4) = e1 + 3 e2 + e3: a_12 = a_3 + 3 a_5 + a_9 = 3 + 21 + 23 = 47
  CHECK(t.row(3, 4)[0] == 1);
  CHECK(t.row(3, 4)[1] == 3);
  CHECK(t.row(3, 4)[2] == 1);
}

TEST_CASE("coefficient soundness against exact big integers") {
  const int j = 7;
  const CoefficientTable t = CoefficientTable::build(j);
  const ExactPrefix p = exact_prefix(200000);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const std::uint64_t k = rng() % 1000 + 1;
    for (int i = 1; i <= j; ++i) {
      for (std::uint64_t tt = 1; tt < (std::uint64_t{1} << i); ++tt) {
        mpz_class sum = 0;
        for (int s = 1; s <= j; ++s)
          sum += t.row(i, tt)[static_cast<std::size_t>(s - 1)] *
                 p.value((std::uint64_t{1} << s) * k + 1);
        CHECK(sum == p.value((std::uint64_t{1} << i) * k + tt));
      }
    }
  }
}

TEST_CASE("coefficient table size guards") {
  CHECK_THROWS_AS(CoefficientTable::build(0), Error);
  CHECK_THROWS_AS(CoefficientTable::build(25), Error);
  CHECK_THROWS_AS(CoefficientTable::build(24), Error);  // over the memory budget
}

TEST_CASE("admissible tuple domains") {
  const AdmissibleTupleSpec odd = admissible_tuples(Modulus::of(3), 2);
  CHECK(odd.total_count == 9);
  CHECK(odd.families.size() == 1);
  CHECK(odd.families[0] == std::vector<std::uint32_t>{0, 1, 2});

  const AdmissibleTupleSpec twice = admissible_tuples(Modulus::of(6), 2);
  CHECK(twice.total_count == 9);
  CHECK(twice.families[0] == std::vector<std::uint32_t>{1, 3, 5});

  const AdmissibleTupleSpec quad = admissible_tuples(Modulus::of(12), 2);
  CHECK(quad.total_count == 18);
  CHECK(quad.families.size() == 2);
  CHECK(quad.families[0] == std::vector<std::uint32_t>{1, 5, 9});
  CHECK(quad.families[1] == std::vector<std::uint32_t>{3, 7, 11});

  const AdmissibleTupleSpec big = admissible_tuples(Modulus::of(5), 10);
  CHECK(big.total_count == 9765625);

  CHECK_THROWS_AS(admissible_tuples(Modulus::of(8), 2), Error);
  CHECK_THROWS_AS(admissible_tuples(Modulus::of(2), 2), Error);
}

TEST_CASE("hand-enumerated minima for j = 2, m = 3") {
  const Certificate zero = naive_min_hits(0, Modulus::of(3), 2);
  CHECK(zero.e == 1);
  CHECK(zero.certified);
  CHECK(zero.witness == std::vector<std::uint32_t>{0, 1});
  CHECK(zero.tuples_examined == 9);

  const Certificate one = naive_min_hits(1, Modulus::of(3), 2);
  CHECK(one.e == 0);
  CHECK(one.witness == std::vector<std::uint32_t>{0, 0});

  CHECK(naive_min_hits(2, Modulus::of(3), 2).e == 0);

  const Certificate searched = search_min_hits(0, Modulus::of(3), 2);
  CHECK(searched.e == 1);
  CHECK(searched.witness == zero.witness);
}

TEST_CASE("search agrees with the naive oracle") {
  for (std::uint32_t m : {3u, 5u, 6u, 9u}) {
    for (int j = 1; j <= 3; ++j) {
      for (std::uint32_t x = 0; x < m; ++x) {
        const Certificate fast = search_min_hits(x, Modulus::of(m), j);
        const Certificate slow = naive_min_hits(x, Modulus::of(m), j);
        CAPTURE(m);
        CAPTURE(j);
        CAPTURE(x);
        CHECK(fast.e == slow.e);
        CHECK(fast.witness == slow.witness);
        CHECK(fast.certified);
      }
    }
  }
}

TEST_CASE("zero minima off the odd-part multiples") {
  // e = 0 unless the odd part of m divides x
  for (std::uint32_t x : {1u, 2u}) CHECK(search_min_hits(x, Modulus::of(3), 4).e == 0);
  for (std::uint32_t x : {1u, 2u, 4u, 5u}) CHECK(search_min_hits(x, Modulus::of(6), 4).e == 0);
  CHECK(search_min_hits(0, Modulus::of(3), 4).e > 0);
  // multiples of the odd part can still come out zero at small j; m = 6
  // needs much deeper windows before every tuple is forced to hit
  CHECK(search_min_hits(0, Modulus::of(6), 4).e == naive_min_hits(0, Modulus::of(6), 4).e);
}

TEST_CASE("negation symmetry of minima") {
  for (std::uint32_t m : {5u, 6u, 7u, 12u}) {
    for (std::uint32_t x = 0; x < m; ++x) {
      const std::uint32_t neg = (m - x) % m;
      CHECK(search_min_hits(x, Modulus::of(m), 3).e ==
            search_min_hits(neg, Modulus::of(m), 3).e);
    }
  }
}

TEST_CASE("search is deterministic across thread counts") {
  for (auto [x, m, j] : {std::tuple{0u, 7u, 5}, {3u, 9u, 4}, {3u, 12u, 4}}) {
    SearchOptions one;
    one.threads = 1;
    SearchOptions four;
    four.threads = 4;
    const Certificate a = search_min_hits(x, Modulus::of(m), j, one);
    const Certificate b = search_min_hits(x, Modulus::of(m), j, four);
    CHECK(a.e == b.e);
    CHECK(a.witness == b.witness);
  }
}

TEST_CASE("witness re-evaluation through the coefficient table") {
  const Certificate cert = search_min_hits(0, Modulus::of(5), 4);
  const CoefficientTable table = CoefficientTable::build(cert.j);
  CHECK(evaluate_tuple_hits(table, Modulus::of(cert.m), cert.x, cert.witness) == cert.e);
}

TEST_CASE("tuple budget yields a marked partial result") {
  SearchOptions opts;
  opts.max_tuples = 5;
  const Certificate partial = search_min_hits(0, Modulus::of(7), 5, opts);
  CHECK_FALSE(partial.certified);
  const Certificate full = search_min_hits(0, Modulus::of(7), 5);
  CHECK(partial.e >= full.e);  // partial keeps only an upper bound
  CHECK_THROWS_AS(density_bound(partial), Error);
  // the partial witness still attains the reported bound
  const CoefficientTable table = CoefficientTable::build(5);
  CHECK(evaluate_tuple_hits(table, Modulus::of(7), 0, partial.witness) == partial.e);
}

TEST_CASE("checkpointed search resumes to the same answer") {
  const std::string path = "certify_ck_test.json";
  std::remove(path.c_str());
  SearchOptions capped;
  capped.max_tuples = 2000;
  capped.checkpoint_path = path;
  const Certificate partial = search_min_hits(0, Modulus::of(5), 6, capped);
  CHECK_FALSE(partial.certified);
  SearchOptions resume;
  resume.checkpoint_path = path;
  const Certificate resumed = search_min_hits(0, Modulus::of(5), 6, resume);
  const Certificate fresh = search_min_hits(0, Modulus::of(5), 6);
  CHECK(resumed.certified);
  CHECK(resumed.e == fresh.e);
  CHECK(resumed.witness == fresh.witness);
  std::remove(path.c_str());
}

TEST_CASE("density bounds as exact rationals") {
  Certificate cert;
  cert.e = 4708;
  cert.j = 13;
  cert.denominator = 16382;
  cert.certified = true;
  const Rational bound = density_bound(cert);
  CHECK(bound == Rational::of(4708, 16382));
  CHECK(bound.decimal_truncated(4) == "0.2873");
  CHECK(bound > Rational::of(2873, 10000));

  cert.e = 1;
  cert.j = 7;
  cert.denominator = 254;
  CHECK(density_bound(cert) == Rational::of(1, 254));
  CHECK(density_bound(cert).decimal_truncated(4) == "0.0039");

  cert.e = 0;
  CHECK(density_bound(cert) == Rational::of(0, 1));
}

TEST_CASE("bound curve evaluation and census cross-check") {
  Certificate cert;
  cert.x = 0;
  cert.m = 3;
  cert.j = 13;
  cert.e = 4708;
  cert.denominator = 16382;
  cert.certified = true;
  const double n = 1e6;
  const double expect = 4708.0 / 16382.0 * n -
                        (3.0 * 4708.0 / (13.0 * std::log(2.0))) * std::log(n) - 4708.0;
  CHECK(bound_curve(cert, 1000000) == doctest::Approx(expect).epsilon(1e-12));
  const CensusReport census = run_census(Modulus::of(3), 1000000);
  CHECK(static_cast<double>(census.classes[0].count) > bound_curve(cert, 1000000));
  CHECK_THROWS_AS(bound_curve(cert, 1), Error);
}

TEST_CASE("windows stay inside range and pairwise disjoint") {
  CHECK(verify_window_disjoint(8, 1).pass);
  CHECK(verify_window_disjoint(100, 2).pass);
  CHECK(verify_window_disjoint(100000, 13).pass);
}

TEST_CASE("realized windows carry enough hits") {
  const Certificate cert = search_min_hits(0, Modulus::of(3), 2);
  const ResidueTable table = residue_stream(Modulus::of(3), 10000);
  const LemmaVerdict v = empirical_window_check(cert, table, 10000);
  CHECK(v.pass);

  // e = 0 certificates pass vacuously
  const Certificate zero = search_min_hits(1, Modulus::of(3), 2);
  CHECK(empirical_window_check(zero, table, 10000).pass);
}

TEST_CASE("realized base tuples are admissible at an even modulus") {
  const Certificate cert = search_min_hits(0, Modulus::of(12), 3);
  const ResidueTable table = residue_stream(Modulus::of(12), 1000000);
  CHECK(empirical_window_check(cert, table, 1000000).pass);
}

TEST_CASE("certificate json round trip") {
  const Certificate cert = search_min_hits(0, Modulus::of(5), 3);
  const std::string text = certificate_json(cert);
  CHECK(text.find("\"density_lower_bound\"") != std::string::npos);
  const Certificate back = certificate_from_json(text);
  CHECK(back.x == cert.x);
  CHECK(back.m == cert.m);
  CHECK(back.j == cert.j);
  CHECK(back.e == cert.e);
  CHECK(back.denominator == cert.denominator);
  CHECK(back.witness == cert.witness);
  CHECK(back.certified == cert.certified);
  CHECK_THROWS_AS(certificate_from_json("{"), Error);
  CHECK_THROWS_AS(certificate_from_json("{\"x\":1}"), Error);
}

TEST_CASE("search preconditions") {
  CHECK_THROWS_AS(search_min_hits(5, Modulus::of(3), 2), Error);   // x out of range
  CHECK_THROWS_AS(search_min_hits(0, Modulus::of(16), 3), Error);  // odd part 1
  CHECK_THROWS_AS(naive_min_hits(0, Modulus::of(11), 8), Error);   // over the naive cap
}
