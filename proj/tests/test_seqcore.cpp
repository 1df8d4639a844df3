#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "seqlab/budget.hpp"
#include "seqlab/error.hpp"
#include "seqlab/exact_prefix.hpp"
#include "seqlab/residue_table.hpp"

using namespace seqlab;

namespace {

// Independent oracle: the recurrence evaluated directly on unsigned 64-bit
// values (exact up to a_88000 or so, far beyond what these tests touch).
std::vector<std::uint64_t> brute_values(std::uint64_t n) {
  std::vector<std::uint64_t> a(n + 1);
  a[1] = 1;
  for (std::uint64_t k = 2; k <= n; ++k) a[k] = a[k - 1] + a[k / 2];
  return a;
}

}  // namespace

TEST_CASE("residue stream reproduces the first values mod 8") {
  const ResidueTable t = residue_stream(Modulus::of(8), 10);
  const std::uint32_t expect[10] = {1, 2, 3, 5, 7, 2, 5, 2, 7, 6};
  for (std::uint64_t k = 1; k <= 10; ++k) CHECK(t[k] == expect[k - 1]);
}

TEST_CASE("residue stream smallest run") {
  const ResidueTable t = residue_stream(Modulus::of(2), 1);
  CHECK(t.limit() == 1);
  CHECK(t[1] == 1);
}

TEST_CASE("no value is divisible by 4") {
  const ResidueTable t = residue_stream(Modulus::of(4), 10000);
  for (std::uint64_t k = 1; k <= t.limit(); ++k) CHECK(t[k] != 0);
}

TEST_CASE("exact prefix matches direct evaluation") {
  const ExactPrefix p = exact_prefix(100);
  CHECK(p.value(1) == 1);
  CHECK(p.value(10) == 30);
  CHECK(p.value(16) == 101);
  const auto brute = brute_values(100);
  for (std::uint64_t k = 1; k <= 100; ++k)
    CHECK(p.value(k) == mpz_class(static_cast<unsigned long>(brute[k])));
}

TEST_CASE("exact prefix is strictly increasing from index 2") {
  const ExactPrefix p = exact_prefix(5000);
  for (std::uint64_t k = 3; k <= p.limit(); ++k) CHECK(p.value(k) > p.value(k - 1));
}

TEST_CASE("residues agree with the exact prefix for every modulus") {
  const std::uint64_t n = 10000;
  const ExactPrefix p = exact_prefix(n);
  for (std::uint32_t m : {2u, 3u, 8u, 13u, 100u, 257u, 1000u}) {
    const ResidueTable t = residue_stream(Modulus::of(m), n);
    for (std::uint64_t k = 1; k <= n; ++k) {
      mpz_class r = p.value(k) % m;
      CHECK(t[k] == r.get_ui());
    }
  }
}

TEST_CASE("two-adic valuation") {
  CHECK(two_adic_valuation(12) == 2);
  CHECK(two_adic_valuation(7) == 0);
  CHECK(two_adic_valuation(8) == 3);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const std::uint64_t n = rng() % 1000000 + 1;
    std::uint64_t v = n;
    std::uint32_t r = 0;
    while (v % 2 == 0) {
      v /= 2;
      ++r;
    }
    CHECK(two_adic_valuation(n) == r);
  }
}

TEST_CASE("parity prediction equals the mod-2 stream") {
  CHECK(parity_predict(12) == 1);  // a_12 = 47
  CHECK(parity_predict(8) == 0);   // a_8 = 18
  for (std::uint64_t n = 1; n <= 9999; n += 2) CHECK(parity_predict(n) == 1);
  const ResidueTable t = residue_stream(Modulus::of(2), 10000);
  for (std::uint64_t n = 1; n <= t.limit(); ++n) CHECK(parity_predict(n) == t[n]);
}

TEST_CASE("modulus validation") {
  CHECK_THROWS_AS(Modulus::of(1), Error);
  CHECK_THROWS_AS(Modulus::of(0), Error);
  CHECK_THROWS_AS(Modulus::of(70000), Error);
  const Modulus m = Modulus::of(12);
  CHECK(m.odd_part() == 3);
  CHECK(m.two_exponent() == 2);
  CHECK(Modulus::of(8).odd_part() == 1);
  CHECK(Modulus::of(45).two_exponent() == 0);
}

TEST_CASE("memory budget rejects oversized tables") {
  const std::uint64_t old = budget::limit_bytes();
  budget::set_limit_bytes(1024 * 1024);
  CHECK_THROWS_AS(residue_stream(Modulus::of(8), 50 * 1000 * 1000), Error);
  try {
    residue_stream(Modulus::of(8), 50 * 1000 * 1000);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::capacity);
  }
  budget::set_limit_bytes(old);
  CHECK(budget::live_bytes() == 0);
}

TEST_CASE("exact prefix cap") {
  CHECK_THROWS_AS(exact_prefix(ExactPrefix::kDefaultCap + 1), Error);
  const ExactPrefix p = exact_prefix(300000, 400000);  // explicit cap override
  CHECK(p.limit() == 300000);
}

TEST_CASE("wide tables use two-byte storage") {
  const ResidueTable t = residue_stream(Modulus::of(1000), 100);
  CHECK_FALSE(t.narrow());
  CHECK(t[41] == 257);  // a_41 = 2257
}
