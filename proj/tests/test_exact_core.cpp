#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hzeta/errors.hpp"
#include "hzeta/exact_core.hpp"

using namespace hzeta;

namespace {

// Deterministic rational parameters in (0, 10]^2 for property tests.
Params random_params(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(1, 40);
  std::uniform_int_distribution<long> den(1, 4);
  return Params(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)));
}

}  // namespace

TEST_CASE("Rat normalization and printing") {
  CHECK(Rat(2, 4).str() == "1/2");
  CHECK(Rat(-2, 4).str() == "-1/2");
  CHECK(Rat(2, -4).str() == "-1/2");
  CHECK(Rat(0, 7).str() == "0");
  CHECK(Rat(-5, 192).str() == "-5/192");
  CHECK(Rat(6, 3).str() == "2");
  CHECK(Rat(6, 3).is_integer());
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK(Rat(1, 3) * Rat(3, 5) == Rat(1, 5));
  CHECK(Rat(1, 3) / Rat(1, 6) == Rat(2));
  CHECK(Rat(1, 2) < Rat(2, 3));
  CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rat(1).inv() / Rat(0), std::invalid_argument);
}

TEST_CASE("Rat parsing") {
  CHECK(Rat::parse("-5/192") == Rat(-5, 192));
  CHECK(Rat::parse("7") == Rat(7));
  CHECK(Rat::parse("+3/6") == Rat(1, 2));
  CHECK(Rat::parse("0") == Rat(0));
  CHECK_THROWS_AS(Rat::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("1.5"), std::invalid_argument);
}

TEST_CASE("Params require positive entries") {
  CHECK_THROWS_AS(Params(Rat(0), Rat(1)), std::invalid_argument);
  CHECK_THROWS_AS(Params(Rat(1), Rat(-1, 2)), std::invalid_argument);
  const Params p(Rat(5), Rat(3));
  CHECK(p.swapped().a == Rat(3));
}

TEST_CASE("pochhammer_ratio examples") {
  CHECK(pochhammer_ratio(Params(Rat(1), Rat(1)), 0) == Rat(1));
  CHECK(pochhammer_ratio(Params(Rat(1), Rat(1)), 2) == Rat(1, 3));
  CHECK(pochhammer_ratio(Params(Rat(5), Rat(3)), 1) == Rat(5, 8));
}

TEST_CASE("pochhammer_ratio recurrence and bounds") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 25; ++trial) {
    const Params p = random_params(rng);
    Rat prev = pochhammer_ratio(p, 0);
    CHECK(prev == Rat(1));
    for (unsigned r = 0; r < 12; ++r) {
      const Rat next = pochhammer_ratio(p, r + 1);
      CHECK(next == prev * (p.a + Rat(static_cast<long>(r))) /
                        (p.sum() + Rat(static_cast<long>(r))));
      CHECK(next > Rat(0));
      CHECK(next < Rat(1));
      prev = next;
    }
  }
}

TEST_CASE("binom examples and Pascal oracle") {
  CHECK(binom(2, 1) == Rat(2));
  CHECK(binom(1, 2) == Rat(0));
  CHECK(binom(6, 3) == Rat(20));
  // Pascal triangle, rebuilt independently.
  std::vector<std::vector<Rat>> pascal{{Rat(1)}};
  for (int n = 1; n <= 12; ++n) {
    std::vector<Rat> row{Rat(1)};
    for (int k = 1; k < n; ++k)
      row.push_back(pascal.back()[k - 1] + pascal.back()[k]);
    row.push_back(Rat(1));
    pascal.push_back(row);
  }
  for (int n = 0; n <= 12; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(binom(n, k) == pascal[n][k]);
}

TEST_CASE("gen_binom examples and integer agreement") {
  CHECK(gen_binom(Rat(5, 2), 0) == Rat(1));
  CHECK(gen_binom(Rat(3), 2) == Rat(3));
  CHECK(gen_binom(Rat(1, 2), 2) == Rat(-1, 8));
  for (unsigned long n = 0; n <= 10; ++n)
    for (unsigned k = 0; k <= 12; ++k)
      CHECK(gen_binom(Rat(static_cast<long>(n)), k) == binom(n, k));
}

TEST_CASE("factorize examples") {
  const Factorization f = factorize(mpz_class(76800));
  REQUIRE(f.pairs.size() == 3);
  CHECK(f.pairs[0] == std::pair<std::uint64_t, unsigned>{2, 10});
  CHECK(f.pairs[1] == std::pair<std::uint64_t, unsigned>{3, 1});
  CHECK(f.pairs[2] == std::pair<std::uint64_t, unsigned>{5, 2});
  CHECK(factorize(mpz_class(1)).empty());
  const Factorization g = factorize(mpz_class(90));
  REQUIRE(g.pairs.size() == 3);
  CHECK(g.pairs[0] == std::pair<std::uint64_t, unsigned>{2, 1});
  CHECK(g.pairs[1] == std::pair<std::uint64_t, unsigned>{3, 2});
  CHECK(g.pairs[2] == std::pair<std::uint64_t, unsigned>{5, 1});
}

TEST_CASE("factorize reconstructs, primes verified, budget reported") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> dist(1, 5000000);
  for (int trial = 0; trial < 200; ++trial) {
    const long n = dist(rng);
    const Factorization f = factorize(mpz_class(n));
    CHECK(f.reconstruct() == mpz_class(n));
    std::uint64_t last = 0;
    for (const auto& [p, e] : f.pairs) {
      CHECK(p > last);
      CHECK(is_small_prime(p));
      CHECK(e >= 1);
      last = p;
    }
  }
  // A 40-digit semiprime-ish value cannot be finished within a tiny budget.
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 40);
  big += 61;
  CHECK_THROWS_AS(factorize(big, 1000), resource_error);
  CHECK_THROWS_AS(factorize(mpz_class(0)), std::invalid_argument);
}

TEST_CASE("nu2 examples") {
  CHECK(nu2(mpz_class(3)) == 0);
  CHECK(nu2(mpz_class(4)) == 2);
  CHECK(nu2(mpz_class(96)) == 5);
}

TEST_CASE("primes_up_to") {
  const auto primes = primes_up_to(30);
  CHECK(primes == std::vector<std::uint32_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
}
