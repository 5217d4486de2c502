#include "hzeta/exact_core.hpp"

#include <stdexcept>

#include "hzeta/errors.hpp"

namespace hzeta {

Rat pochhammer_ratio(const Params& params, unsigned r) {
  Rat prod(1);
  Rat top = params.a;
  Rat bot = params.sum();
  for (unsigned k = 0; k < r; ++k) {
    prod *= top / bot;
    top += Rat(1);
    bot += Rat(1);
  }
  return prod;
}

Rat binom(unsigned long n, unsigned long k) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), n, k);  // 0 when k > n
  return Rat(c);
}

Rat gen_binom(const Rat& u, unsigned k) {
  Rat prod(1);
  Rat factor = u;
  for (unsigned j = 0; j < k; ++j) {
    prod *= factor;
    factor -= Rat(1);
  }
  return prod / factorial(k);
}

mpz_class Factorization::reconstruct() const {
  mpz_class n(1);
  for (const auto& [p, e] : pairs) {
    mpz_class pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), p, e);
    n *= pe;
  }
  return n;
}

namespace {

// Divide out every power of p from n, returning the exponent.
unsigned strip_factor(mpz_class& n, std::uint64_t p) {
  unsigned e = 0;
  while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
    mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    ++e;
  }
  return e;
}

}  // namespace

Factorization factorize(const mpz_class& n, std::uint64_t trial_limit) {
  if (sgn(n) <= 0)
    throw std::invalid_argument("factorize: input must be positive");
  Factorization f;
  mpz_class rem = n;
  for (std::uint64_t p : {2, 3, 5}) {
    if (unsigned e = strip_factor(rem, p)) f.pairs.emplace_back(p, e);
  }
  // Candidates coprime to 30: 7, 11, 13, 17, 19, 23, 29, 31, 37, ...
  static constexpr int kWheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};
  std::uint64_t p = 7;
  int w = 0;
  while (rem != 1) {
    mpz_class p2;
    mpz_ui_pow_ui(p2.get_mpz_t(), p, 2);
    if (p2 > rem) {
      // Everything below p has been divided out, so rem is prime.
      if (mpz_sizeinbase(rem.get_mpz_t(), 2) > 64)
        throw resource_error("factorize: prime cofactor " + rem.get_str() +
                             " does not fit the factor type");
      f.pairs.emplace_back(rem.get_ui(), 1);
      rem = 1;
      break;
    }
    if (p > trial_limit)
      throw resource_error("factorize: cofactor " + rem.get_str() +
                           " exceeds trial budget " +
                           std::to_string(trial_limit));
    if (unsigned e = strip_factor(rem, p)) f.pairs.emplace_back(p, e);
    p += kWheel[w];
    w = (w + 1) & 7;
  }
  return f;
}

unsigned long nu2(const mpz_class& n) {
  if (sgn(n) <= 0) throw std::invalid_argument("nu2: input must be positive");
  return mpz_scan1(n.get_mpz_t(), 0);
}

bool is_small_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  static constexpr int kWheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};
  std::uint64_t p = 7;
  int w = 0;
  while (p * p <= n) {
    if (n % p == 0) return false;
    p += kWheel[w];
    w = (w + 1) & 7;
  }
  return true;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = std::uint64_t(i) * i; j <= limit; j += i)
      composite[j] = true;
  }
  return primes;
}

}  // namespace hzeta
