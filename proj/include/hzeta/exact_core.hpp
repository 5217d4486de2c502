#ifndef HZETA_EXACT_CORE_HPP
#define HZETA_EXACT_CORE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "hzeta/rational.hpp"

namespace hzeta {

// (a)_r / (a+b)_r = prod_{k=0}^{r-1} (a+k)/(a+b+k).
// Equals B(a+r,b)/B(a,b), the r-th moment of the beta law with these
// parameters, which is why it shows up in every module downstream.
Rat pochhammer_ratio(const Params& params, unsigned r);

// Binomial coefficient as an exact rational; 0 when k > n.
Rat binom(unsigned long n, unsigned long k);

// Generalized binomial u(u-1)...(u-k+1)/k! for rational u.
Rat gen_binom(const Rat& u, unsigned k);

// Prime factorization of a positive integer, primes ascending.
struct Factorization {
  std::vector<std::pair<std::uint64_t, unsigned>> pairs;

  mpz_class reconstruct() const;
  bool empty() const { return pairs.empty(); }
};

inline constexpr std::uint64_t kDefaultTrialLimit = 20'000'000;

// Trial division with a 2/3/5 wheel, exact up to the trial limit.
// Throws resource_error if a cofactor survives past the limit.
Factorization factorize(const mpz_class& n,
                        std::uint64_t trial_limit = kDefaultTrialLimit);

// Exponent of 2 in n (n >= 1).
unsigned long nu2(const mpz_class& n);

// Deterministic primality by trial division; intended for small inputs.
bool is_small_prime(std::uint64_t n);

// Ascending primes <= limit (simple sieve).
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

}  // namespace hzeta

#endif
