#ifndef HZETA_CONJECTURES_HPP
#define HZETA_CONJECTURES_HPP

#include <optional>
#include <vector>

#include "hzeta/rational.hpp"

namespace hzeta {

// Reduced denominators of B_0..B_nmax for a = 1 and integer b; the
// denominator of a zero value is 1.
std::vector<mpz_class> denom_seq(long b, int nmax);

// Length of the initial run of odd denominators vs. the conjectured value
// nu2(b)+1 (b not divisible by 4) or 2^nu2(b) (b divisible by 4).
struct AlphaResult {
  long b;
  long observed;   // meaningful only when conclusive
  long predicted;
  bool conclusive; // an even denominator appeared within nmax
  bool agree;      // conclusive && observed == predicted
};
AlphaResult alpha_check(long b, int nmax);

// A denominator prime above the conjectured bound p <= n + b. When the
// offending cofactor resisted factoring within budget, `factored` is false
// and `prime` holds the whole cofactor.
struct PrimeViolation {
  long b;
  long n;
  mpz_class prime;
  bool factored;
};
std::vector<PrimeViolation> prime_bound_check(long b, int nmax);

// Classical denominator oracle at b = 1: den(B_{2n}) must equal the product
// of primes p with (p-1) | 2n. Returns the list of n where it fails.
std::vector<long> vsc_check(int nmax);

// Aggregate scan used by the CLI.
struct ConjReport {
  long bmax;
  int nmax;
  std::vector<AlphaResult> alpha;
  std::vector<PrimeViolation> violations;
  std::vector<long> vsc_failures;

  bool clean() const;
};
ConjReport conjecture_scan(long bmax, int nmax);

}  // namespace hzeta

#endif
