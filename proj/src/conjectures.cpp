#include "hzeta/conjectures.hpp"

#include <stdexcept>

#include "hzeta/bernoulli.hpp"
#include "hzeta/exact_core.hpp"
#include "hzeta/errors.hpp"

namespace hzeta {

namespace {

// Incremental reciprocal-series walk for a = 1, integer b: yields den(B_n)
// one n at a time so scans can stop as soon as they have what they need.
// Coefficients of Phi_{1,b} are b!/(b+k)!; g holds the inverse series.
class DenomWalker {
 public:
  explicit DenomWalker(long b) : b_(b) {
    f_.push_back(Rat(1));
    g_.push_back(Rat(1));
    fact_.push_back(Rat(1));
  }

  // Denominator of B_n; extends the tables up to n.
  mpz_class den(int n) {
    while (static_cast<int>(g_.size()) <= n) step();
    return Rat(fact_[static_cast<size_t>(n)] * g_[static_cast<size_t>(n)]).den();
  }

 private:
  void step() {
    const int k = static_cast<int>(g_.size());
    f_.push_back(f_.back() / Rat(b_ + k));
    fact_.push_back(fact_.back() * Rat(k));
    Rat acc(0);
    for (int j = 1; j <= k; ++j)
      acc += f_[static_cast<size_t>(j)] * g_[static_cast<size_t>(k - j)];
    g_.push_back(-acc);
  }

  long b_;
  std::vector<Rat> f_, g_, fact_;
};

long predicted_alpha(long b) {
  const unsigned long v = nu2(mpz_class(b));
  if (b % 4 != 0) return static_cast<long>(v) + 1;
  return 1L << v;
}

}  // namespace

std::vector<mpz_class> denom_seq(long b, int nmax) {
  if (b < 1) throw std::invalid_argument("denom_seq: b must be >= 1");
  if (nmax < 0) throw std::invalid_argument("denom_seq: nmax must be >= 0");
  const BernTable t = bern_numbers(Params(Rat(1), Rat(b)), nmax);
  std::vector<mpz_class> dens;
  dens.reserve(static_cast<size_t>(nmax) + 1);
  for (const Rat& v : t.numbers) dens.push_back(v.den());
  return dens;
}

AlphaResult alpha_check(long b, int nmax) {
  if (b < 1) throw std::invalid_argument("alpha_check: b must be >= 1");
  AlphaResult r{b, 0, predicted_alpha(b), false, false};
  DenomWalker walker(b);
  for (int n = 0; n <= nmax; ++n) {
    if (mpz_even_p(walker.den(n).get_mpz_t())) {
      r.observed = n;  // n denominators before this one were odd
      r.conclusive = true;
      r.agree = r.observed == r.predicted;
      return r;
    }
  }
  return r;
}

std::vector<PrimeViolation> prime_bound_check(long b, int nmax) {
  if (b < 1) throw std::invalid_argument("prime_bound_check: b must be >= 1");
  const std::vector<mpz_class> dens = denom_seq(b, nmax);
  const auto primes = primes_up_to(static_cast<std::uint32_t>(nmax + b));
  std::vector<PrimeViolation> violations;
  for (int n = 0; n <= nmax; ++n) {
    mpz_class rem = dens[static_cast<size_t>(n)];
    for (std::uint32_t p : primes) {
      if (p > static_cast<std::uint64_t>(n + b)) break;
      while (mpz_divisible_ui_p(rem.get_mpz_t(), p))
        mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), p);
      if (rem == 1) break;
    }
    if (rem == 1) continue;
    // Conjecture violated at this n: name the smallest offending prime if
    // the budget allows, otherwise report the whole cofactor.
    try {
      const Factorization f = factorize(rem);
      violations.push_back({b, n, mpz_class(f.pairs.front().first), true});
    } catch (const resource_error&) {
      violations.push_back({b, n, rem, false});
    }
  }
  return violations;
}

std::vector<long> vsc_check(int nmax) {
  if (nmax < 1) throw std::invalid_argument("vsc_check: nmax must be >= 1");
  const std::vector<mpz_class> dens = denom_seq(1, 2 * nmax);
  std::vector<long> failures;
  for (int n = 1; n <= nmax; ++n) {
    mpz_class product(1);
    for (long d = 1; d <= 2 * n; ++d) {
      if ((2 * n) % d != 0) continue;
      const std::uint64_t p = static_cast<std::uint64_t>(d) + 1;
      if (is_small_prime(p)) product *= mpz_class(static_cast<unsigned long>(p));
    }
    if (dens[static_cast<size_t>(2 * n)] != product) failures.push_back(n);
  }
  return failures;
}

bool ConjReport::clean() const {
  if (!violations.empty() || !vsc_failures.empty()) return false;
  for (const auto& a : alpha)
    if (!a.agree) return false;
  return true;
}

ConjReport conjecture_scan(long bmax, int nmax) {
  ConjReport report{bmax, nmax, {}, {}, {}};
  for (long b = 1; b <= bmax; ++b) {
    // The odd run can stretch to 2^nu2(b) entries, so give the per-b scan
    // room beyond the user's nmax; DenomWalker stops at the first even
    // denominator anyway.
    const int scan_n = std::max(nmax, static_cast<int>(4 * b + 64));
    report.alpha.push_back(alpha_check(b, scan_n));
    const auto v = prime_bound_check(b, nmax);
    report.violations.insert(report.violations.end(), v.begin(), v.end());
  }
  report.vsc_failures = vsc_check(std::max(1, nmax / 2));
  return report;
}

}  // namespace hzeta
