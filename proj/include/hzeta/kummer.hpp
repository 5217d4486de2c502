#ifndef HZETA_KUMMER_HPP
#define HZETA_KUMMER_HPP

#include <complex>
#include <vector>

#include "hzeta/bigfloat.hpp"
#include "hzeta/rational.hpp"

namespace hzeta {

struct FloatCfg {
  mpfr_prec_t precision_bits = 256;
  double newton_tol = 1e-30;
  int max_iter = 100;
};

// One refined zero in the upper half-plane. residual is an upper bound on
// the true |Phi| at the stored point: the computed magnitude plus the
// evaluation error bound.
struct ZeroRecord {
  int index = 0;  // 1-based position when produced by zero_list
  BigComplex value;
  BigComplex seed;
  BigFloat residual;
  int iterations = 0;
};

// Kummer series value at a complex point. Evaluation happens at a working
// precision raised to cover the cancellation between series terms (up to
// ~e^|z|) and the result; arguments with negative real part go through the
// e^z * Phi_{b,a}(-z) transformation first. For a = 1 with integer b and
// |z| >= 1 the finite closed form replaces the series, which keeps large
// zeros affordable. Throws precision_error when the required working
// precision exceeds the internal budget.
BigComplex phi_eval(const Params& params, const BigComplex& z,
                    const FloatCfg& cfg);

// Series-only evaluation path, same contract; the closed form is checked
// against this in the tests.
BigComplex phi_eval_series(const Params& params, const BigComplex& z,
                           const FloatCfg& cfg);

// Derivative via the parameter shift a -> a+1 (one extra evaluation), or
// the differentiated closed form on the fast path.
BigComplex phi_deriv(const Params& params, const BigComplex& z,
                     const FloatCfg& cfg);

// Asymptotic location of the n-th large zero on the chosen branch:
//   +-(2n+a) pi i + Log(-Gamma(a)/Gamma(b) (+-2n pi i)^(b-a)),
// principal logarithm. branch is +1 or -1.
BigComplex zero_seed(const Params& params, long n, int branch,
                     const FloatCfg& cfg);

// Same formula in double precision; used for cheap tail sums.
std::complex<double> zero_seed_double(const Params& params, long n,
                                      int branch);

// Newton refinement from a seed. Iterates at a guarded working precision
// until the step falls below a few ulps, then certifies the residual
// against newton_tol. Throws convergence_error when the iteration diverges
// or the budget runs out, precision_error when the residual floor sits
// above the tolerance.
ZeroRecord find_zero(const Params& params, const BigComplex& seed,
                     const FloatCfg& cfg);

// Fixed-point refinement z <- log(sum_{k<b} z^k/k!) + 2 pi i m for a = 1,
// integer b, where the branch integer m is read off the seed. Independent
// of the Newton path; kept as a cross-check.
ZeroRecord howard_refine(long b, const BigComplex& seed, const FloatCfg& cfg);

// First `count` upper-half-plane zeros, seeded from both asymptotic
// branches, refined, deduplicated and sorted by imaginary part.
std::vector<ZeroRecord> zero_list(const Params& params, int count,
                                  const FloatCfg& cfg);

// Truncated zero sum for integer s >= 2: the first `refined` conjugate
// pairs enter through Newton-refined zeros, pairs refined+1..total through
// asymptotic seeds, and the remainder beyond `total` is reported as the
// integral bound 2 (2 pi)^{-s} total^{1-s} / (s-1), not absorbed into the
// value.
struct TruncatedZeta {
  BigFloat value;
  BigFloat tail_bound;
  int refined_pairs = 0;
  long seed_pairs = 0;
};
TruncatedZeta zeta_truncated(const Params& params, int s, int refined,
                             long total, const FloatCfg& cfg);

}  // namespace hzeta

#endif
