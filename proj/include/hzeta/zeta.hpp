#ifndef HZETA_ZETA_HPP
#define HZETA_ZETA_HPP

#include <string>
#include <vector>

#include "hzeta/check.hpp"
#include "hzeta/rational.hpp"

namespace hzeta {

enum class ZetaMethod { linear, quadratic, series_ratio, bernoulli };

std::string to_string(ZetaMethod m);

// Exact values of the zeta function attached to the zeros of the Kummer
// function, at integer arguments 2..pmax, together with the recurrence that
// produced them.
struct ZetaTable {
  Params params;
  int pmax;
  ZetaMethod method;
  std::vector<Rat> values;  // values[p-2] holds the value at p

  const Rat& at(int p) const;
};

// The closed forms at p = 2, 3, 4.
struct ZetaSmall {
  Rat z2, z3, z4;
};
ZetaSmall zeta_closed_small(const Params& params);

// Value at s = 2, the seed shared by every recurrence:
// -ab / ((a+b)^2 (1+a+b)).
Rat zeta_at_2(const Params& params);

// The boundary value sometimes attached to s = 1 for the a = 1 family,
// b/(1+b). Documented for reference only; no recurrence here consumes it.
Rat suggested_zeta_at_one(const Rat& b);

// Linear recurrence in its solved form: each value from beta-ratio
// weights (as Pochhammer ratios) and the earlier values.
ZetaTable zeta_linear(const Params& params, int pmax);

// Quadratic recurrence grown upward from the s = 2 seed. The convolution
// runs over k = 1..p-1; the would-be k = p term carries the undefined value
// at s = 1 and is taken as zero, the unique reading that matches the linear
// recurrence.
ZetaTable zeta_quadratic(const Params& params, int pmax, const Rat& seed2);

// Values read off the coefficients of the ratio of two Kummer series with
// the second parameter shifted by one.
ZetaTable zeta_series_ratio(const Params& params, int pmax);

// Verifies, for n = 2..nmax,
//   (n-1)! sum_{j=2}^{n} B_{n-j}/(n-j)! zeta(j) = a/(a+b) B_{n-1} + B_n
// where bern[k] holds the k-th hypergeometric Bernoulli number for the same
// parameters (bern.size() > nmax).
CheckReport zeta_from_bernoulli_check(const Params& params, int nmax,
                                      const std::vector<Rat>& bern,
                                      const ZetaTable& zeta);

}  // namespace hzeta

#endif
