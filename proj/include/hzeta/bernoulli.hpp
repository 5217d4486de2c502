#ifndef HZETA_BERNOULLI_HPP
#define HZETA_BERNOULLI_HPP

#include <vector>

#include "hzeta/check.hpp"
#include "hzeta/poly.hpp"
#include "hzeta/rational.hpp"
#include "hzeta/zeta.hpp"

namespace hzeta {

// Hypergeometric Bernoulli numbers for one parameter pair: numbers[n] is
// n! times the n-th coefficient of the reciprocal Kummer series.
struct BernTable {
  Params params;
  int nmax;
  std::vector<Rat> numbers;  // size nmax+1

  const Rat& at(int n) const { return numbers.at(static_cast<size_t>(n)); }
};

// Cumulant sequence kappa(1)..kappa(N).
struct CumulantSeq {
  std::vector<Rat> kappas;

  const Rat& at(int n) const { return kappas.at(static_cast<size_t>(n - 1)); }
  int count() const { return static_cast<int>(kappas.size()); }
};

// Numbers from the reciprocal series: B_n = n! [z^n] 1/Phi.
BernTable bern_numbers(const Params& params, int nmax);

// Same numbers for a = 1 and integer b, computed purely from the integer
// binomial recurrence sum_{r=0}^{n} C(n+b, r) A_r = 0 with A_0 = 1.
BernTable bern_howard(long b, int nmax);

// For a = 1 and integer b: B_n = -n! zeta(n)/b for n >= 2, B_1 = -1/(1+b),
// B_0 = 1, with zeta values from the linear recurrence.
CheckReport bern_zeta_relation_check(long b, int nmax);

// Appell expansion B_n(x) = sum_k C(n,k) B_k x^{n-k}; table must hold B_0..B_n.
Poly bern_poly(const BernTable& table, int n);
Poly bern_poly(const Params& params, int n);

// Companion family built from beta moments:
// C_n(z) = sum_k C(n,k) (a)_k/(a+b)_k z^{n-k}.
Poly companion_poly(const Params& params, int n);

// Both linear polynomial recurrences, as exact polynomial identities for
// 0 <= n < nmax. The cumulant weights are kappa(1) = -a/(a+b) and
// kappa(j+1) = j! zeta(j+1) for j >= 1; the companion family satisfies the
// same recurrence with all weights negated.
CheckReport conjugate_recurrence_check(const Params& params, int nmax,
                                       const ZetaTable& zeta);
CheckReport conjugate_recurrence_check(const Params& params, int nmax);

// Forward-difference recursion for a = 1, integer b:
// B_k(x+1) = sum_{p=0}^{b-1} C(k,p) B_{k-p}(x) + C(k,b) x^{k-b},
// the last term dropping out for k < b.
CheckReport dilcher_check(long b, int kmax);

// B_n^{(a,b)}(1-x) = (-1)^n B_n^{(b,a)}(x).
CheckReport symmetry_check(const Params& params, int nmax);

// sum_k C(n,k) (a)_{n-k}/(a+b)_{n-k} B_k(x) = x^n; for integer a, b also
// the equivalent binomial-coefficient weighting
// sum_k C(a+b+n-1,k) C(a-1+n-k,a-1) B_k(x) = (a+b)_n x^n / n!.
CheckReport change_of_basis_check(const Params& params, int nmax);

// Triangular moment-to-cumulant recursion:
// kappa(n) = m_n - sum_{j=1}^{n-1} C(n-1,j-1) kappa(j) m_{n-j}.
// moments[0] must be 1; yields kappa(1)..kappa(moments.size()-1).
CumulantSeq moments_to_cumulants(const std::vector<Rat>& moments);

// Moments of the beta law: index p holds (a)_p/(a+b)_p.
std::vector<Rat> beta_moments(const Params& params, int pmax);

}  // namespace hzeta

#endif
