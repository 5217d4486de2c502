#ifndef HZETA_SERIES_HPP
#define HZETA_SERIES_HPP

#include <vector>

#include "hzeta/exact_core.hpp"
#include "hzeta/rational.hpp"

namespace hzeta {

inline constexpr int kDefaultSeriesOrder = 64;

// Truncated formal power series over Rat. coeff(k) is the plain coefficient
// of z^k (not divided by k!); results of all operations are exact through
// the truncation order. Operands must share one order: mixing orders is an
// error, not a silent pad, because exactness guarantees are per-order.
class Series {
 public:
  explicit Series(int order);
  Series(std::vector<Rat> coeffs, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rat& coeff(int k) const { return c_[static_cast<size_t>(k)]; }
  Rat& coeff(int k) { return c_[static_cast<size_t>(k)]; }
  const std::vector<Rat>& coeffs() const { return c_; }

  friend bool operator==(const Series& a, const Series& b) = default;

 private:
  std::vector<Rat> c_;
};

// Taylor coefficients of the Kummer function with the (a, a+b) parameter
// slot: coeff(k) = (a)_k/(a+b)_k / k!, constant term 1.
Series phi_series(const Params& params, int order);

// exp(z) truncated: coeff(k) = 1/k!.
Series exp_series(int order);

// Cauchy product truncated to the common order.
Series series_mul(const Series& f, const Series& g);

// Multiplicative inverse through the truncation order; requires a nonzero
// constant term.
Series series_inv(const Series& f);

Series series_div(const Series& f, const Series& g);

// log f with f(0) = 1, via L' = f'/f integrated termwise.
Series series_log(const Series& f);

// Coefficient-wise derivative, order drops by one.
Series series_derivative(const Series& f);

// f(-z): flips the sign of odd coefficients.
Series series_negate_argument(const Series& f);

}  // namespace hzeta

#endif
