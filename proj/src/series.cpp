#include "hzeta/series.hpp"

#include <stdexcept>

namespace hzeta {

namespace {

void require_same_order(const Series& f, const Series& g) {
  if (f.order() != g.order())
    throw std::invalid_argument("series: order mismatch (" +
                                std::to_string(f.order()) + " vs " +
                                std::to_string(g.order()) + ")");
}

}  // namespace

Series::Series(int order) {
  if (order < 0) throw std::invalid_argument("series: negative order");
  c_.assign(static_cast<size_t>(order) + 1, Rat(0));
}

Series::Series(std::vector<Rat> coeffs, int order) : c_(std::move(coeffs)) {
  if (static_cast<int>(c_.size()) != order + 1)
    throw std::invalid_argument("series: coefficient count does not match order");
}

Series phi_series(const Params& params, int order) {
  Series f(order);
  Rat c(1);
  Rat top = params.a;
  Rat bot = params.sum();
  f.coeff(0) = c;
  for (int k = 1; k <= order; ++k) {
    c *= top / (bot * Rat(k));
    f.coeff(k) = c;
    top += Rat(1);
    bot += Rat(1);
  }
  return f;
}

Series exp_series(int order) {
  Series f(order);
  Rat c(1);
  f.coeff(0) = c;
  for (int k = 1; k <= order; ++k) {
    c /= Rat(k);
    f.coeff(k) = c;
  }
  return f;
}

Series series_mul(const Series& f, const Series& g) {
  require_same_order(f, g);
  const int n = f.order();
  Series h(n);
  for (int i = 0; i <= n; ++i) {
    if (f.coeff(i).is_zero()) continue;
    for (int j = 0; i + j <= n; ++j)
      h.coeff(i + j) += f.coeff(i) * g.coeff(j);
  }
  return h;
}

Series series_inv(const Series& f) {
  if (f.coeff(0).is_zero())
    throw std::invalid_argument("series_inv: zero constant term");
  const int n = f.order();
  Series g(n);
  const Rat c0_inv = f.coeff(0).inv();
  g.coeff(0) = c0_inv;
  for (int k = 1; k <= n; ++k) {
    Rat acc(0);
    for (int j = 1; j <= k; ++j) acc += f.coeff(j) * g.coeff(k - j);
    g.coeff(k) = -acc * c0_inv;
  }
  return g;
}

Series series_div(const Series& f, const Series& g) {
  return series_mul(f, series_inv(g));
}

Series series_derivative(const Series& f) {
  if (f.order() == 0) return Series(0);
  Series d(f.order() - 1);
  for (int k = 1; k <= f.order(); ++k) d.coeff(k - 1) = Rat(k) * f.coeff(k);
  return d;
}

Series series_log(const Series& f) {
  if (!f.coeff(0).is_one())
    throw std::invalid_argument("series_log: constant term must be 1");
  const int n = f.order();
  Series log_f(n);
  if (n == 0) return log_f;
  // L' = f'/f exactly through order n-1, then integrate termwise.
  Series trunc(n - 1);
  for (int k = 0; k < n; ++k) trunc.coeff(k) = f.coeff(k);
  const Series q = series_div(series_derivative(f), trunc);
  for (int k = 1; k <= n; ++k) log_f.coeff(k) = q.coeff(k - 1) / Rat(k);
  return log_f;
}

Series series_negate_argument(const Series& f) {
  Series g = f;
  for (int k = 1; k <= g.order(); k += 2) g.coeff(k) = -g.coeff(k);
  return g;
}

}  // namespace hzeta
