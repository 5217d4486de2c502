#include "hzeta/bigfloat.hpp"

#include <algorithm>
#include <vector>

namespace hzeta {

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(double d, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_d(v_, d, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::from_rat(const Rat& r, mpfr_prec_t prec) {
  BigFloat x(prec);
  mpfr_set_q(x.v_, r.raw().get_mpq_t(), MPFR_RNDN);
  return x;
}

BigFloat BigFloat::from_long(long n, mpfr_prec_t prec) {
  BigFloat x(prec);
  mpfr_set_si(x.v_, n, MPFR_RNDN);
  return x;
}

BigFloat BigFloat::pi(mpfr_prec_t prec) {
  BigFloat x(prec);
  mpfr_const_pi(x.v_, MPFR_RNDN);
  return x;
}

BigFloat BigFloat::round_to(mpfr_prec_t prec) const {
  BigFloat x(prec);
  mpfr_set(x.v_, v_, MPFR_RNDN);
  return x;
}

namespace {

using UnaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);
using BinaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

}  // namespace

#define HZETA_UNARY(method, fn)                    \
  BigFloat BigFloat::method() const {              \
    BigFloat r(precision());                       \
    fn(r.v_, v_, MPFR_RNDN);                       \
    return r;                                      \
  }

HZETA_UNARY(operator-, mpfr_neg)
HZETA_UNARY(abs, mpfr_abs)
HZETA_UNARY(sqrt, mpfr_sqrt)
HZETA_UNARY(exp, mpfr_exp)
HZETA_UNARY(log, mpfr_log)
HZETA_UNARY(sin, mpfr_sin)
HZETA_UNARY(cos, mpfr_cos)
HZETA_UNARY(gamma, mpfr_gamma)
#undef HZETA_UNARY

BigFloat BigFloat::mul_2si(long k) const {
  BigFloat r(precision());
  mpfr_mul_2si(r.v_, v_, k, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow_si(long e) const {
  BigFloat r(precision());
  mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
  return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  if (precision() < o.precision()) *this = round_to(o.precision());
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
  if (precision() < o.precision()) *this = round_to(o.precision());
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
  if (precision() < o.precision()) *this = round_to(o.precision());
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
  if (precision() < o.precision()) *this = round_to(o.precision());
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

namespace {

BigFloat binop(const BigFloat& a, const BigFloat& b, BinaryFn fn) {
  BigFloat r(std::max(a.precision(), b.precision()));
  fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) { return binop(a, b, mpfr_add); }
BigFloat operator-(const BigFloat& a, const BigFloat& b) { return binop(a, b, mpfr_sub); }
BigFloat operator*(const BigFloat& a, const BigFloat& b) { return binop(a, b, mpfr_mul); }
BigFloat operator/(const BigFloat& a, const BigFloat& b) { return binop(a, b, mpfr_div); }
BigFloat atan2(const BigFloat& y, const BigFloat& x) { return binop(y, x, mpfr_atan2); }
BigFloat max(const BigFloat& a, const BigFloat& b) { return binop(a, b, mpfr_max); }

std::string BigFloat::str(int digits) const {
  if (digits <= 0)
    digits = std::max(2, static_cast<int>(precision() * 0.30103) - 1);
  const int n = mpfr_snprintf(nullptr, 0, "%.*Rg", digits, v_);
  std::string out(static_cast<size_t>(n), '\0');
  mpfr_snprintf(out.data(), out.size() + 1, "%.*Rg", digits, v_);
  return out;
}

mpfr_prec_t BigComplex::precision() const {
  return std::max(re_.precision(), im_.precision());
}

BigComplex BigComplex::round_to(mpfr_prec_t prec) const {
  return BigComplex(re_.round_to(prec), im_.round_to(prec));
}

BigFloat BigComplex::abs() const {
  BigFloat r(precision());
  mpfr_hypot(r.raw(), re_.raw(), im_.raw(), MPFR_RNDN);
  return r;
}

BigComplex BigComplex::exp() const {
  const mpfr_prec_t prec = precision();
  const BigFloat scale = re_.exp();
  BigFloat c(prec), s(prec);
  mpfr_sin_cos(s.raw(), c.raw(), im_.raw(), MPFR_RNDN);
  return BigComplex(scale * c, scale * s);
}

BigComplex BigComplex::log() const {
  // Principal branch; atan2 handles the negative real axis, so make sure a
  // zero imaginary part carries the +0 sign and lands on arg = +pi there.
  BigFloat im = im_;
  if (im.is_zero()) mpfr_set_zero(im.raw(), 1);
  return BigComplex(abs().log(), atan2(im, re_));
}

BigComplex BigComplex::recip() const {
  const BigFloat n = norm();
  return BigComplex(re_ / n, -(im_ / n));
}

BigComplex BigComplex::pow_int(long e) const {
  if (e < 0) return pow_int(-e).recip();
  BigComplex base = *this;
  BigComplex acc(BigFloat::from_long(1, precision()), BigFloat(precision()));
  unsigned long u = static_cast<unsigned long>(e);
  while (u > 0) {
    if (u & 1) acc = acc * base;
    base = base * base;
    u >>= 1;
  }
  return acc;
}

std::string BigComplex::str(int digits) const {
  return re_.str(digits) + (im_.sign() < 0 ? " - " : " + ") +
         im_.abs().str(digits) + "i";
}

}  // namespace hzeta
