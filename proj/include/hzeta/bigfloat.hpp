#ifndef HZETA_BIGFLOAT_HPP
#define HZETA_BIGFLOAT_HPP

#include <mpfr.h>

#include <string>
#include <utility>

#include "hzeta/rational.hpp"

namespace hzeta {

// RAII value type over mpfr_t. Precision is fixed per value at construction;
// binary operations land on the larger operand precision, round-to-nearest
// throughout.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 256);
  BigFloat(double d, mpfr_prec_t prec);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  static BigFloat from_rat(const Rat& r, mpfr_prec_t prec);
  static BigFloat from_long(long n, mpfr_prec_t prec);
  static BigFloat pi(mpfr_prec_t prec);

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  BigFloat round_to(mpfr_prec_t prec) const;

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_); }
  bool is_nan() const { return mpfr_nan_p(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  BigFloat operator-() const;
  BigFloat abs() const;
  BigFloat sqrt() const;
  BigFloat exp() const;
  BigFloat log() const;
  BigFloat sin() const;
  BigFloat cos() const;
  BigFloat gamma() const;
  // this * 2^k, exact.
  BigFloat mul_2si(long k) const;
  BigFloat pow_si(long e) const;

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend BigFloat atan2(const BigFloat& y, const BigFloat& x);
  friend BigFloat max(const BigFloat& a, const BigFloat& b);

  friend bool operator==(const BigFloat& a, const BigFloat& b) {
    return mpfr_cmp(a.v_, b.v_) == 0;
  }
  friend bool operator<(const BigFloat& a, const BigFloat& b) {
    return mpfr_cmp(a.v_, b.v_) < 0;
  }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return !(b < a); }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return !(a < b); }

  int cmp_d(double d) const { return mpfr_cmp_d(v_, d); }

  // Decimal string; digits defaults to the full precision of the value.
  std::string str(int digits = 0) const;

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

 private:
  mpfr_t v_;
};

// Complex value over BigFloat, principal branches everywhere.
class BigComplex {
 public:
  explicit BigComplex(mpfr_prec_t prec = 256) : re_(prec), im_(prec) {}
  BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
  BigComplex(double re, double im, mpfr_prec_t prec)
      : re_(re, prec), im_(im, prec) {}

  const BigFloat& re() const { return re_; }
  const BigFloat& im() const { return im_; }
  mpfr_prec_t precision() const;
  BigComplex round_to(mpfr_prec_t prec) const;

  BigComplex conj() const { return BigComplex(re_, -im_); }
  BigComplex operator-() const { return BigComplex(-re_, -im_); }
  BigFloat abs() const;
  BigFloat norm() const { return re_ * re_ + im_ * im_; }
  BigFloat arg() const { return atan2(im_, re_); }
  BigComplex exp() const;
  BigComplex log() const;
  BigComplex recip() const;
  BigComplex pow_int(long e) const;

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re_ - b.re_, a.im_ - b.im_);
  }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re_ * b.re_ - a.im_ * b.im_,
                      a.re_ * b.im_ + a.im_ * b.re_);
  }
  friend BigComplex operator*(const BigFloat& s, const BigComplex& z) {
    return BigComplex(s * z.re_, s * z.im_);
  }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    return a * b.recip();
  }

  std::string str(int digits = 0) const;

 private:
  BigFloat re_, im_;
};

}  // namespace hzeta

#endif
