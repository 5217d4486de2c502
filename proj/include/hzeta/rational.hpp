#ifndef HZETA_RATIONAL_HPP
#define HZETA_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hzeta {

// Arbitrary-precision rational, always stored reduced with positive
// denominator. Zero is 0/1. This is the exact scalar used everywhere.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT: implicit on purpose, Rat x = 3 reads well
  Rat(long num, long den);
  explicit Rat(const mpz_class& n) : v_(n) {}
  Rat(const mpz_class& num, const mpz_class& den);
  explicit Rat(const mpq_class& q);

  // Accepts "n", "-n", "p/q" with optional sign on p. Throws
  // std::invalid_argument on anything else (including q = 0).
  static Rat parse(std::string_view text);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_positive() const { return sgn(v_) > 0; }
  bool is_negative() const { return sgn(v_) < 0; }
  int sign() const { return sgn(v_); }

  // Valid only when is_integer() and the value fits in a long.
  long to_long() const;
  double to_double() const { return v_.get_d(); }

  Rat inv() const;
  Rat abs() const;

  Rat operator-() const;
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
  friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
  friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
  friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  // "num/den" in lowest terms; integers (including 0) print without "/1".
  std::string str() const;

 private:
  mpq_class v_;  // canonical at all times
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

Rat factorial(unsigned long n);

// The parameter pair (a, b), both strictly positive.
struct Params {
  Rat a;
  Rat b;

  Params(Rat a_, Rat b_);
  Rat sum() const { return a + b; }
  Params swapped() const { return Params(b, a); }
  bool integer_ab() const { return a.is_integer() && b.is_integer(); }
};

}  // namespace hzeta

#endif
