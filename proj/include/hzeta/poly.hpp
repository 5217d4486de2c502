#ifndef HZETA_POLY_HPP
#define HZETA_POLY_HPP

#include <vector>

#include "hzeta/rational.hpp"

namespace hzeta {

// Dense univariate polynomial over Rat, coefficients lowest degree first.
// Trailing zero coefficients are trimmed so equality is plain vector
// equality; the zero polynomial is the empty coefficient vector with
// degree() == -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);

  static Poly constant(Rat c);
  static Poly monomial(int degree, Rat c = Rat(1));

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  // Coefficient of x^k, zero beyond the degree.
  Rat coeff(int k) const;
  const std::vector<Rat>& coeffs() const { return c_; }

  Rat eval(const Rat& x) const;
  Poly derivative() const;

  // p(scale * x + shift), exact.
  Poly compose_affine(const Rat& scale, const Rat& shift) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rat& c, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b) = default;

  std::string str() const;  // human-readable, highest degree first

 private:
  void trim();
  std::vector<Rat> c_;
};

}  // namespace hzeta

#endif
