#include "hzeta/poly.hpp"

#include <sstream>

namespace hzeta {

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(Rat c) { return Poly({std::move(c)}); }

Poly Poly::monomial(int degree, Rat c) {
  std::vector<Rat> v(static_cast<size_t>(degree) + 1, Rat(0));
  v.back() = std::move(c);
  return Poly(std::move(v));
}

Rat Poly::coeff(int k) const {
  if (k < 0 || k > degree()) return Rat(0);
  return c_[static_cast<size_t>(k)];
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k)
    d[k - 1] = Rat(static_cast<long>(k)) * c_[k];
  return Poly(std::move(d));
}

Poly Poly::compose_affine(const Rat& scale, const Rat& shift) const {
  // Horner: ((c_n (sx+t) + c_{n-1})(sx+t) + ...)
  Poly result;
  const Poly linear({shift, scale});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    result = result * linear + Poly::constant(*it);
  return result;
}

Poly Poly::operator-() const {
  std::vector<Rat> v(c_.size());
  for (size_t k = 0; k < c_.size(); ++k) v[k] = -c_[k];
  return Poly(std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
  for (size_t k = 0; k < b.c_.size(); ++k) v[k] += b.c_[k];
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> v(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(v));
}

Poly operator*(const Rat& c, const Poly& p) {
  std::vector<Rat> v(p.c_.size());
  for (size_t k = 0; k < p.c_.size(); ++k) v[k] = c * p.c_[k];
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rat& c = c_[static_cast<size_t>(k)];
    if (c.is_zero()) continue;
    if (!first) os << (c.is_negative() ? " - " : " + ");
    else if (c.is_negative()) os << "-";
    first = false;
    const Rat mag = c.abs();
    if (k == 0 || !mag.is_one()) os << mag.str();
    if (k > 0) {
      if (!mag.is_one()) os << "*";
      os << "x";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace hzeta
