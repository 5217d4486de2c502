#include "hzeta/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace hzeta {

namespace {

void require_nonzero_den(const mpz_class& den) {
  if (sgn(den) == 0) throw std::invalid_argument("Rat: zero denominator");
}

}  // namespace

Rat::Rat(long num, long den) : v_(num, den) {
  require_nonzero_den(v_.get_den());
  v_.canonicalize();
}

Rat::Rat(const mpz_class& num, const mpz_class& den) : v_(num, den) {
  require_nonzero_den(den);
  v_.canonicalize();
}

Rat::Rat(const mpq_class& q) : v_(q) {
  require_nonzero_den(v_.get_den());
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  // Strict validation: mpq set_str is lenient about whitespace and bases,
  // so check the shape ourselves first.
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num_part = text.substr(0, slash);
  if (!is_int(num_part))
    throw std::invalid_argument("Rat: cannot parse \"" + std::string(text) + "\"");
  if (num_part[0] == '+') num_part.remove_prefix(1);  // mpz rejects a bare '+'
  mpz_class num(std::string(num_part), 10);
  mpz_class den(1);
  if (slash != std::string_view::npos) {
    std::string_view den_part = text.substr(slash + 1);
    if (!is_int(den_part) || den_part[0] == '+' || den_part[0] == '-')
      throw std::invalid_argument("Rat: cannot parse \"" + std::string(text) + "\"");
    den = mpz_class(std::string(den_part), 10);
    if (sgn(den) == 0)
      throw std::invalid_argument("Rat: zero denominator in \"" + std::string(text) + "\"");
  }
  return Rat(num, den);
}

long Rat::to_long() const {
  if (!is_integer() || !v_.get_num().fits_slong_p())
    throw std::invalid_argument("Rat: " + str() + " is not a machine integer");
  return v_.get_num().get_si();
}

Rat Rat::inv() const {
  if (is_zero()) throw std::invalid_argument("Rat: division by zero");
  Rat r;
  r.v_ = 1 / v_;
  return r;
}

Rat Rat::abs() const {
  Rat r;
  r.v_ = ::abs(v_);
  return r;
}

Rat Rat::operator-() const {
  Rat r;
  r.v_ = -v_;
  return r;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::invalid_argument("Rat: division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rat::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.str();
}

Rat factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rat(f);
}

Params::Params(Rat a_, Rat b_) : a(std::move(a_)), b(std::move(b_)) {
  if (!a.is_positive() || !b.is_positive())
    throw std::invalid_argument("Params: a and b must be positive, got a=" +
                                a.str() + " b=" + b.str());
}

}  // namespace hzeta
