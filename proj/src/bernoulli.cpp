#include "hzeta/bernoulli.hpp"

#include <stdexcept>

#include "hzeta/exact_core.hpp"
#include "hzeta/series.hpp"

namespace hzeta {

BernTable bern_numbers(const Params& params, int nmax) {
  if (nmax < 0) throw std::invalid_argument("bern_numbers: nmax must be >= 0");
  const Series inv = series_inv(phi_series(params, nmax));
  BernTable t{params, nmax, {}};
  t.numbers.reserve(static_cast<size_t>(nmax) + 1);
  Rat fact(1);
  for (int n = 0; n <= nmax; ++n) {
    if (n > 0) fact *= Rat(n);
    t.numbers.push_back(fact * inv.coeff(n));
  }
  return t;
}

BernTable bern_howard(long b, int nmax) {
  if (b < 1) throw std::invalid_argument("bern_howard: b must be a positive integer");
  if (nmax < 0) throw std::invalid_argument("bern_howard: nmax must be >= 0");
  BernTable t{Params(Rat(1), Rat(b)), nmax, {}};
  t.numbers.push_back(Rat(1));
  for (int n = 1; n <= nmax; ++n) {
    Rat acc(0);
    for (int r = 0; r < n; ++r)
      acc += binom(static_cast<unsigned long>(n + b), static_cast<unsigned long>(r)) *
             t.numbers[static_cast<size_t>(r)];
    t.numbers.push_back(-acc / binom(static_cast<unsigned long>(n + b),
                                     static_cast<unsigned long>(n)));
  }
  return t;
}

CheckReport bern_zeta_relation_check(long b, int nmax) {
  if (b < 1) throw std::invalid_argument("bern_zeta_relation_check: b must be >= 1");
  if (nmax < 2) throw std::invalid_argument("bern_zeta_relation_check: nmax must be >= 2");
  const Params params(Rat(1), Rat(b));
  const BernTable bern = bern_numbers(params, nmax);
  const ZetaTable zeta = zeta_linear(params, nmax);
  CheckReport report{"bernoulli numbers from zeta values (a=1)", {}};
  report.items.push_back({0, bern.at(0) == Rat(1)});
  report.items.push_back({1, bern.at(1) == Rat(-1, 1 + b)});
  Rat fact(1);
  for (int n = 2; n <= nmax; ++n) {
    fact *= Rat(n - 1);  // builds (n-1)!, then one more factor below
    const Rat expected = -(fact * Rat(n)) * zeta.at(n) / Rat(b);
    report.items.push_back({n, bern.at(n) == expected});
  }
  return report;
}

Poly bern_poly(const BernTable& table, int n) {
  if (n < 0 || n > table.nmax)
    throw std::invalid_argument("bern_poly: n outside table range");
  std::vector<Rat> coeffs(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k)
    coeffs[static_cast<size_t>(n - k)] =
        binom(static_cast<unsigned long>(n), static_cast<unsigned long>(k)) *
        table.at(k);
  return Poly(std::move(coeffs));
}

Poly bern_poly(const Params& params, int n) {
  return bern_poly(bern_numbers(params, n), n);
}

Poly companion_poly(const Params& params, int n) {
  if (n < 0) throw std::invalid_argument("companion_poly: n must be >= 0");
  const std::vector<Rat> moments = beta_moments(params, n);
  std::vector<Rat> coeffs(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k)
    coeffs[static_cast<size_t>(n - k)] =
        binom(static_cast<unsigned long>(n), static_cast<unsigned long>(k)) *
        moments[static_cast<size_t>(k)];
  return Poly(std::move(coeffs));
}

namespace {

// kappa(j+1) for the zero-side variable, j = 0..count-1.
std::vector<Rat> zero_side_cumulants(const Params& params, int count,
                                     const ZetaTable& zeta) {
  std::vector<Rat> kappa(static_cast<size_t>(count));
  kappa[0] = -params.a / params.sum();
  Rat fact(1);
  for (int j = 1; j < count; ++j) {
    fact *= Rat(j);
    kappa[static_cast<size_t>(j)] = fact * zeta.at(j + 1);
  }
  return kappa;
}

}  // namespace

CheckReport conjugate_recurrence_check(const Params& params, int nmax,
                                       const ZetaTable& zeta) {
  if (nmax < 1)
    throw std::invalid_argument("conjugate_recurrence_check: nmax must be >= 1");
  if (zeta.pmax < nmax)
    throw std::invalid_argument("conjugate_recurrence_check: zeta table too short");
  const BernTable bern = bern_numbers(params, nmax);
  std::vector<Poly> bp, cp;
  for (int n = 0; n <= nmax; ++n) {
    bp.push_back(bern_poly(bern, n));
    cp.push_back(companion_poly(params, n));
  }
  const std::vector<Rat> kappa = zero_side_cumulants(params, nmax, zeta);
  CheckReport report{"conjugate polynomial recurrences", {}};
  const Poly x = Poly::monomial(1);
  for (int n = 0; n < nmax; ++n) {
    Poly rhs_b, rhs_c;
    for (int j = 0; j <= n; ++j) {
      const Rat w = binom(static_cast<unsigned long>(n),
                          static_cast<unsigned long>(j)) *
                    kappa[static_cast<size_t>(j)];
      rhs_b = rhs_b + w * bp[static_cast<size_t>(n - j)];
      rhs_c = rhs_c + (-w) * cp[static_cast<size_t>(n - j)];
    }
    const bool ok_b = bp[static_cast<size_t>(n + 1)] - x * bp[static_cast<size_t>(n)] == rhs_b;
    const bool ok_c = cp[static_cast<size_t>(n + 1)] - x * cp[static_cast<size_t>(n)] == rhs_c;
    report.items.push_back({n, ok_b && ok_c});
  }
  return report;
}

CheckReport conjugate_recurrence_check(const Params& params, int nmax) {
  return conjugate_recurrence_check(params, nmax,
                                    zeta_linear(params, std::max(nmax + 1, 2)));
}

CheckReport dilcher_check(long b, int kmax) {
  if (b < 1) throw std::invalid_argument("dilcher_check: b must be >= 1");
  if (kmax < 0) throw std::invalid_argument("dilcher_check: kmax must be >= 0");
  const BernTable bern = bern_numbers(Params(Rat(1), Rat(b)), kmax);
  std::vector<Poly> polys;
  for (int k = 0; k <= kmax; ++k) polys.push_back(bern_poly(bern, k));
  CheckReport report{"forward-difference recursion (a=1)", {}};
  for (int k = 0; k <= kmax; ++k) {
    const Poly lhs = polys[static_cast<size_t>(k)].compose_affine(Rat(1), Rat(1));
    Poly rhs;
    for (long p = 0; p < b && p <= k; ++p)
      rhs = rhs + binom(static_cast<unsigned long>(k), static_cast<unsigned long>(p)) *
                      polys[static_cast<size_t>(k - p)];
    if (k >= b)
      rhs = rhs + Poly::monomial(static_cast<int>(k - b),
                                 binom(static_cast<unsigned long>(k),
                                       static_cast<unsigned long>(b)));
    report.items.push_back({k, lhs == rhs});
  }
  return report;
}

CheckReport symmetry_check(const Params& params, int nmax) {
  if (nmax < 0) throw std::invalid_argument("symmetry_check: nmax must be >= 0");
  const BernTable bern_ab = bern_numbers(params, nmax);
  const BernTable bern_ba = bern_numbers(params.swapped(), nmax);
  CheckReport report{"reflection symmetry", {}};
  for (int n = 0; n <= nmax; ++n) {
    const Poly lhs = bern_poly(bern_ab, n).compose_affine(Rat(-1), Rat(1));
    Poly rhs = bern_poly(bern_ba, n);
    if (n % 2 == 1) rhs = -rhs;
    report.items.push_back({n, lhs == rhs});
  }
  return report;
}

CheckReport change_of_basis_check(const Params& params, int nmax) {
  if (nmax < 0) throw std::invalid_argument("change_of_basis_check: nmax must be >= 0");
  const BernTable bern = bern_numbers(params, nmax);
  const std::vector<Rat> moments = beta_moments(params, nmax);
  std::vector<Poly> polys;
  for (int n = 0; n <= nmax; ++n) polys.push_back(bern_poly(bern, n));
  const bool integer_params = params.integer_ab();
  CheckReport report{"monomial change of basis", {}};
  for (int n = 0; n <= nmax; ++n) {
    Poly lhs;
    for (int k = 0; k <= n; ++k)
      lhs = lhs + (binom(static_cast<unsigned long>(n), static_cast<unsigned long>(k)) *
                   moments[static_cast<size_t>(n - k)]) *
                      polys[static_cast<size_t>(k)];
    bool ok = lhs == Poly::monomial(n);
    if (ok && integer_params && n >= 1) {
      // Binomial-coefficient weighting, well-defined for integer a, b.
      Poly lhs2;
      const Rat top = params.sum() + Rat(n - 1);
      for (int k = 0; k <= n; ++k)
        lhs2 = lhs2 +
               (gen_binom(top, static_cast<unsigned>(k)) *
                gen_binom(params.a - Rat(1) + Rat(n - k),
                          static_cast<unsigned>(params.a.to_long() - 1))) *
                   polys[static_cast<size_t>(k)];
      Rat rising(1);  // (a+b)_n
      for (int j = 0; j < n; ++j) rising *= params.sum() + Rat(j);
      ok = lhs2 == Poly::monomial(n, rising / factorial(static_cast<unsigned long>(n)));
    }
    report.items.push_back({n, ok});
  }
  return report;
}

CumulantSeq moments_to_cumulants(const std::vector<Rat>& moments) {
  if (moments.empty() || !moments[0].is_one())
    throw std::invalid_argument("moments_to_cumulants: moments[0] must be 1");
  const int count = static_cast<int>(moments.size()) - 1;
  CumulantSeq seq;
  seq.kappas.reserve(static_cast<size_t>(count));
  for (int n = 1; n <= count; ++n) {
    Rat kappa = moments[static_cast<size_t>(n)];
    for (int j = 1; j <= n - 1; ++j)
      kappa -= binom(static_cast<unsigned long>(n - 1), static_cast<unsigned long>(j - 1)) *
               seq.kappas[static_cast<size_t>(j - 1)] *
               moments[static_cast<size_t>(n - j)];
    seq.kappas.push_back(std::move(kappa));
  }
  return seq;
}

std::vector<Rat> beta_moments(const Params& params, int pmax) {
  std::vector<Rat> m;
  m.reserve(static_cast<size_t>(pmax) + 1);
  Rat cur(1);
  m.push_back(cur);
  for (int p = 0; p < pmax; ++p) {
    cur *= (params.a + Rat(p)) / (params.sum() + Rat(p));
    m.push_back(cur);
  }
  return m;
}

}  // namespace hzeta
