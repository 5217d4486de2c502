#include "hzeta/zeta.hpp"

#include <stdexcept>

#include "hzeta/exact_core.hpp"
#include "hzeta/series.hpp"

namespace hzeta {

std::string to_string(ZetaMethod m) {
  switch (m) {
    case ZetaMethod::linear: return "linear";
    case ZetaMethod::quadratic: return "quadratic";
    case ZetaMethod::series_ratio: return "series-ratio";
    case ZetaMethod::bernoulli: return "bernoulli";
  }
  return "?";
}

const Rat& ZetaTable::at(int p) const {
  if (p < 2 || p > pmax)
    throw std::out_of_range("ZetaTable: argument " + std::to_string(p) +
                            " outside 2.." + std::to_string(pmax));
  return values[static_cast<size_t>(p - 2)];
}

Rat zeta_at_2(const Params& params) {
  const Rat s = params.sum();
  return -(params.a * params.b) / (s * s * (Rat(1) + s));
}

Rat suggested_zeta_at_one(const Rat& b) {
  return b / (Rat(1) + b);
}

ZetaSmall zeta_closed_small(const Params& params) {
  const Rat& a = params.a;
  const Rat& b = params.b;
  const Rat s = a + b;
  ZetaSmall v;
  v.z2 = zeta_at_2(params);
  v.z3 = (a * b * (a - b)) / (s * s * s * (s + Rat(1)) * (s + Rat(2)));
  const Rat p4 = a * a + a * a * a - Rat(4) * a * b - Rat(2) * a * a * b +
                 b * b - Rat(2) * a * b * b + b * b * b;
  v.z4 = -(a * b * p4) /
         (s * s * s * s * (s + Rat(1)) * (s + Rat(1)) * (s + Rat(2)) * (s + Rat(3)));
  return v;
}

namespace {

void require_pmax(int pmax) {
  if (pmax < 2) throw std::invalid_argument("zeta: pmax must be >= 2");
}

}  // namespace

ZetaTable zeta_linear(const Params& params, int pmax) {
  require_pmax(pmax);
  ZetaTable t{params, pmax, ZetaMethod::linear, {}};
  t.values.reserve(static_cast<size_t>(pmax - 1));
  // poch[r] = (a)_r/(a+b)_r and inv_fact[r] = 1/r!, filled incrementally.
  std::vector<Rat> poch(static_cast<size_t>(pmax), Rat(1));
  std::vector<Rat> inv_fact(static_cast<size_t>(pmax), Rat(1));
  for (int r = 1; r < pmax; ++r) {
    poch[r] = poch[r - 1] * (params.a + Rat(r - 1)) / (params.sum() + Rat(r - 1));
    inv_fact[r] = inv_fact[r - 1] / Rat(r);
  }
  const Rat s = params.sum();
  for (int p = 2; p <= pmax; ++p) {
    // value(p) = -b poch(p-1) / ((a+b)(a+b+p-1)(p-2)!)
    //            - sum_{r=1}^{p-2} poch(r)/r! value(p-r)
    Rat v = -(params.b * poch[p - 1]) * inv_fact[p - 2] /
            (s * (s + Rat(p - 1)));
    for (int r = 1; r <= p - 2; ++r)
      v -= poch[r] * inv_fact[r] * t.values[static_cast<size_t>(p - r - 2)];
    t.values.push_back(std::move(v));
  }
  return t;
}

ZetaTable zeta_quadratic(const Params& params, int pmax, const Rat& seed2) {
  require_pmax(pmax);
  ZetaTable t{params, pmax, ZetaMethod::quadratic, {}};
  t.values.push_back(seed2);
  const Rat skew = (params.a - params.b) / params.sum();
  for (int p = 1; p + 2 <= pmax; ++p) {
    // (a+b+p+1) value(p+2) = sum_{k=1}^{p-1} value(k+1) value(p-k+1)
    //                        - skew * value(p+1)
    Rat acc(0);
    for (int k = 1; k <= p - 1; ++k)
      acc += t.at(k + 1) * t.at(p - k + 1);
    acc -= skew * t.at(p + 1);
    t.values.push_back(acc / (params.sum() + Rat(p + 1)));
  }
  return t;
}

ZetaTable zeta_series_ratio(const Params& params, int pmax) {
  require_pmax(pmax);
  const int order = pmax - 1;
  const Params shifted(params.a, params.b + Rat(1));
  const Series ratio =
      series_div(phi_series(shifted, order), phi_series(params, order));
  ZetaTable t{params, pmax, ZetaMethod::series_ratio, {}};
  const Rat scale = params.b / params.sum();
  for (int k = 1; k <= order; ++k)
    t.values.push_back(scale * ratio.coeff(k));
  return t;
}

CheckReport zeta_from_bernoulli_check(const Params& params, int nmax,
                                      const std::vector<Rat>& bern,
                                      const ZetaTable& zeta) {
  if (static_cast<int>(bern.size()) <= nmax)
    throw std::invalid_argument("zeta_from_bernoulli_check: table too short");
  if (zeta.pmax < nmax)
    throw std::invalid_argument("zeta_from_bernoulli_check: zeta table too short");
  CheckReport report{"bernoulli-zeta recurrence", {}};
  const Rat mean = params.a / params.sum();
  Rat nm1_fact(1);  // (n-1)!
  for (int n = 2; n <= nmax; ++n) {
    nm1_fact *= Rat(n - 1);
    Rat lhs(0);
    Rat inv_fact(1);  // 1/(n-j)! built from j = n downward
    for (int j = n; j >= 2; --j) {
      lhs += bern[static_cast<size_t>(n - j)] * inv_fact * zeta.at(j);
      inv_fact /= Rat(n - j + 1);
    }
    lhs *= nm1_fact;
    const Rat rhs = mean * bern[static_cast<size_t>(n - 1)] +
                    bern[static_cast<size_t>(n)];
    report.items.push_back({n, lhs == rhs});
  }
  return report;
}

}  // namespace hzeta
