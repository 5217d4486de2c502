#include "hzeta/kummer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "hzeta/errors.hpp"

namespace hzeta {

namespace {

constexpr double kLog2E = 1.4426950408889634;
constexpr mpfr_prec_t kMaxWorkingBits = 1 << 22;
// Extra bits carried through refinement so values round cleanly back to the
// configured precision.
constexpr mpfr_prec_t kGuardBits = 32;

void validate_cfg(const FloatCfg& cfg) {
  if (cfg.precision_bits < 53)
    throw std::invalid_argument("FloatCfg: precision_bits must be >= 53");
  if (!(cfg.newton_tol > 0))
    throw std::invalid_argument("FloatCfg: newton_tol must be positive");
  if (cfg.max_iter < 1)
    throw std::invalid_argument("FloatCfg: max_iter must be >= 1");
}

// Series terms reach ~e^|z| while values near zeros are tiny, so the
// working precision has to absorb |z| log2(e) bits of cancellation.
mpfr_prec_t working_precision(const FloatCfg& cfg, double abs_z) {
  const double needed = 1.5 * abs_z * kLog2E + 64.0;
  if (needed > static_cast<double>(kMaxWorkingBits))
    throw precision_error(
        "phi_eval: |z| too large for the working-precision budget");
  return std::max(cfg.precision_bits + kGuardBits,
                  static_cast<mpfr_prec_t>(needed));
}

struct Eval {
  BigComplex value;
  BigFloat err;  // absolute bound on the evaluation error
};

void track_mag(BigFloat& maxmag, const BigComplex& z) {
  if (mpfr_cmpabs(z.re().raw(), maxmag.raw()) > 0) maxmag = z.re().abs();
  if (mpfr_cmpabs(z.im().raw(), maxmag.raw()) > 0) maxmag = z.im().abs();
}

// Plain Taylor sum of the Kummer series; caller guarantees Re z >= 0.
Eval series_sum(const Params& params, const BigComplex& z, mpfr_prec_t w) {
  const double abs_z = std::abs(std::complex<double>(z.re().to_double(),
                                                     z.im().to_double()));
  BigComplex term(BigFloat::from_long(1, w), BigFloat(w));
  BigComplex sum = term;
  BigFloat maxmag = BigFloat::from_long(1, w);
  BigFloat top = BigFloat::from_rat(params.a, w);
  BigFloat bot = BigFloat::from_rat(params.sum(), w);
  const long k_min = static_cast<long>(2.0 * abs_z) + 4;
  const BigFloat one = BigFloat::from_long(1, w);
  for (long k = 1;; ++k) {
    term = (top / (bot * BigFloat::from_long(k, w))) * (term * z);
    sum = sum + term;
    track_mag(maxmag, term);
    track_mag(maxmag, sum);
    top += one;
    bot += one;
    if (k >= k_min) {
      // Past the hump the term ratio is below 1/2, so the dropped tail is
      // at most twice the last term.
      const BigFloat tiny = maxmag.mul_2si(-(w - 8));
      if (term.re().abs() < tiny && term.im().abs() < tiny) break;
    }
    if (k > 8 * k_min + 4096)
      throw precision_error("phi_eval: series failed to settle");
  }
  return {sum, maxmag.mul_2si(20 - static_cast<long>(w))};
}

Eval phi_series_raw(const Params& params, const BigComplex& z, mpfr_prec_t w) {
  if (z.re().sign() >= 0) return series_sum(params, z, w);
  // Phi_{a,b}(z) = e^z Phi_{b,a}(-z) moves the argument to Re >= 0 where
  // the terms cannot cancel catastrophically.
  Eval inner = series_sum(params.swapped(), -z, w);
  const BigComplex scale = z.exp();
  const BigFloat scale_mag = scale.abs();
  Eval out{scale * inner.value, scale_mag * inner.err};
  out.err += out.value.abs().mul_2si(4 - static_cast<long>(w));
  return out;
}

bool closed_form_applies(const Params& params, double abs_z) {
  return params.a.is_one() && params.b.is_integer() && abs_z >= 1.0 &&
         params.b <= Rat(1000);
}

// The closed form has no term growth, so it needs no |z|-driven raise.
mpfr_prec_t eval_precision(const Params& params, const FloatCfg& cfg,
                           double abs_z) {
  if (closed_form_applies(params, abs_z))
    return cfg.precision_bits + kGuardBits;
  return working_precision(cfg, abs_z);
}

// Partial exponential sum sum_{k<b} z^k / k! by Horner.
BigComplex partial_exp_sum(long b, const BigComplex& z, mpfr_prec_t w) {
  BigComplex s(w);
  if (b <= 0) return s;
  // 1/(b-1)! * (... (z/(b-1) + 1) z/(b-2) + ...) style Horner, done with
  // explicit factorials since b stays small.
  Rat fact(1);
  std::vector<Rat> inv_fact{Rat(1)};
  for (long k = 1; k < b; ++k) {
    fact *= Rat(k);
    inv_fact.push_back(fact.inv());
  }
  for (long k = b - 1; k >= 0; --k) {
    s = s * z;
    s = s + BigComplex(BigFloat::from_rat(inv_fact[static_cast<size_t>(k)], w),
                       BigFloat(w));
  }
  return s;
}

// Phi_{1,b} and its derivative from the finite form
// b! z^{-b} (e^z - sum_{k<b} z^k/k!).
struct ClosedEval {
  Eval phi;
  Eval dphi;
};

ClosedEval phi_closed_raw(long b, const BigComplex& z, mpfr_prec_t w,
                          bool want_deriv) {
  const BigComplex ez = z.exp();
  const BigComplex s_full = partial_exp_sum(b, z, w);
  const BigFloat b_fact = BigFloat::from_rat(factorial(static_cast<unsigned long>(b)), w);
  const BigComplex zb_inv = z.pow_int(-b);
  BigFloat mag = ez.abs();
  track_mag(mag, s_full);
  const BigFloat noise = mag.mul_2si(8 - static_cast<long>(w));
  const BigFloat factor = b_fact * zb_inv.abs();

  ClosedEval out{{BigComplex(w), BigFloat(w)}, {BigComplex(w), BigFloat(w)}};
  out.phi.value = b_fact * (zb_inv * (ez - s_full));
  out.phi.err = factor * noise;
  if (want_deriv) {
    // Phi' = (-b/z) Phi + b! z^{-b} (e^z - sum_{k<b-1} z^k/k!)
    const BigComplex s_short = partial_exp_sum(b - 1, z, w);
    const BigComplex lead =
        BigFloat::from_long(-b, w) * (out.phi.value / z);
    out.dphi.value = lead + b_fact * (zb_inv * (ez - s_short));
    out.dphi.err =
        factor * noise + BigFloat::from_long(b, w) * out.phi.err / z.abs();
  }
  return out;
}

Eval phi_raw(const Params& params, const BigComplex& z, mpfr_prec_t w,
             double abs_z) {
  if (closed_form_applies(params, abs_z))
    return phi_closed_raw(params.b.to_long(), z, w, false).phi;
  return phi_series_raw(params, z, w);
}

double abs_double(const BigComplex& z) {
  return std::abs(std::complex<double>(z.re().to_double(), z.im().to_double()));
}

}  // namespace

BigComplex phi_eval(const Params& params, const BigComplex& z,
                    const FloatCfg& cfg) {
  validate_cfg(cfg);
  const double az = abs_double(z);
  const mpfr_prec_t w = eval_precision(params, cfg, az);
  return phi_raw(params, z.round_to(w), w, az).value.round_to(cfg.precision_bits);
}

BigComplex phi_eval_series(const Params& params, const BigComplex& z,
                           const FloatCfg& cfg) {
  validate_cfg(cfg);
  const double az = abs_double(z);
  const mpfr_prec_t w = working_precision(cfg, az);
  return phi_series_raw(params, z.round_to(w), w).value.round_to(cfg.precision_bits);
}

BigComplex phi_deriv(const Params& params, const BigComplex& z,
                     const FloatCfg& cfg) {
  validate_cfg(cfg);
  const double az = abs_double(z);
  const mpfr_prec_t w = eval_precision(params, cfg, az);
  const BigComplex zw = z.round_to(w);
  if (closed_form_applies(params, az))
    return phi_closed_raw(params.b.to_long(), zw, w, true)
        .dphi.value.round_to(cfg.precision_bits);
  const Params shifted(params.a + Rat(1), params.b);
  const BigFloat scale =
      BigFloat::from_rat(params.a / params.sum(), w);
  return (scale * phi_raw(shifted, zw, w, az).value)
      .round_to(cfg.precision_bits);
}

BigComplex zero_seed(const Params& params, long n, int branch,
                     const FloatCfg& cfg) {
  validate_cfg(cfg);
  if (n < 1) throw std::invalid_argument("zero_seed: n must be >= 1");
  if (branch != 1 && branch != -1)
    throw std::invalid_argument("zero_seed: branch must be +1 or -1");
  const mpfr_prec_t w = cfg.precision_bits + kGuardBits;
  const BigFloat pi = BigFloat::pi(w);
  const BigFloat a = BigFloat::from_rat(params.a, w);
  const BigFloat b = BigFloat::from_rat(params.b, w);
  const BigFloat two_n_pi = BigFloat::from_long(2 * n, w) * pi;
  const BigFloat sgn = BigFloat::from_long(branch, w);
  // (+-2 n pi i)^(b-a) via the principal logarithm of a point on the
  // imaginary axis: log = (ln(2 n pi), +-pi/2).
  const BigComplex log_w(two_n_pi.log(), sgn * pi.mul_2si(-1));
  const BigFloat expo = b - a;
  const BigComplex power = (expo * log_w).exp();
  const BigFloat gamma_ratio = a.gamma() / b.gamma();
  BigComplex u = (-gamma_ratio) * power;
  // When b-a is an even integer u is exactly real; snap the rounding
  // residue so the log lands deterministically on the principal +pi side.
  if (mpfr_cmpabs(u.im().raw(),
                  u.re().abs().mul_2si(-(static_cast<long>(w) / 2)).raw()) < 0) {
    BigFloat im0(w);
    u = BigComplex(u.re(), im0);
  }
  const BigComplex lead(BigFloat(w),
                        sgn * ((BigFloat::from_long(2 * n, w) + a) * pi));
  return (lead + u.log()).round_to(cfg.precision_bits);
}

std::complex<double> zero_seed_double(const Params& params, long n,
                                      int branch) {
  const double pi = 3.14159265358979323846;
  const double a = params.a.to_double();
  const double b = params.b.to_double();
  const std::complex<double> w(0.0, branch * 2.0 * n * pi);
  const std::complex<double> power = std::exp((b - a) * std::log(w));
  std::complex<double> u =
      -(std::tgamma(a) / std::tgamma(b)) * power;
  // Same snap as the full-precision path: real-axis u takes arg = +pi.
  if (std::abs(u.imag()) < 1e-9 * std::abs(u.real())) u.imag(+0.0);
  return std::complex<double>(0.0, branch * (2.0 * n + a) * pi) + std::log(u);
}

namespace {

struct Refiner {
  const Params& params;
  mpfr_prec_t w;
  bool closed;
  long b_int;

  std::pair<Eval, Eval> eval(const BigComplex& z) const {
    if (closed) {
      ClosedEval ce = phi_closed_raw(b_int, z, w, true);
      return {ce.phi, ce.dphi};
    }
    Eval f = phi_series_raw(params, z, w);
    const Params shifted(params.a + Rat(1), params.b);
    Eval df = phi_series_raw(shifted, z, w);
    const BigFloat scale = BigFloat::from_rat(params.a / params.sum(), w);
    df.value = scale * df.value;
    df.err = scale.abs() * df.err;
    return {f, df};
  }
};

}  // namespace

ZeroRecord find_zero(const Params& params, const BigComplex& seed,
                     const FloatCfg& cfg) {
  validate_cfg(cfg);
  const double az = abs_double(seed);
  const mpfr_prec_t w = eval_precision(params, cfg, az + 2.0);
  const Refiner refiner{params, w, closed_form_applies(params, az),
                        closed_form_applies(params, az) ? params.b.to_long() : 0};
  const BigFloat tol(cfg.newton_tol, 64);
  const BigFloat step_floor_scale = BigFloat::from_long(1, 64).mul_2si(
      -(static_cast<long>(w) - 20));

  BigComplex z = seed.round_to(w);
  bool step_converged = false;
  bool have_prev = false;
  BigFloat prev_fmag(64);
  for (int iter = 1; iter <= cfg.max_iter; ++iter) {
    auto [f, df] = refiner.eval(z);
    const BigFloat fmag = f.value.abs();
    const BigFloat residual = fmag + f.err;
    // Quadratic convergence ends when |f| stops improving: from there the
    // iteration just walks around the evaluation noise floor.
    const bool stalled = have_prev && prev_fmag < fmag.mul_2si(1);
    if (residual < tol && (step_converged || stalled)) {
      ZeroRecord rec;
      rec.value = z.round_to(cfg.precision_bits);
      rec.seed = seed;
      rec.residual = residual;
      rec.iterations = iter;
      return rec;
    }
    if (fmag < f.err.mul_2si(1) && !(residual < tol))
      throw precision_error(
          "find_zero: residual floor " + residual.str(6) +
          " sits above newton_tol; raise precision_bits");
    const BigComplex step = f.value / df.value;
    z = z - step;
    const BigFloat step_mag = step.abs();
    step_converged = step_mag < step_floor_scale * z.abs();
    if (step_mag.cmp_d(13.0) > 0)
      throw convergence_error("find_zero: diverged from seed " +
                              seed.str(8));
    prev_fmag = fmag;
    have_prev = true;
  }
  throw convergence_error("find_zero: no convergence after " +
                          std::to_string(cfg.max_iter) + " iterations from " +
                          seed.str(8));
}

ZeroRecord howard_refine(long b, const BigComplex& seed, const FloatCfg& cfg) {
  validate_cfg(cfg);
  if (b < 1) throw std::invalid_argument("howard_refine: b must be >= 1");
  const mpfr_prec_t w = cfg.precision_bits + kGuardBits;
  const BigFloat two_pi = BigFloat::pi(w).mul_2si(1);

  // Branch index from the seed: Im z = arg(S(z)) + 2 pi m at the fixed point.
  const std::complex<double> sd(seed.re().to_double(), seed.im().to_double());
  std::complex<double> s0(1.0, 0.0);
  for (long k = b - 1; k >= 1; --k) {
    s0 = s0 * sd / static_cast<double>(k);
    s0 += 1.0;
  }
  const long m = std::lround((sd.imag() - std::arg(s0)) / (2.0 * 3.14159265358979323846));

  const BigFloat step_floor = BigFloat::from_long(1, 64).mul_2si(
      -(static_cast<long>(w) - 16));
  const BigComplex offset(BigFloat(w), BigFloat::from_long(m, w) * two_pi);
  BigComplex z = seed.round_to(w);
  int iters = 0;
  for (int iter = 1; iter <= cfg.max_iter; ++iter) {
    iters = iter;
    const BigComplex next = partial_exp_sum(b, z, w).log() + offset;
    const BigFloat delta = (next - z).abs();
    z = next;
    if (delta < step_floor * z.abs()) break;
  }
  const Eval res = phi_closed_raw(b, z, w, false).phi;
  ZeroRecord rec;
  rec.value = z.round_to(cfg.precision_bits);
  rec.seed = seed;
  rec.residual = res.value.abs() + res.err;
  rec.iterations = iters;
  const BigFloat tol(cfg.newton_tol, 64);
  if (!(rec.residual < tol))
    throw convergence_error("howard_refine: residual " + rec.residual.str(6) +
                            " above tolerance");
  return rec;
}

namespace {

bool same_zero(const BigComplex& a, const BigComplex& b) {
  const std::complex<double> da(a.re().to_double(), a.im().to_double());
  const std::complex<double> db(b.re().to_double(), b.im().to_double());
  return std::abs(da - db) < 1e-6 * (1.0 + std::abs(da));
}

}  // namespace

std::vector<ZeroRecord> zero_list(const Params& params, int count,
                                  const FloatCfg& cfg) {
  validate_cfg(cfg);
  if (count < 1) throw std::invalid_argument("zero_list: count must be >= 1");
  const int margin = 4;

  // Seeds from both branches, mapped to the upper half-plane.
  std::vector<BigComplex> seeds;
  for (long n = 1; n <= count + margin; ++n) {
    for (int branch : {1, -1}) {
      BigComplex s = zero_seed(params, n, branch, cfg);
      if (s.im().sign() < 0) s = s.conj();
      seeds.push_back(std::move(s));
    }
  }
  std::sort(seeds.begin(), seeds.end(),
            [](const BigComplex& x, const BigComplex& y) {
              return x.im() < y.im();
            });
  seeds.erase(std::unique(seeds.begin(), seeds.end(),
                          [](const BigComplex& x, const BigComplex& y) {
                            return same_zero(x, y);
                          }),
              seeds.end());

  std::vector<ZeroRecord> zeros;
  for (size_t i = 0; i < seeds.size(); ++i) {
    if (static_cast<int>(zeros.size()) > count + margin) break;
    ZeroRecord rec;
    try {
      rec = find_zero(params, seeds[i], cfg);
    } catch (const convergence_error& e) {
      throw convergence_error("zero_list: seed " + std::to_string(i + 1) +
                              " failed: " + e.what());
    }
    if (rec.value.im().sign() < 0) {
      rec.value = rec.value.conj();
      rec.seed = rec.seed.conj();
    }
    zeros.push_back(std::move(rec));
  }

  std::sort(zeros.begin(), zeros.end(),
            [](const ZeroRecord& x, const ZeroRecord& y) {
              return x.value.im() < y.value.im();
            });
  std::vector<ZeroRecord> unique_zeros;
  for (auto& rec : zeros) {
    if (!unique_zeros.empty() &&
        same_zero(unique_zeros.back().value, rec.value)) {
      if (rec.residual < unique_zeros.back().residual)
        unique_zeros.back() = std::move(rec);
      continue;
    }
    unique_zeros.push_back(std::move(rec));
  }

  if (static_cast<int>(unique_zeros.size()) < count)
    throw convergence_error("zero_list: only " +
                            std::to_string(unique_zeros.size()) + " of " +
                            std::to_string(count) + " zeros found");
  unique_zeros.resize(static_cast<size_t>(count));

  // Distinctness: refinement from distinct seeds must not have landed on
  // nearly-coincident points that escaped deduplication.
  for (size_t i = 1; i < unique_zeros.size(); ++i) {
    const double gap = std::abs(
        std::complex<double>(
            (unique_zeros[i].value - unique_zeros[i - 1].value).re().to_double(),
            (unique_zeros[i].value - unique_zeros[i - 1].value).im().to_double()));
    if (gap < 0.5)
      throw convergence_error("zero_list: suspicious near-duplicate zeros");
  }
  for (size_t i = 0; i < unique_zeros.size(); ++i)
    unique_zeros[i].index = static_cast<int>(i + 1);
  return unique_zeros;
}

TruncatedZeta zeta_truncated(const Params& params, int s, int refined,
                             long total, const FloatCfg& cfg) {
  validate_cfg(cfg);
  if (s < 2) throw std::invalid_argument("zeta_truncated: s must be >= 2");
  if (refined < 1 || total < refined)
    throw std::invalid_argument("zeta_truncated: need total >= refined >= 1");

  const std::vector<ZeroRecord> zeros = zero_list(params, refined, cfg);
  BigFloat head(cfg.precision_bits);
  for (const ZeroRecord& rec : zeros)
    head += rec.value.pow_int(-s).re().mul_2si(1);

  // Seed list in double precision, deduplicated and ordered the same way as
  // the refined list so positions refined+1..total continue the indexing.
  std::vector<std::complex<double>> seeds;
  seeds.reserve(2 * static_cast<size_t>(total) + 8);
  for (long n = 1; n <= total + 4; ++n) {
    for (int branch : {1, -1}) {
      std::complex<double> z = zero_seed_double(params, n, branch);
      if (z.imag() < 0) z = std::conj(z);
      seeds.push_back(z);
    }
  }
  std::sort(seeds.begin(), seeds.end(),
            [](const std::complex<double>& x, const std::complex<double>& y) {
              return x.imag() < y.imag();
            });
  seeds.erase(std::unique(seeds.begin(), seeds.end(),
                          [](const std::complex<double>& x,
                             const std::complex<double>& y) {
                            return std::abs(x - y) < 1e-6 * (1.0 + std::abs(x));
                          }),
              seeds.end());
  if (static_cast<long>(seeds.size()) < total)
    throw convergence_error("zeta_truncated: seed list shorter than requested tail");

  // The double pipeline must agree with the refined indexing.
  for (int k = 0; k < refined; ++k) {
    const std::complex<double> zk(zeros[static_cast<size_t>(k)].value.re().to_double(),
                                  zeros[static_cast<size_t>(k)].value.im().to_double());
    if (std::abs(zk - seeds[static_cast<size_t>(k)]) > 1.5)
      throw convergence_error("zeta_truncated: refined zeros and seed tail disagree");
  }

  double tail = 0.0;
  for (long k = refined; k < total; ++k)
    tail += 2.0 * std::real(std::pow(seeds[static_cast<size_t>(k)],
                                     -static_cast<double>(s)));

  TruncatedZeta out;
  out.value = head + BigFloat(tail, cfg.precision_bits);
  const double two_pi = 2.0 * 3.14159265358979323846;
  out.tail_bound = BigFloat(
      2.0 * std::pow(two_pi, -s) *
          std::pow(static_cast<double>(total), 1.0 - s) / (s - 1.0),
      64);
  out.refined_pairs = refined;
  out.seed_pairs = total - refined;
  return out;
}

}  // namespace hzeta
