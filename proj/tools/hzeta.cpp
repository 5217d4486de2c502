// Command-line front end: exact zeta/Bernoulli tables, polynomial families,
// refined Kummer zeros, truncated numeric sums, conjecture scans, and a
// one-shot cross-verification battery.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hzeta/bernoulli.hpp"
#include "hzeta/conjectures.hpp"
#include "hzeta/errors.hpp"
#include "hzeta/exact_core.hpp"
#include "hzeta/io.hpp"
#include "hzeta/kummer.hpp"
#include "hzeta/series.hpp"
#include "hzeta/zeta.hpp"

namespace {

using namespace hzeta;

mpfr_prec_t default_precision_bits() {
  if (const char* env = std::getenv("HZETA_PRECISION_BITS")) {
    const long bits = std::atol(env);
    if (bits >= 53) return static_cast<mpfr_prec_t>(bits);
  }
  return 256;
}

Params make_params(const std::string& a, const std::string& b) {
  return Params(Rat::parse(a), Rat::parse(b));
}

int run_zeta(const std::string& a, const std::string& b, int pmax,
             const std::string& method, const std::string& format) {
  const Params params = make_params(a, b);
  ZetaTable t = method == "quadratic"
                    ? zeta_quadratic(params, pmax, zeta_at_2(params))
                : method == "series" ? zeta_series_ratio(params, pmax)
                                     : zeta_linear(params, pmax);
  if (format == "csv") {
    std::cout << zeta_to_csv(t);
  } else if (format == "plain") {
    for (int p = 2; p <= pmax; ++p)
      std::cout << "zeta(" << p << ") = " << t.at(p) << "\n";
  } else {
    std::cout << zeta_to_json(t) << "\n";
  }
  return 0;
}

int run_bernoulli(const std::string& a, const std::string& b, int nmax,
                  const std::string& format) {
  const BernTable t = bern_numbers(make_params(a, b), nmax);
  if (format == "csv") {
    std::cout << bern_to_csv(t);
  } else if (format == "plain") {
    for (int n = 0; n <= nmax; ++n)
      std::cout << "B_" << n << " = " << t.at(n) << "\n";
  } else {
    std::cout << bern_to_json(t) << "\n";
  }
  return 0;
}

int run_poly(const std::string& a, const std::string& b, int n,
             const std::string& family, const std::string& format) {
  const Params params = make_params(a, b);
  const Poly p = family == "C" ? companion_poly(params, n)
                               : bern_poly(params, n);
  if (format == "csv") std::cout << poly_to_csv(p);
  else if (format == "plain") std::cout << p.str() << "\n";
  else std::cout << poly_to_json(params, family, n, p) << "\n";
  return 0;
}

int run_zeros(const std::string& a, const std::string& b, int pairs,
              const FloatCfg& cfg, const std::string& format) {
  const Params params = make_params(a, b);
  const auto zeros = zero_list(params, pairs, cfg);
  if (format == "csv") {
    std::cout << zeros_to_csv(zeros, cfg);
  } else if (format == "plain") {
    for (const auto& rec : zeros)
      std::cout << rec.index << ": " << rec.value.str(20)
                << "  residual " << rec.residual.str(4) << "\n";
  } else {
    std::cout << zeros_to_json(params, zeros, cfg) << "\n";
  }
  return 0;
}

int run_zeta_num(const std::string& a, const std::string& b, int s, int pairs,
                 long tail, const FloatCfg& cfg, const std::string& format) {
  const Params params = make_params(a, b);
  if (tail <= 0) tail = std::max(10000L, 200L * pairs);
  const TruncatedZeta t = zeta_truncated(params, s, pairs, tail, cfg);
  if (format == "plain") {
    std::cout << "zeta(" << s << ") ~= " << t.value.str(20) << "  (tail bound "
              << t.tail_bound.str(4) << ", " << t.refined_pairs
              << " refined pairs + " << t.seed_pairs << " seed pairs)\n";
  } else {
    std::cout << truncated_zeta_to_json(params, s, t, cfg) << "\n";
  }
  return 0;
}

int run_conjecture(long bmax, int nmax, const std::string& format) {
  const ConjReport r = conjecture_scan(bmax, nmax);
  if (format == "plain") {
    for (const auto& a : r.alpha)
      std::cout << "b=" << a.b << " observed="
                << (a.conclusive ? std::to_string(a.observed) : "?")
                << " predicted=" << a.predicted
                << (a.agree ? " ok" : " MISMATCH") << "\n";
    std::cout << r.violations.size() << " prime bound violations, "
              << r.vsc_failures.size() << " classical denominator failures\n";
  } else {
    std::cout << conj_report_to_json(r) << "\n";
  }
  return r.clean() ? 0 : 1;
}

int run_verify(const std::string& a, const std::string& b, int pmax) {
  const Params params = make_params(a, b);
  bool all = true;
  auto row = [&](const std::string& name, bool pass, const std::string& range) {
    all = all && pass;
    std::cout << (pass ? "PASS  " : "FAIL  ") << name;
    for (size_t i = name.size(); i < 38; ++i) std::cout << ' ';
    std::cout << range << "\n";
  };

  const ZetaTable lin = zeta_linear(params, pmax);
  const ZetaTable quad = zeta_quadratic(params, pmax, zeta_at_2(params));
  const ZetaTable ser = zeta_series_ratio(params, pmax);
  const ZetaSmall small = zeta_closed_small(params);
  row("zeta closed forms (p=2,3,4)",
      pmax >= 4 && lin.at(2) == small.z2 && lin.at(3) == small.z3 &&
          lin.at(4) == small.z4,
      "p = 2..4");
  row("zeta linear = quadratic", lin.values == quad.values,
      "p = 2.." + std::to_string(pmax));
  row("zeta linear = series-ratio", lin.values == ser.values,
      "p = 2.." + std::to_string(pmax));

  const BernTable bern = bern_numbers(params, pmax);
  row("bernoulli-zeta recurrence",
      zeta_from_bernoulli_check(params, pmax, bern.numbers, lin).all_pass(),
      "n = 2.." + std::to_string(pmax));

  const bool howard_family = params.a.is_one() && params.b.is_integer();
  if (howard_family) {
    const long b_int = params.b.to_long();
    row("integer-b zeta link", bern_zeta_relation_check(b_int, pmax).all_pass(),
        "n = 0.." + std::to_string(pmax));
    row("integer-b recurrence table",
        bern_howard(b_int, pmax).numbers == bern.numbers,
        "n = 0.." + std::to_string(pmax));
    const int kmax = std::min(pmax, 12);
    row("forward-difference recursion", dilcher_check(b_int, kmax).all_pass(),
        "k = 0.." + std::to_string(kmax));
  }

  const int poly_n = std::min(pmax, 12);
  row("change of basis", change_of_basis_check(params, poly_n).all_pass(),
      "n = 0.." + std::to_string(poly_n));
  row("reflection symmetry", symmetry_check(params, poly_n).all_pass(),
      "n = 0.." + std::to_string(poly_n));
  const int conj_n = std::min(pmax - 1, 10);
  row("conjugate recurrences",
      conjugate_recurrence_check(params, conj_n, lin).all_pass(),
      "n = 0.." + std::to_string(conj_n - 1));

  const CumulantSeq beta_k = moments_to_cumulants(beta_moments(params, pmax));
  const CumulantSeq zero_k = moments_to_cumulants(bern.numbers);
  bool cumulants_ok = beta_k.at(1) == params.a / params.sum() &&
                      zero_k.at(1) == -(params.a / params.sum());
  Rat fact(1);
  for (int p = 2; p <= pmax; ++p) {
    fact *= Rat(p - 1);
    cumulants_ok = cumulants_ok && beta_k.at(p) == -fact * lin.at(p) &&
                   zero_k.at(p) == -beta_k.at(p);
  }
  row("cumulant identities", cumulants_ok, "p = 1.." + std::to_string(pmax));

  bool conjugacy_ok = true;
  const std::vector<Rat> mom = beta_moments(params, pmax);
  for (int n = 0; n <= pmax; ++n) {
    Rat acc(0);
    for (int k = 0; k <= n; ++k)
      acc += binom(static_cast<unsigned long>(n), static_cast<unsigned long>(k)) *
             bern.at(k) * mom[static_cast<size_t>(n - k)];
    conjugacy_ok = conjugacy_ok && acc == (n == 0 ? Rat(1) : Rat(0));
  }
  row("conjugacy moment identity", conjugacy_ok, "n = 0.." + std::to_string(pmax));

  std::cout << (all ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact hypergeometric zeta and Bernoulli tables with numeric"
               " cross-validation through Kummer-function zeros"};
  app.require_subcommand(1);

  std::string a = "1", b = "1", method = "linear", family = "B", format = "json";
  int pmax = 10, nmax = 16, n = 4, pairs = 10, s = 2;
  long bmax = 20, tail = 0;
  FloatCfg cfg;
  cfg.precision_bits = default_precision_bits();
  long precision_bits = cfg.precision_bits;
  double tol = cfg.newton_tol;

  auto add_params = [&](CLI::App* cmd) {
    cmd->add_option("--a", a, "first parameter, positive rational p/q");
    cmd->add_option("--b", b, "second parameter, positive rational p/q");
  };

  CLI::App* zeta_cmd = app.add_subcommand("zeta", "exact zeta table");
  add_params(zeta_cmd);
  zeta_cmd->add_option("--pmax", pmax, "largest argument")->check(CLI::Range(2, 100000));
  zeta_cmd->add_option("--method", method, "linear|quadratic|series")
      ->check(CLI::IsMember({"linear", "quadratic", "series"}));
  zeta_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "plain"}));

  CLI::App* bern_cmd = app.add_subcommand("bernoulli", "exact Bernoulli numbers");
  add_params(bern_cmd);
  bern_cmd->add_option("--nmax", nmax)->check(CLI::Range(0, 100000));
  bern_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "plain"}));

  CLI::App* poly_cmd = app.add_subcommand("poly", "polynomial families");
  add_params(poly_cmd);
  poly_cmd->add_option("--n", n)->check(CLI::Range(0, 10000));
  poly_cmd->add_option("--family", family)->check(CLI::IsMember({"B", "C"}));
  poly_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "plain"}));

  CLI::App* zeros_cmd = app.add_subcommand("zeros", "refined complex zeros");
  add_params(zeros_cmd);
  zeros_cmd->add_option("--pairs", pairs, "number of conjugate pairs")
      ->check(CLI::Range(1, 100000));
  zeros_cmd->add_option("--precision-bits", precision_bits)->check(CLI::Range(53L, 1L << 20));
  zeros_cmd->add_option("--tol", tol, "residual tolerance");
  zeros_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "plain"}));

  CLI::App* num_cmd = app.add_subcommand("zeta-num", "truncated numeric zero sum");
  add_params(num_cmd);
  num_cmd->add_option("--s", s)->check(CLI::Range(2, 64));
  num_cmd->add_option("--pairs", pairs, "refined conjugate pairs")
      ->check(CLI::Range(1, 100000));
  num_cmd->add_option("--tail", tail, "total pairs incl. asymptotic tail (0 = auto)");
  num_cmd->add_option("--precision-bits", precision_bits)->check(CLI::Range(53L, 1L << 20));
  num_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "plain"}));

  CLI::App* conj_cmd = app.add_subcommand("conjecture", "denominator conjecture scan");
  conj_cmd->add_option("--bmax", bmax)->check(CLI::Range(1L, 100000L));
  conj_cmd->add_option("--nmax", nmax)->check(CLI::Range(1, 100000));
  conj_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "plain"}));

  CLI::App* verify_cmd = app.add_subcommand("verify", "cross-check battery");
  add_params(verify_cmd);
  verify_cmd->add_option("--pmax", pmax)->check(CLI::Range(4, 1000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  cfg.precision_bits = static_cast<mpfr_prec_t>(precision_bits);
  cfg.newton_tol = tol;

  try {
    if (zeta_cmd->parsed()) return run_zeta(a, b, pmax, method, format);
    if (bern_cmd->parsed()) return run_bernoulli(a, b, nmax, format);
    if (poly_cmd->parsed()) return run_poly(a, b, n, family, format);
    if (zeros_cmd->parsed()) return run_zeros(a, b, pairs, cfg, format);
    if (num_cmd->parsed()) return run_zeta_num(a, b, s, pairs, tail, cfg, format);
    if (conj_cmd->parsed()) return run_conjecture(bmax, nmax, format);
    if (verify_cmd->parsed()) return run_verify(a, b, pmax);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
