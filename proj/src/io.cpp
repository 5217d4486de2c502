#include "hzeta/io.hpp"

#include <sstream>

#include <json.hpp>

namespace hzeta {

using ordered_json = nlohmann::ordered_json;

namespace {

int float_digits(const FloatCfg& cfg) {
  return std::max(2, static_cast<int>(cfg.precision_bits * 0.30103) - 1);
}

}  // namespace

std::string zeta_to_json(const ZetaTable& t) {
  ordered_json j;
  j["a"] = t.params.a.str();
  j["b"] = t.params.b.str();
  j["method"] = to_string(t.method);
  ordered_json values;
  for (int p = 2; p <= t.pmax; ++p) values[std::to_string(p)] = t.at(p).str();
  j["values"] = std::move(values);
  return j.dump();
}

std::string zeta_to_csv(const ZetaTable& t) {
  std::ostringstream os;
  os << "p,value\n";
  for (int p = 2; p <= t.pmax; ++p) os << p << "," << t.at(p).str() << "\n";
  return os.str();
}

ZetaTable zeta_from_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  const Params params(Rat::parse(j.at("a").get<std::string>()),
                      Rat::parse(j.at("b").get<std::string>()));
  const auto& values = j.at("values");
  int pmax = 1;
  for (const auto& item : values.items())
    pmax = std::max(pmax, std::stoi(item.key()));
  ZetaTable t{params, pmax, ZetaMethod::linear, {}};
  const std::string method = j.at("method").get<std::string>();
  if (method == "quadratic") t.method = ZetaMethod::quadratic;
  else if (method == "series-ratio") t.method = ZetaMethod::series_ratio;
  else if (method == "bernoulli") t.method = ZetaMethod::bernoulli;
  t.values.assign(static_cast<size_t>(pmax - 1), Rat(0));
  for (const auto& item : values.items())
    t.values[static_cast<size_t>(std::stoi(item.key()) - 2)] =
        Rat::parse(item.value().get<std::string>());
  return t;
}

std::string bern_to_json(const BernTable& t) {
  ordered_json j;
  j["a"] = t.params.a.str();
  j["b"] = t.params.b.str();
  ordered_json numbers = ordered_json::array();
  for (const Rat& v : t.numbers) numbers.push_back(v.str());
  j["bernoulli"] = std::move(numbers);
  return j.dump();
}

std::string bern_to_csv(const BernTable& t) {
  std::ostringstream os;
  os << "n,value\n";
  for (int n = 0; n <= t.nmax; ++n) os << n << "," << t.at(n).str() << "\n";
  return os.str();
}

std::string poly_to_json(const Params& params, const std::string& family,
                         int n, const Poly& p) {
  ordered_json j;
  j["a"] = params.a.str();
  j["b"] = params.b.str();
  j["family"] = family;
  j["n"] = n;
  ordered_json coeffs = ordered_json::array();
  for (int k = 0; k <= n; ++k) coeffs.push_back(p.coeff(k).str());
  j["coefficients"] = std::move(coeffs);
  return j.dump();
}

std::string poly_to_csv(const Poly& p) {
  std::ostringstream os;
  os << "k,coefficient\n";
  for (int k = 0; k <= std::max(p.degree(), 0); ++k)
    os << k << "," << p.coeff(k).str() << "\n";
  return os.str();
}

std::string zeros_to_json(const Params& params,
                          const std::vector<ZeroRecord>& zeros,
                          const FloatCfg& cfg) {
  const int digits = float_digits(cfg);
  ordered_json j;
  j["a"] = params.a.str();
  j["b"] = params.b.str();
  j["precision_bits"] = static_cast<long>(cfg.precision_bits);
  ordered_json list = ordered_json::array();
  for (const ZeroRecord& rec : zeros) {
    ordered_json item;
    item["n"] = rec.index;
    item["re"] = rec.value.re().str(digits);
    item["im"] = rec.value.im().str(digits);
    item["residual"] = rec.residual.str(6);
    item["iterations"] = rec.iterations;
    list.push_back(std::move(item));
  }
  j["zeros"] = std::move(list);
  return j.dump();
}

std::string zeros_to_csv(const std::vector<ZeroRecord>& zeros,
                         const FloatCfg& cfg) {
  const int digits = float_digits(cfg);
  std::ostringstream os;
  os << "n,re,im,residual\n";
  for (const ZeroRecord& rec : zeros)
    os << rec.index << "," << rec.value.re().str(digits) << ","
       << rec.value.im().str(digits) << "," << rec.residual.str(6) << "\n";
  return os.str();
}

std::string truncated_zeta_to_json(const Params& params, int s,
                                   const TruncatedZeta& t,
                                   const FloatCfg& cfg) {
  ordered_json j;
  j["a"] = params.a.str();
  j["b"] = params.b.str();
  j["s"] = s;
  j["precision_bits"] = static_cast<long>(cfg.precision_bits);
  j["value"] = t.value.str(float_digits(cfg));
  j["tail_bound"] = t.tail_bound.str(4);
  j["refined_pairs"] = t.refined_pairs;
  j["seed_pairs"] = t.seed_pairs;
  return j.dump();
}

std::string conj_report_to_json(const ConjReport& r) {
  ordered_json j;
  j["b_range"] = ordered_json::array({1, r.bmax});
  j["nmax"] = r.nmax;
  ordered_json alpha = ordered_json::array();
  for (const AlphaResult& a : r.alpha) {
    ordered_json item;
    item["b"] = a.b;
    if (a.conclusive) item["observed"] = a.observed;
    else item["observed"] = nullptr;
    item["predicted"] = a.predicted;
    item["agree"] = a.agree;
    alpha.push_back(std::move(item));
  }
  j["alpha"] = std::move(alpha);
  ordered_json violations = ordered_json::array();
  for (const PrimeViolation& v : r.violations) {
    ordered_json item;
    item["b"] = v.b;
    item["n"] = v.n;
    item["prime"] = v.prime.get_str();
    item["factored"] = v.factored;
    violations.push_back(std::move(item));
  }
  j["violations"] = std::move(violations);
  j["vsc_failures"] = r.vsc_failures;
  return j.dump();
}

std::string series_to_json(const Series& s) {
  ordered_json arr = ordered_json::array();
  for (const Rat& c : s.coeffs()) arr.push_back(c.str());
  return arr.dump();
}

}  // namespace hzeta
