#ifndef HZETA_IO_HPP
#define HZETA_IO_HPP

#include <string>
#include <vector>

#include "hzeta/bernoulli.hpp"
#include "hzeta/conjectures.hpp"
#include "hzeta/kummer.hpp"
#include "hzeta/poly.hpp"
#include "hzeta/series.hpp"
#include "hzeta/zeta.hpp"

namespace hzeta {

// All JSON writers produce deterministic, insertion-ordered documents with
// exact values as rational strings and floats as decimal strings tagged
// with their precision.

std::string zeta_to_json(const ZetaTable& t);
std::string zeta_to_csv(const ZetaTable& t);
// Round-trip reader for the zeta document.
ZetaTable zeta_from_json(const std::string& text);

std::string bern_to_json(const BernTable& t);
std::string bern_to_csv(const BernTable& t);

std::string poly_to_json(const Params& params, const std::string& family,
                         int n, const Poly& p);
std::string poly_to_csv(const Poly& p);

std::string zeros_to_json(const Params& params, const std::vector<ZeroRecord>& zeros,
                          const FloatCfg& cfg);
std::string zeros_to_csv(const std::vector<ZeroRecord>& zeros,
                         const FloatCfg& cfg);

std::string truncated_zeta_to_json(const Params& params, int s,
                                   const TruncatedZeta& t, const FloatCfg& cfg);

std::string conj_report_to_json(const ConjReport& r);

std::string series_to_json(const Series& s);

}  // namespace hzeta

#endif
