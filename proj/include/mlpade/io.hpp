#pragma once

// JSON and CSV renderings of approximants, pole/weight forms and reports.
// CSV numbers use 17 significant digits; JSON numbers use the shortest form
// that round-trips.

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include <json.hpp>

#include "mlpade/bench.hpp"
#include "mlpade/pade.hpp"
#include "mlpade/pfd.hpp"

namespace mlpade {

inline constexpr const char* kSchema = "ml-pade/1";

inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline nlohmann::json to_json(const RationalApproximant& r) {
  const auto& s = r.spec();
  return {{"alpha", s.alpha()},
          {"beta", s.beta()},
          {"m", s.m()},
          {"n", s.n()},
          {"regime", to_string(s.regime())},
          {"p", r.p().coeffs()},
          {"q", r.q().coeffs()},
          {"scaling_constant", r.scaling_constant()},
          {"cond_estimate", r.cond_estimate()}};
}

inline nlohmann::json to_json(const PartialFractionForm& f) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& t : f.terms()) {
    pairs.push_back({{"re_r", t.pole.real()},
                     {"im_r", t.pole.imag()},
                     {"re_c", t.weight.real()},
                     {"im_c", t.weight.imag()}});
  }
  return {{"pairs", pairs}, {"pairing_ok", f.pairing_ok()}};
}

/// Summary document; runtime omitted when include_timing is false so output
/// is byte-identical between runs.
inline nlohmann::json report_summary(const std::string& name, const nlohmann::json& params,
                                     const EvalReport& r, bool include_timing) {
  nlohmann::json j{{"case", name}, {"params", params}, {"max_ae", r.max_ae}, {"max_re", r.max_re}};
  if (include_timing) j["runtime_seconds"] = r.runtime_seconds;
  return j;
}

inline std::string report_csv(const EvalReport& r) {
  std::ostringstream os;
  os << "t,approx,exact,abs_err,rel_err\n";
  for (std::size_t i = 0; i < r.size(); ++i) {
    os << format_double(r.grid[i]) << ',' << format_double(r.approx[i]) << ','
       << format_double(r.exact[i]) << ',' << format_double(r.abs_err[i]) << ','
       << format_double(r.rel_err[i]) << '\n';
  }
  return os.str();
}

}  // namespace mlpade
