#pragma once

// Command implementations for the mlpade executable. Kept in a header so the
// test suite can drive them with string streams.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mlpade/io.hpp"
#include "mlpade/mlpade.hpp"

namespace mlpade::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kConditioning = 3, kNumeric = 4 };

inline int exit_code_for(Errc code) {
  switch (code) {
    case Errc::InvalidSpec:
    case Errc::DomainError:
      return kUsage;
    case Errc::IllConditioned:
      return kConditioning;
    default:
      return kNumeric;
  }
}

struct SpecFlags {
  double alpha = 0.0;
  double beta = 0.0;
  int m = 7;
  int n = 2;
};

struct Options {
  SpecFlags spec;
  bool json = false;
  bool csv = false;
  bool strict = false;
  bool no_timing = false;
  bool use_pfd = false;
  double x = 0.0;
  double y = 0.0;
  std::string matrix_file;
  std::string rhs_file;
  int unit = 0;
  std::string which = "error";
  std::string bench_case = "rde";
  double grid_step = 0.01;
  double t_start = 0.0;
  double t_stop = 10.0;
  double delta = 3.0 / 7.0;
  double a1 = 3.0;
  double a2 = 1.0;
  double k_alpha = 1.0;
  double x_loc = 0.5;
};

namespace detail {

inline void add_spec(CLI::App* cmd, SpecFlags& s, bool with_type = true) {
  cmd->add_option("--alpha", s.alpha, "alpha, 0 < alpha <= 1")->required();
  cmd->add_option("--beta", s.beta, "beta >= alpha")->required();
  if (with_type) {
    cmd->add_option("--m", s.m, "local matching order")->capture_default_str();
    cmd->add_option("--n", s.n, "asymptotic matching order")->capture_default_str();
  }
}

inline void add_format(CLI::App* cmd, Options& o) {
  auto* j = cmd->add_flag("--json", o.json, "JSON output");
  auto* c = cmd->add_flag("--csv", o.csv, "CSV output");
  j->excludes(c);
}

inline RationalApproximant build(const Options& o, std::ostream& err) {
  const auto spec = ApproximantSpec::make(o.spec.alpha, o.spec.beta, o.spec.m, o.spec.n);
  if (spec.weak_fit()) {
    err << "warning: the (5,4) approximant is inaccurate near the origin when beta = alpha; "
           "use a type with m >= n + 1\n";
  }
  auto r = RationalApproximant::construct(spec, o.strict);
  if (r.ill_conditioned()) {
    err << "warning: coefficient system is ill-conditioned (rcond "
        << format_double(r.cond_estimate()) << ")\n";
  }
  return r;
}

inline nlohmann::json with_schema(nlohmann::json j) {
  nlohmann::json out{{"schema", kSchema}};
  out.update(j);
  return out;
}

inline std::vector<std::vector<double>> read_csv_numbers(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::DomainError, "cannot open file " + path);
  }
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        std::size_t used = 0;
        row.push_back(std::stod(cell, &used));
      } catch (const std::exception&) {
        throw Error(Errc::DomainError, "not a number in " + path + ": '" + cell + "'");
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::vector<double> flatten(const std::vector<std::vector<double>>& rows) {
  std::vector<double> v;
  for (const auto& r : rows) v.insert(v.end(), r.begin(), r.end());
  return v;
}

inline std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += format_double(v[i]);
  }
  return s;
}

inline int cmd_coeffs(const Options& o, std::ostream& out, std::ostream& err) {
  const auto r = build(o, err);
  if (o.csv) {
    out << "poly,degree,coefficient\n";
    for (std::size_t i = 0; i < r.p().coeffs().size(); ++i) {
      out << "p," << i << ',' << format_double(r.p().coeffs()[i]) << '\n';
    }
    for (std::size_t i = 0; i < r.q().coeffs().size(); ++i) {
      out << "q," << i << ',' << format_double(r.q().coeffs()[i]) << '\n';
    }
    return kOk;
  }
  out << with_schema(to_json(r)).dump() << '\n';
  return kOk;
}

inline int cmd_eval(const Options& o, std::ostream& out, std::ostream& err) {
  const auto r = build(o, err);
  double v;
  if (o.use_pfd) {
    v = decompose(r, o.strict).eval(o.x);
  } else {
    v = r.eval(o.x);
  }
  if (o.json) {
    out << with_schema({{"x", o.x}, {"value", v}}).dump() << '\n';
  } else {
    out << format_double(v) << '\n';
  }
  return kOk;
}

inline int cmd_invert(const Options& o, std::ostream& out, std::ostream& err) {
  const auto r = build(o, err);
  const double x = r.spec().fourth_order() ? invert_fourth(r, o.y) : invert_r32(r, o.y);
  if (o.json) {
    out << with_schema({{"y", o.y}, {"x", x}}).dump() << '\n';
  } else {
    out << format_double(x) << '\n';
  }
  return kOk;
}

inline int cmd_pfd(const Options& o, std::ostream& out, std::ostream& err) {
  const auto r = build(o, err);
  const auto f = decompose(r, o.strict);
  if (!f.pairing_ok()) {
    err << "warning: poles are not in conjugate pairs; listing every pole\n";
  }
  if (o.csv) {
    out << "re_r,im_r,re_c,im_c\n";
    for (const auto& t : f.terms()) {
      out << join({t.pole.real(), t.pole.imag(), t.weight.real(), t.weight.imag()}) << '\n';
    }
    return kOk;
  }
  out << with_schema(to_json(f)).dump() << '\n';
  return kOk;
}

inline int cmd_matrix(const Options& o, std::ostream& out, std::ostream& err) {
  const auto rows = read_csv_numbers(o.matrix_file);
  const auto b = RealMatrix::from_rows(rows);
  if (!b.square() || b.rows() == 0) {
    throw Error(Errc::DomainError, "matrix must be square and non-empty");
  }
  const auto r = build(o, err);
  const auto f = decompose(r, o.strict);

  std::vector<double> rhs;
  if (!o.rhs_file.empty()) {
    rhs = flatten(read_csv_numbers(o.rhs_file));
  } else if (o.unit > 0) {
    if (static_cast<std::size_t>(o.unit) > b.rows()) {
      throw Error(Errc::DomainError, "--e index exceeds matrix size", o.unit);
    }
    rhs.assign(b.rows(), 0.0);
    rhs[o.unit - 1] = 1.0;
  }

  if (!rhs.empty()) {
    const auto v = mlf_action(b, f, rhs);
    if (o.json) {
      out << with_schema({{"action", v}}).dump() << '\n';
    } else {
      for (double x : v) out << format_double(x) << '\n';
    }
    return kOk;
  }
  const auto mf = mlf_matrix(b, f, true);
  if (o.json) {
    std::vector<std::vector<double>> m(b.rows(), std::vector<double>(b.cols()));
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) m[i][j] = mf.value(i, j);
    }
    out << with_schema({{"value", m}, {"max_imag", mf.max_imag}}).dump() << '\n';
  } else {
    for (std::size_t i = 0; i < b.rows(); ++i) {
      std::vector<double> row(b.cols());
      for (std::size_t j = 0; j < b.cols(); ++j) row[j] = mf.value(i, j);
      out << join(row) << '\n';
    }
  }
  return kOk;
}

inline int cmd_oracle(const Options& o, std::ostream& out) {
  const auto v = mlf_oracle_detailed(o.spec.alpha, o.spec.beta, o.x);
  if (o.json) {
    out << with_schema({{"x", o.x}, {"value", v.value}, {"method", to_string(v.method)}}).dump()
        << '\n';
  } else {
    out << format_double(v.value) << '\n';
  }
  return kOk;
}

inline std::vector<double> checked_grid(double start, double stop, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw Error(Errc::DomainError, "--grid-step must be positive", step);
  }
  if ((stop - start) / step + 1.0 < 10.0) {
    throw Error(Errc::DomainError, "grid too coarse: fewer than 10 points", step);
  }
  return uniform_grid(start, stop, step);
}

inline std::string label(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

inline int cmd_table(const Options& o, std::ostream& out) {
  const bool timing = !o.no_timing;
  const std::string tcol = timing ? ",runtime_seconds" : "";
  auto trow = [&](const EvalReport& r) { return timing ? "," + format_double(r.runtime_seconds) : ""; };

  if (o.which == "error") {
    const auto xs = checked_grid(0.0, 10.0, o.grid_step);
    const auto& cols = error_table_columns();
    out << "approximant";
    for (const auto& [a, b] : cols) out << ",ae_" << label(a) << '_' << label(b) << ",re_" << label(a) << '_' << label(b);
    out << '\n';
    for (const auto& t : approximant_types()) {
      out << 'R' << t.m << t.n;
      for (const auto& [a, b] : cols) {
        const auto rep = eval_error(construct(a, b, t.m, t.n), xs);
        out << ',' << format_double(rep.max_ae) << ',' << format_double(rep.max_re);
      }
      out << '\n';
    }
    return kOk;
  }
  if (o.which == "rde") {
    const auto ts = checked_grid(0.0, 10.0, o.grid_step);
    out << "alpha,max_ae,max_re" << tcol << '\n';
    for (double a : {0.5, 0.9}) {
      const auto r = run_reaction_diffusion(a, 0.5, ts);
      out << label(a) << ',' << format_double(r.max_ae) << ',' << format_double(r.max_re) << trow(r) << '\n';
    }
    return kOk;
  }
  if (o.which == "vie") {
    const auto ts = checked_grid(o.grid_step, 10.0, o.grid_step);
    out << "alpha,beta,max_ae,max_re" << tcol << '\n';
    for (const auto& [a, b] : {std::pair{0.6, 0.6}, std::pair{1.0, 1.5}}) {
      const auto r = run_vie(a, b, ts);
      out << label(a) << ',' << label(b) << ',' << format_double(r.max_ae) << ','
          << format_double(r.max_re) << trow(r) << '\n';
    }
    return kOk;
  }
  if (o.which == "bt" || o.which == "basset") {
    const auto ts = checked_grid(0.0, 50.0, o.grid_step);
    const auto r = o.which == "bt" ? run_bagley_torvik(3.0, 1.0, ts) : run_basset(3.0 / 7.0, ts);
    out << "approximant,max_ae,max_re" << tcol << '\n';
    out << "R72," << format_double(r.max_ae) << ',' << format_double(r.max_re) << trow(r) << '\n';
    return kOk;
  }
  throw Error(Errc::DomainError, "unknown table '" + o.which + "'");
}

inline int cmd_bench(const Options& o, std::ostream& out) {
  const ApproxType type{o.spec.m, o.spec.n};
  const EvalPath path = o.use_pfd ? EvalPath::PartialFractions : EvalPath::Direct;
  const auto ts = checked_grid(o.t_start, o.t_stop, o.grid_step);
  EvalReport r;
  nlohmann::json params;
  if (o.bench_case == "rde") {
    r = run_reaction_diffusion(o.spec.alpha, o.x_loc, ts, type, path);
    params = {{"alpha", o.spec.alpha}, {"x", o.x_loc}};
  } else if (o.bench_case == "vie") {
    r = run_vie(o.spec.alpha, o.spec.beta, ts, type, path);
    params = {{"alpha", o.spec.alpha}, {"beta", o.spec.beta}};
  } else if (o.bench_case == "ultraslow") {
    r = run_ultraslow(o.spec.alpha, o.k_alpha, o.x_loc, ts, type);
    params = {{"alpha", o.spec.alpha}, {"k_alpha", o.k_alpha}, {"x", o.x_loc}};
  } else if (o.bench_case == "bt") {
    r = run_bagley_torvik(o.a1, o.a2, ts, type,
                          o.use_pfd ? EvalPath::PartialFractions : EvalPath::Direct);
    params = {{"a1", o.a1}, {"a2", o.a2}};
  } else if (o.bench_case == "basset") {
    r = run_basset(o.delta, ts, type, o.use_pfd ? EvalPath::PartialFractions : EvalPath::Direct);
    params = {{"delta", o.delta}};
  } else {
    throw Error(Errc::DomainError, "unknown case '" + o.bench_case + "'");
  }
  params["m"] = type.m;
  params["n"] = type.n;
  if (o.json) {
    out << with_schema(report_summary(o.bench_case, params, r, !o.no_timing)).dump() << '\n';
  } else {
    out << report_csv(r);
  }
  return kOk;
}

}  // namespace detail

/// Parses argv and runs one subcommand. Returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Global Pade approximants of the Mittag-Leffler function", "mlpade"};
  app.require_subcommand(1);
  Options o;

  auto* coeffs = app.add_subcommand("coeffs", "print approximant coefficients");
  detail::add_spec(coeffs, o.spec);
  detail::add_format(coeffs, o);
  coeffs->add_flag("--strict", o.strict, "fail on an ill-conditioned system");

  auto* eval = app.add_subcommand("eval", "evaluate an approximant at x");
  detail::add_spec(eval, o.spec);
  eval->add_option("--x", o.x, "x >= 0")->required();
  eval->add_flag("--pfd", o.use_pfd, "evaluate through the pole/weight form");
  eval->add_flag("--json", o.json, "JSON output");
  eval->add_flag("--strict", o.strict, "fail on an ill-conditioned system");

  auto* invert = app.add_subcommand("invert", "approximate inverse at y");
  detail::add_spec(invert, o.spec);
  invert->add_option("--y", o.y, "0 < y <= 1/Gamma(beta)")->required();
  invert->add_flag("--json", o.json, "JSON output");
  invert->add_flag("--strict", o.strict, "fail on an ill-conditioned system");

  auto* pfd = app.add_subcommand("pfd", "poles and weights");
  detail::add_spec(pfd, o.spec);
  detail::add_format(pfd, o);
  pfd->add_flag("--strict", o.strict, "fail on unpaired poles or ill-conditioning");

  auto* matrix = app.add_subcommand("matrix", "matrix Mittag-Leffler function");
  detail::add_spec(matrix, o.spec);
  matrix->add_option("--matrix", o.matrix_file, "CSV file, one matrix row per line")
      ->required()
      ->check(CLI::ExistingFile);
  auto* rhs = matrix->add_option("--rhs", o.rhs_file, "CSV file with a vector")
                  ->check(CLI::ExistingFile);
  matrix->add_option("--e", o.unit, "apply to the K-th unit vector (1-based)")->excludes(rhs);
  matrix->add_flag("--json", o.json, "JSON output");
  matrix->add_flag("--strict", o.strict, "fail on unpaired poles or ill-conditioning");

  auto* oracle = app.add_subcommand("oracle", "reference value of E(-x)");
  detail::add_spec(oracle, o.spec, false);
  oracle->add_option("--x", o.x, "x >= 0")->required();
  oracle->add_flag("--json", o.json, "JSON output");

  auto* table = app.add_subcommand("table", "reproduce an error table as CSV");
  table->add_option("--which", o.which, "error, rde, vie, bt or basset")
      ->check(CLI::IsMember({"error", "rde", "vie", "bt", "basset"}))
      ->capture_default_str();
  table->add_option("--grid-step", o.grid_step, "grid spacing")->capture_default_str();
  table->add_flag("--no-timing", o.no_timing, "omit runtimes");

  auto* bench = app.add_subcommand("bench", "run one application benchmark");
  bench->add_option("--case", o.bench_case, "rde, vie, ultraslow, bt or basset")
      ->check(CLI::IsMember({"rde", "vie", "ultraslow", "bt", "basset"}))
      ->capture_default_str();
  bench->add_option("--alpha", o.spec.alpha, "alpha (rde, vie, ultraslow)");
  bench->add_option("--beta", o.spec.beta, "beta (vie)");
  bench->add_option("--m", o.spec.m, "approximant m")->capture_default_str();
  bench->add_option("--n", o.spec.n, "approximant n")->capture_default_str();
  bench->add_option("--x", o.x_loc, "spatial location (rde, ultraslow)")->capture_default_str();
  bench->add_option("--k", o.k_alpha, "diffusion constant (ultraslow)")->capture_default_str();
  bench->add_option("--delta", o.delta, "Basset delta")->capture_default_str();
  bench->add_option("--a1", o.a1, "Bagley-Torvik a1")->capture_default_str();
  bench->add_option("--a2", o.a2, "Bagley-Torvik a2")->capture_default_str();
  bench->add_option("--t-start", o.t_start, "first grid point")->capture_default_str();
  bench->add_option("--t-stop", o.t_stop, "last grid point")->capture_default_str();
  bench->add_option("--grid-step", o.grid_step, "grid spacing")->capture_default_str();
  bench->add_flag("--pfd", o.use_pfd, "evaluate through the pole/weight form");
  bench->add_flag("--json", o.json, "JSON summary instead of CSV");
  bench->add_flag("--no-timing", o.no_timing, "omit runtime from the summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*coeffs) return detail::cmd_coeffs(o, out, err);
    if (*eval) return detail::cmd_eval(o, out, err);
    if (*invert) return detail::cmd_invert(o, out, err);
    if (*pfd) return detail::cmd_pfd(o, out, err);
    if (*matrix) return detail::cmd_matrix(o, out, err);
    if (*oracle) return detail::cmd_oracle(o, out);
    if (*table) return detail::cmd_table(o, out);
    if (*bench) return detail::cmd_bench(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumeric;
  }
  return kUsage;
}

}  // namespace mlpade::cli
