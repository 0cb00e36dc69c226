#include "cli_app.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "stieltjes/errors.hpp"
#include "stieltjes/related.hpp"
#include "stieltjes/stieltjes.hpp"
#include "stieltjes/verifier.hpp"
#include "stieltjes/zeta.hpp"

namespace stieltjes::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CliConfig {
  int precision_digits = kDefaultDigits;
  std::string tolerance = "1e-12";
  std::string output_format;
};

struct Options {
  std::string constant;
  std::string n;
  std::string x;
  std::optional<long> p;
  std::optional<long> q;
  std::string method;
  std::optional<int> prec_digits;
  std::string tol = "1e-12";
  std::string format;
  std::string report;
  std::string suite = "all";
  std::optional<long> terms;
};

const std::set<std::string> kConstants = {"gamma", "zeta_deriv0", "eta", "delta", "digamma", "loggamma", "dilcher"};

// "1.5", "pi", "e", "-0.5", "1/4"
struct Arg {
  Real value;
  std::string text;
  std::optional<std::pair<long, long>> fraction;
};

long parse_long(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string(what) + ": '" + s + "' is not an integer");
  }
}

Arg parse_arg(const std::string& s) {
  if (s == "pi") return {pi(), s, std::nullopt};
  if (s == "e") return {exp(Real(1)), s, std::nullopt};
  if (auto slash = s.find('/'); slash != std::string::npos) {
    long a = parse_long(s.substr(0, slash), "--x numerator");
    long b = parse_long(s.substr(slash + 1), "--x denominator");
    if (b == 0) throw UsageError("--x: zero denominator in '" + s + "'");
    return {Real(a) / Real(b), s, std::pair{a, b}};
  }
  try {
    return {Real(s), s, std::nullopt};
  } catch (const std::invalid_argument&) {
    throw UsageError("--x: '" + s + "' is not a number");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// "3", "0..4", "0,2,5"
std::vector<int> parse_orders(const std::string& s) {
  std::vector<int> out;
  if (auto dots = s.find(".."); dots != std::string::npos) {
    long lo = parse_long(s.substr(0, dots), "--n");
    long hi = parse_long(s.substr(dots + 2), "--n");
    for (long k = lo; k <= hi; ++k) out.push_back(static_cast<int>(k));
  } else {
    for (const std::string& item : split(s, ',')) out.push_back(static_cast<int>(parse_long(item, "--n")));
  }
  if (out.empty()) throw UsageError("--n: empty range '" + s + "'");
  return out;
}

CliConfig resolve_config(const Options& o) {
  CliConfig c;
  if (o.prec_digits) {
    c.precision_digits = *o.prec_digits;
  } else if (const char* env = std::getenv("STIELTJES_PREC_DIGITS"); env && *env) {
    c.precision_digits = static_cast<int>(parse_long(env, "STIELTJES_PREC_DIGITS"));
  }
  if (c.precision_digits < 2 || c.precision_digits > 100000) {
    throw UsageError("precision digits must be in 2..100000, got " + std::to_string(c.precision_digits));
  }
  c.tolerance = o.tol;
  c.output_format = o.format;
  return c;
}

Real parse_tolerance(const CliConfig& c) {
  Real tol;
  try {
    tol = Real(c.tolerance);
  } catch (const std::invalid_argument&) {
    throw UsageError("--tol: '" + c.tolerance + "' is not a number");
  }
  if (!(tol > 0)) throw UsageError("--tol must be positive");
  const int need = 2 * tolerance_digits(tol);
  if (c.precision_digits < need) {
    throw UsageError("precision digits (" + std::to_string(c.precision_digits) +
                     ") must be at least twice the tolerance digits (" + std::to_string(need / 2) + ")");
  }
  return tol;
}

// ---------------------------------------------------------------------------

struct Computed {
  SeriesValue value;
  Json params;
};

void require_x1(const Arg& x, const char* what) {
  if (x.value != 1) throw UsageError(std::string(what) + " is only defined at x = 1");
}

Computed evaluate(const std::string& constant, int n, const std::optional<Arg>& xarg, const Options& o,
                  const Real& tol) {
  Arg x = xarg ? *xarg : Arg{Real(1), "1", std::nullopt};
  if (!xarg && o.p && o.q) {
    x = {Real(*o.p) / Real(*o.q), std::to_string(*o.p) + "/" + std::to_string(*o.q), std::pair{*o.p, *o.q}};
  }
  Json params = Json::object();
  params["n"] = n;
  Computed c;
  const std::string& m = o.method;

  if (constant == "gamma") {
    params["x"] = x.text;
    if (m == "rational") {
      if (n != 1 || !x.fraction) throw UsageError("method rational needs n = 1 and x = p/q");
      c.value = gamma1_rational(RationalArg(x.fraction->first, x.fraction->second), tol);
    } else if (m == "alternating") {
      if (n != 1) throw UsageError("method alternating needs n = 1");
      require_x1(x, "method alternating");
      c.value = gamma1_alt(tol);
    } else {
      StieltjesQuery q{n, x.value, m.empty() ? StieltjesMethod::series_b : parse_method(m), tol};
      if (o.terms) q.limit_terms = *o.terms;
      c.value = gamma_n(q);
    }
  } else if (constant == "zeta_deriv0") {
    params["x"] = x.text;
    if (m == "diff") {
      if (n < 1) throw UsageError("method diff needs n >= 1");
      c.value = zeta_deriv0_diff(n - 1, x.value, tol);
    } else if (m.empty() || m == "full") {
      if (n == 0) {
        c.value = hurwitz_em(Real(0), x.value, tol);
      } else if (n <= 2) {
        SeriesValue base = zeta_deriv0_const(n, tol);
        SeriesValue d = zeta_deriv0_diff(n - 1, x.value, tol);
        c.value = {base.value + d.value, base.abs_err + d.abs_err, base.terms_used + d.terms_used, d.method};
      } else {
        throw UnsupportedError("the full value zeta^(n)(0,x) needs n <= 2; --method diff covers n <= 7");
      }
    } else {
      throw UsageError("zeta_deriv0 methods: full, diff");
    }
  } else if (constant == "eta") {
    EtaRoute route = m.empty() ? EtaRoute::from_gamma : parse_eta_route(m);
    std::int64_t K = o.terms.value_or(1'000'000);
    if (route == EtaRoute::series) params["K"] = K;
    c.value = eta(n, route, K, tol);
  } else if (constant == "delta") {
    std::int64_t N = o.terms.value_or(1000);
    params["N"] = N;
    c.value = delta(n, N);
  } else if (constant == "digamma") {
    params.erase("n");
    params["x"] = x.text;
    if (x.fraction && x.fraction->first > 0 && x.fraction->first < x.fraction->second && m != "series") {
      c.value = digamma_rational(RationalArg(x.fraction->first, x.fraction->second), tol);
    } else {
      c.value = digamma(x.value, tol);
    }
  } else if (constant == "loggamma") {
    params.erase("n");
    params["x"] = x.text;
    c.value = log_gamma(x.value, tol);
  } else if (constant == "dilcher") {
    params["x"] = x.text;
    if (m == "power") {
      if (n != 1) throw UsageError("method power needs n = 1");
      c.value = dilcher_series61(x.value, tol);
    } else if (m.empty() || m == "product") {
      c.value = dilcher_log_gamma_k(n, x.value, tol);
    } else {
      throw UsageError("dilcher methods: product, power");
    }
  } else {
    throw UsageError("unknown constant '" + constant + "'");
  }
  c.params = std::move(params);
  return c;
}

Json payload(const std::string& constant, const Computed& c, int digits) {
  Json j;
  j["constant"] = constant;
  j["params"] = c.params;
  j["value"] = to_string(c.value.value, digits);
  j["abs_err"] = to_string(c.value.abs_err, 6);
  j["terms_used"] = c.value.terms_used;
  j["method"] = c.value.method;
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string param_text(const Json& params, const char* key) {
  if (!params.contains(key)) return "";
  const Json& v = params[key];
  return v.is_string() ? v.get<std::string>() : v.dump();
}

void write_csv(std::ostream& out, const std::vector<Json>& rows) {
  out << "constant,n,x,value,abs_err,terms_used,method\n";
  for (const Json& r : rows) {
    out << csv_field(r["constant"].get<std::string>()) << ',' << csv_field(param_text(r["params"], "n")) << ','
        << csv_field(param_text(r["params"], "x")) << ',' << csv_field(r["value"].get<std::string>()) << ','
        << csv_field(r["abs_err"].get<std::string>()) << ',' << r["terms_used"].get<std::int64_t>() << ','
        << csv_field(r["method"].get<std::string>()) << '\n';
  }
}

void write_text(std::ostream& out, const Json& r) {
  out << r["constant"].get<std::string>();
  for (const auto& [k, v] : r["params"].items()) out << ' ' << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump());
  out << "\n  value      " << r["value"].get<std::string>() << "\n  abs_err    " << r["abs_err"].get<std::string>()
      << "\n  terms_used " << r["terms_used"].get<std::int64_t>() << "\n  method     "
      << r["method"].get<std::string>() << '\n';
}

void check_format(const std::string& f) {
  if (!f.empty() && f != "json" && f != "csv" && f != "text") throw UsageError("--format must be json, csv or text");
}

// ---------------------------------------------------------------------------

int cmd_compute(const Options& o, std::ostream& out) {
  CliConfig cfg = resolve_config(o);
  check_format(cfg.output_format);
  if (!kConstants.count(o.constant)) throw UsageError("unknown constant '" + o.constant + "'");
  PrecisionScope scope(cfg.precision_digits);
  Real tol = parse_tolerance(cfg);
  int n = o.n.empty() ? 0 : static_cast<int>(parse_long(o.n, "--n"));
  std::optional<Arg> x;
  if (!o.x.empty()) x = parse_arg(o.x);
  Json j = payload(o.constant, evaluate(o.constant, n, x, o, tol), cfg.precision_digits);
  const std::string fmt = cfg.output_format.empty() ? "json" : cfg.output_format;
  if (fmt == "json") {
    out << j.dump(2) << '\n';
  } else if (fmt == "csv") {
    write_csv(out, {j});
  } else {
    write_text(out, j);
  }
  return kExitOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  CliConfig cfg = resolve_config(o);
  check_format(cfg.output_format);
  if (!kConstants.count(o.constant)) throw UsageError("unknown constant '" + o.constant + "'");
  PrecisionScope scope(cfg.precision_digits);
  Real tol = parse_tolerance(cfg);
  std::vector<int> orders = o.n.empty() ? std::vector<int>{0} : parse_orders(o.n);
  std::vector<std::optional<Arg>> grid;
  if (o.x.empty()) {
    grid.push_back(std::nullopt);
  } else {
    for (const std::string& item : split(o.x, ',')) grid.push_back(parse_arg(item));
    if (grid.empty()) throw UsageError("--x: empty grid");
  }
  if (orders.size() * grid.size() > 10'000) throw UsageError("table limited to 10^4 cells");
  std::vector<Json> rows;
  for (int n : orders) {
    for (const auto& x : grid) {
      rows.push_back(payload(o.constant, evaluate(o.constant, n, x, o, tol), cfg.precision_digits));
    }
  }
  const std::string fmt = cfg.output_format.empty() ? "csv" : cfg.output_format;
  if (fmt == "json") {
    out << Json(rows).dump(2) << '\n';
  } else if (fmt == "csv") {
    write_csv(out, rows);
  } else {
    for (const Json& r : rows) write_text(out, r);
  }
  return kExitOk;
}

Json report_json(const VerifyReport& r) {
  Json inputs = Json::object();
  for (const auto& [k, v] : r.inputs) inputs[k] = v;
  Json j;
  j["check_id"] = r.check_id;
  j["inputs"] = inputs;
  j["residual"] = to_string(r.residual, 6);
  j["tolerance"] = to_string(r.tolerance, 6);
  j["passed"] = r.passed;
  j["elapsed_s"] = r.elapsed.count();
  j["note"] = r.note;
  return j;
}

int cmd_verify(const Options& o, std::ostream& out) {
  CliConfig cfg = resolve_config(o);
  check_format(cfg.output_format);
  std::set<std::string> selection;
  const std::vector<std::string> known = check_ids();
  for (const std::string& id : split(o.suite, ',')) {
    if (id == "all") {
      selection.insert(known.begin(), known.end());
    } else if (std::find(known.begin(), known.end(), id) == known.end()) {
      throw UsageError("unknown check id '" + id + "'");
    } else {
      selection.insert(id);
    }
  }
  PrecisionScope scope(cfg.precision_digits);
  std::vector<VerifyReport> reports = run_suite(selection);

  Json all = Json::array();
  for (const VerifyReport& r : reports) all.push_back(report_json(r));
  if (!o.report.empty()) {
    std::ofstream file(o.report);
    if (!file) throw UsageError("cannot write report to '" + o.report + "'");
    file << all.dump(2) << '\n';
  }
  std::size_t passed = std::count_if(reports.begin(), reports.end(), [](const VerifyReport& r) { return r.passed; });
  const std::string fmt = cfg.output_format.empty() ? "text" : cfg.output_format;
  if (fmt == "json") {
    out << all.dump(2) << '\n';
  } else if (fmt == "csv") {
    out << "check_id,inputs,residual,tolerance,passed,elapsed_s,note\n";
    for (const VerifyReport& r : reports) {
      out << csv_field(r.check_id) << ',' << csv_field(inputs_key(r)) << ',' << to_string(r.residual, 6) << ','
          << to_string(r.tolerance, 6) << ',' << (r.passed ? "true" : "false") << ',' << r.elapsed.count() << ','
          << csv_field(r.note) << '\n';
    }
  } else {
    for (const VerifyReport& r : reports) {
      out << (r.passed ? "PASS " : "FAIL ") << r.check_id << " [" << inputs_key(r)
          << "] residual=" << to_string(r.residual, 3) << " tol=" << to_string(r.tolerance, 3) << '\n';
    }
    out << passed << '/' << reports.size() << " checks passed\n";
  }
  return passed == reports.size() ? kExitOk : kExitFailed;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--prec-digits", o.prec_digits, "working precision in decimal digits");
  cmd->add_option("--format", o.format, "json, csv or text");
}

void add_params(CLI::App* cmd, Options& o) {
  cmd->add_option("constant", o.constant, "gamma, zeta_deriv0, eta, delta, digamma, loggamma or dilcher")->required();
  cmd->add_option("--x", o.x, "argument: decimal, p/q, pi or e (table: comma list)");
  cmd->add_option("--p", o.p, "numerator of a rational argument");
  cmd->add_option("--q", o.q, "denominator of a rational argument");
  cmd->add_option("--method", o.method, "evaluation route");
  cmd->add_option("--tol", o.tol, "target absolute error (default 1e-12)");
  cmd->add_option("--terms", o.terms, "truncation point for eta (series) and delta");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Stieltjes constants and Hurwitz zeta derivatives", "stieltjes"};
  app.require_subcommand(1);

  CLI::App* compute = app.add_subcommand("compute", "evaluate one constant");
  add_params(compute, o);
  compute->add_option("--n", o.n, "order");
  add_common(compute, o);

  CLI::App* table = app.add_subcommand("table", "evaluate a constant over an order range and argument grid");
  add_params(table, o);
  table->add_option("--n", o.n, "orders: a..b or a comma list");
  add_common(table, o);

  CLI::App* verify = app.add_subcommand("verify", "run identity checks");
  verify->add_option("--suite", o.suite, "comma-separated check ids, or all");
  verify->add_option("--report", o.report, "write the JSON report to this path");
  add_common(verify, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (compute->parsed()) return cmd_compute(o, out);
    if (table->parsed()) return cmd_table(o, out);
    return cmd_verify(o, out);
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  }
}

}  // namespace stieltjes::cli
