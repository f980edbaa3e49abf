#include "degbell/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "degbell/identities.hpp"
#include "degbell/numbers.hpp"
#include "degbell/text.hpp"

namespace degbell {

namespace {

constexpr std::string_view kFamilies[] = {"stirling1", "stirling2", "bracket", "bernoulli", "bell"};
constexpr std::string_view kSeriesNames[] = {"elam", "loglam", "bellgf", "bernoulligf"};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string render_value(const LambdaPoly& value, const std::optional<Rational>& lambda) {
  return lambda ? lambda_poly_eval(value, *lambda).str() : to_ascii(value);
}

std::optional<Rational> parse_lambda_flag(const std::string& text) {
  if (text == "sym") {
    return std::nullopt;
  }
  try {
    return Rational::parse(text);
  } catch (const ParseError&) {
    throw UsageError("lambda must be 'sym' or an exact rational p/q, got '" + text + "'");
  }
}

Rational parse_rational_flag(const std::string& name, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const ParseError&) {
    throw UsageError(name + " must be an exact rational p/q, got '" + text + "'");
  }
}

OutputFormat parse_format_flag(const std::string& text) {
  const auto format = parse_output_format(text);
  if (!format) {
    throw UsageError("format must be csv, json or pretty, got '" + text + "'");
  }
  return *format;
}

template <std::size_t N>
std::string joined(const std::string_view (&names)[N]) {
  std::string out;
  for (std::size_t i = 0; i < N; ++i) {
    out += (i == 0 ? "" : ", ") + std::string(names[i]);
  }
  return out;
}

std::string catalog_keys() {
  std::string out = "all";
  for (IdentityId id : identity_catalog()) {
    out += ", " + std::string(identity_name(id));
  }
  return out;
}

struct TableArgs {
  std::string family;
  int n_max = 10;
  std::string lambda = "sym";
  std::string format = "csv";
};

struct EvalArgs {
  int n = 0;
  std::string x;
  std::string lambda;
  int dobinski_terms = 0;
};

struct VerifyArgs {
  std::string identity;
  int n_max = 10;
  long order = -1;
  std::string format = "pretty";
  std::string perturb;
};

struct SeriesArgs {
  std::string which;
  long order = -1;
  std::string format = "json";
};

int cmd_table(const TableArgs& a, std::ostream& out) {
  const auto lambda = parse_lambda_flag(a.lambda);
  const OutputFormat format = parse_format_flag(a.format);
  const Table table = make_table(a.family, a.n_max, lambda);
  switch (format) {
    case OutputFormat::csv:
      write_table_csv(out, table);
      break;
    case OutputFormat::json:
      write_table_json(out, table);
      break;
    case OutputFormat::pretty:
      write_table_pretty(out, table);
      break;
  }
  return kExitOk;
}

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  if (a.n < 0) {
    throw UsageError("n must be non-negative");
  }
  if (a.lambda == "sym") {
    throw UsageError("eval needs a numeric lambda");
  }
  const Rational x = parse_rational_flag("x", a.x);
  const Rational lam = parse_rational_flag("lambda", a.lambda);
  const Rational exact = xpoly_eval(shared_tables(a.n)->bell(a.n), x, lam);
  out << exact.str() << '\n';
  if (a.dobinski_terms > 0) {
    const double numeric = bell_dobinski_numeric(a.n, x.to_double(), lam.to_double(), a.dobinski_terms);
    std::ostringstream line;
    line << std::setprecision(17) << "exact " << exact.to_double() << " dobinski " << numeric << " terms "
         << a.dobinski_terms;
    out << line.str() << '\n';
  }
  return kExitOk;
}

// "n,k": tables with S2(n,k) increased by one.
std::shared_ptr<const NumberTables> perturbed_tables(const std::string& spec, int n_max) {
  const auto comma = spec.find(',');
  int n = -1;
  int k = -1;
  try {
    std::size_t used_n = 0;
    std::size_t used_k = 0;
    n = std::stoi(spec.substr(0, comma), &used_n);
    k = std::stoi(spec.substr(comma + 1), &used_k);
    if (comma == std::string::npos || used_n != comma || used_k != spec.size() - comma - 1) {
      n = -1;
    }
  } catch (const std::exception&) {
    n = -1;
  }
  const int rows = IdentityHarness::required_rows(n_max);
  if (n < 0 || n > rows || k < 0 || k > n) {
    throw UsageError("perturb-stirling2 expects n,k with 0 <= k <= n <= " + std::to_string(rows) + ", got '" + spec +
                     "'");
  }
  const NumberTables clean(rows);
  return std::make_shared<const NumberTables>(clean.with_stirling2_entry(n, k, clean.stirling2(n, k) + LambdaPoly(1)));
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const OutputFormat format = parse_format_flag(a.format);
  if (a.identity != "all" && !identity_from_name(a.identity)) {
    throw UsageError("unknown identity '" + a.identity + "'; valid keys: " + catalog_keys());
  }
  if (a.n_max < 1) {
    throw UsageError("n-max must be at least 1");
  }
  const std::size_t order =
      a.order >= 0 ? static_cast<std::size_t>(a.order) : capped_default_order(default_series_order(a.n_max));
  IdentityHarness harness;
  if (!a.perturb.empty()) {
    harness = IdentityHarness(perturbed_tables(a.perturb, a.n_max));
  }
  std::vector<VerifyReport> reports;
  if (a.identity == "all") {
    for (IdentityId id : identity_catalog()) {
      if (is_series_identity(id) && order < static_cast<std::size_t>(a.n_max) + 2) {
        throw UsageError("series order " + std::to_string(order) + " is below n-max + 2");
      }
    }
    reports = harness.verify_all(a.n_max, order);
  } else {
    reports.push_back(harness.verify(a.identity, a.n_max, order));
  }
  switch (format) {
    case OutputFormat::csv:
      write_reports_csv(out, reports);
      break;
    case OutputFormat::json:
      write_reports_json(out, reports);
      break;
    case OutputFormat::pretty:
      write_reports_pretty(out, reports);
      break;
  }
  for (const auto& r : reports) {
    if (!r.pass) {
      err << "identity " << r.identity << " failed\n";
    }
  }
  const bool all_pass = std::all_of(reports.begin(), reports.end(), [](const VerifyReport& r) { return r.pass; });
  return all_pass ? kExitOk : kExitFailure;
}

int cmd_series(const SeriesArgs& a, std::ostream& out) {
  const OutputFormat format = parse_format_flag(a.format);
  const std::size_t order =
      a.order >= 0 ? static_cast<std::size_t>(a.order) : capped_default_order(kDefaultSeriesOrder);
  const Series series = make_series(a.which, order);
  switch (format) {
    case OutputFormat::csv:
      write_series_csv(out, series);
      break;
    case OutputFormat::json:
      write_series_json(out, series);
      break;
    case OutputFormat::pretty:
      write_series_pretty(out, series);
      break;
  }
  return kExitOk;
}

}  // namespace

Table make_table(std::string_view family, int n_max, const std::optional<Rational>& lambda) {
  if (n_max < 0) {
    throw std::invalid_argument("n-max must be non-negative");
  }
  const auto tables = shared_tables(n_max);
  Table table;
  if (family == "bernoulli") {
    table.triangular = false;
    for (int n = 0; n <= n_max; ++n) {
      table.rows.push_back(TableRow{n, std::nullopt, render_value(tables->bernoulli(n), lambda)});
    }
    return table;
  }
  if (family == "bell") {
    for (int n = 0; n <= n_max; ++n) {
      const XPoly& bell = tables->bell(n);
      LambdaPoly at_one;
      for (int k = 0; k <= n; ++k) {
        const LambdaPoly& c = bell.coeff(static_cast<std::size_t>(k));
        table.rows.push_back(TableRow{n, k, render_value(c, lambda)});
        at_one += c;
      }
      table.rows.push_back(TableRow{n, std::nullopt, render_value(at_one, lambda)});
    }
    return table;
  }
  const LambdaPoly& (NumberTables::*entry)(int, int) const = nullptr;
  if (family == "stirling1") {
    entry = &NumberTables::stirling1;
  } else if (family == "stirling2") {
    entry = &NumberTables::stirling2;
  } else if (family == "bracket") {
    entry = &NumberTables::bracket;
  } else {
    throw std::invalid_argument("unknown family '" + std::string(family) + "'; valid families: " +
                                joined(kFamilies));
  }
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      table.rows.push_back(TableRow{n, k, render_value(((*tables).*entry)(n, k), lambda)});
    }
  }
  return table;
}

Series make_series(std::string_view which, std::size_t order) {
  if (which == "elam") {
    return e_lambda_series(XPoly(1), order);
  }
  if (which == "loglam") {
    if (order == 0) {
      return Series(0);
    }
    return log_lambda_series(order);
  }
  if (which == "bellgf") {
    const Series shifted = e_lambda_series(XPoly(1), order) - Series::constant(XPoly(1), order);
    return series_exp(shifted.times(x_var()));
  }
  if (which == "bernoulligf") {
    const Series shifted =
        (e_lambda_series(XPoly(1), order + 1) - Series::constant(XPoly(1), order + 1)).divided_by_t();
    return series_recip_unit(shifted);
  }
  throw std::invalid_argument("unknown series '" + std::string(which) + "'; valid names: " + joined(kSeriesNames));
}

std::size_t capped_default_order(std::size_t order) {
  const char* cap = std::getenv(kSeriesOrderCapEnv);
  if (cap == nullptr || *cap == '\0') {
    return order;
  }
  char* end = nullptr;
  const long value = std::strtol(cap, &end, 10);
  if (*end != '\0' || value < 0) {
    return order;
  }
  return std::min(order, static_cast<std::size_t>(value));
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact degenerate Bell, Stirling and Bernoulli toolkit", "degbell"};
  app.require_subcommand(1);

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "Emit a number table");
  table->add_option("family", table_args.family, "stirling1, stirling2, bracket, bernoulli or bell")->required();
  table->add_option("--n-max", table_args.n_max, "Last row")->capture_default_str();
  table->add_option("--lambda", table_args.lambda, "'sym' or an exact rational p/q")->capture_default_str();
  table->add_option("--format", table_args.format, "csv, json or pretty")->capture_default_str();

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate a degenerate Bell polynomial exactly");
  eval->add_option("--n", eval_args.n, "Index")->required();
  eval->add_option("--x", eval_args.x, "Exact rational argument")->required();
  eval->add_option("--lambda", eval_args.lambda, "Exact rational lambda")->required();
  eval->add_option("--dobinski-terms", eval_args.dobinski_terms, "Also print the truncated Dobinski sum");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check catalog identities over a parameter grid");
  verify_cmd->add_option("identity", verify_args.identity, "Catalog key or 'all'")->required();
  verify_cmd->add_option("--n-max", verify_args.n_max, "Grid bound")->capture_default_str();
  verify_cmd->add_option("--order", verify_args.order, "Series truncation order (default n-max + 6)")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--format", verify_args.format, "csv, json or pretty")->capture_default_str();
  verify_cmd->add_option("--perturb-stirling2", verify_args.perturb,
                         "Fault injection: add 1 to S2(n,k) before verifying, given as n,k");

  SeriesArgs series_args;
  auto* series = app.add_subcommand("series", "Dump a truncated generating series");
  series->add_option("which", series_args.which, "elam, loglam, bellgf or bernoulligf")->required();
  series->add_option("--order", series_args.order, "Truncation order (default 16)")->check(CLI::NonNegativeNumber);
  series->add_option("--format", series_args.format, "json, csv or pretty")->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*table) {
      return cmd_table(table_args, out);
    }
    if (*eval) {
      return cmd_eval(eval_args, out);
    }
    if (*verify_cmd) {
      return cmd_verify(verify_args, out, err);
    }
    return cmd_series(series_args, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace degbell
