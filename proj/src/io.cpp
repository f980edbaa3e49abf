#include "degbell/io.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "degbell/text.hpp"

namespace degbell {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

int parse_int(const std::string& s) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw ParseError("malformed integer '" + s + "'");
  }
  if (used != s.size()) {
    throw ParseError("malformed integer '" + s + "'");
  }
  return value;
}

// Both kinds of table value parse as lambda-polynomials.
void validate_value(const std::string& value) { (void)parse_lambda_ascii(value); }

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out += (i == 0 ? "" : std::string(sep)) + parts[i];
  }
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) {
    return out;
  }
  std::string current;
  for (char c : s) {
    if (c == sep) {
      out.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  out.push_back(std::move(current));
  return out;
}

Json report_to_json(const VerifyReport& r) {
  Json j;
  j["identity"] = r.identity;
  j["grid"] = r.grid;
  j["status"] = r.pass ? "pass" : "fail";
  if (r.counterexample) {
    Json ce;
    ce["params"] = r.counterexample->params;
    ce["lhs"] = r.counterexample->lhs;
    ce["rhs"] = r.counterexample->rhs;
    j["counterexample"] = std::move(ce);
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

VerifyReport report_from_fields(std::string identity, std::string grid, const std::string& status,
                                std::optional<Counterexample> ce) {
  if (status != "pass" && status != "fail") {
    throw ParseError("report status must be pass or fail, got '" + status + "'");
  }
  VerifyReport r{std::move(identity), std::move(grid), status == "pass", std::move(ce)};
  if (r.pass == r.counterexample.has_value()) {
    throw ParseError("report '" + r.identity + "': status and counterexample disagree");
  }
  return r;
}

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view text) {
  if (text == "csv") {
    return OutputFormat::csv;
  }
  if (text == "json") {
    return OutputFormat::json;
  }
  if (text == "pretty") {
    return OutputFormat::pretty;
  }
  return std::nullopt;
}

std::string csv_field(std::string_view value) {
  if (value.find_first_of(",\"\n\r") == std::string_view::npos) {
    return std::string(value);
  }
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') {
      out += "\"\"";
    } else {
      out.push_back(c);
    }
  }
  return out + "\"";
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    if (c == '"' && !field_started) {
      quoted = true;
      field_started = true;
    } else if (c == ',') {
      record.push_back(std::move(field));
      field.clear();
      field_started = false;
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
        ++i;
      }
      record.push_back(std::move(field));
      records.push_back(std::move(record));
      record.clear();
      field.clear();
      field_started = false;
    } else {
      field.push_back(c);
      field_started = true;
    }
  }
  if (quoted) {
    throw ParseError("unterminated quoted CSV field");
  }
  if (field_started || !record.empty()) {
    record.push_back(std::move(field));
    records.push_back(std::move(record));
  }
  return records;
}

// ---- tables -----------------------------------------------------------------

void write_table_csv(std::ostream& os, const Table& table) {
  os << (table.triangular ? "n,k,value\n" : "n,value\n");
  for (const auto& row : table.rows) {
    os << row.n << ',';
    if (table.triangular) {
      if (row.k) {
        os << *row.k;
      }
      os << ',';
    }
    os << csv_field(row.value) << '\n';
  }
}

Table parse_table_csv(std::string_view text) {
  const auto records = parse_csv(text);
  if (records.empty()) {
    throw ParseError("empty table");
  }
  Table table;
  const auto& header = records.front();
  if (header == std::vector<std::string>{"n", "k", "value"}) {
    table.triangular = true;
  } else if (header == std::vector<std::string>{"n", "value"}) {
    table.triangular = false;
  } else {
    throw ParseError("unexpected table header");
  }
  const std::size_t width = table.triangular ? 3 : 2;
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& rec = records[i];
    if (rec.size() != width) {
      throw ParseError("table row " + std::to_string(i) + " has " + std::to_string(rec.size()) + " fields");
    }
    TableRow row;
    row.n = parse_int(rec[0]);
    if (table.triangular && !rec[1].empty()) {
      row.k = parse_int(rec[1]);
    }
    row.value = rec.back();
    validate_value(row.value);
    table.rows.push_back(std::move(row));
  }
  return table;
}

void write_table_json(std::ostream& os, const Table& table) {
  Json rows = Json::array();
  for (const auto& row : table.rows) {
    Json j;
    j["n"] = row.n;
    if (table.triangular) {
      j["k"] = row.k ? Json(*row.k) : Json(nullptr);
    }
    j["value"] = row.value;
    rows.push_back(std::move(j));
  }
  os << rows.dump(2) << '\n';
}

Table parse_table_json(std::string_view text) {
  const Json rows = parse_json(text);
  if (!rows.is_array()) {
    throw ParseError("table JSON must be an array");
  }
  Table table;
  table.triangular = rows.empty() || rows.front().contains("k");
  try {
    for (const auto& j : rows) {
      if (j.contains("k") != table.triangular) {
        throw ParseError("table JSON mixes linear and triangular rows");
      }
      TableRow row;
      row.n = j.at("n").get<int>();
      if (table.triangular && !j.at("k").is_null()) {
        row.k = j.at("k").get<int>();
      }
      row.value = j.at("value").get<std::string>();
      validate_value(row.value);
      table.rows.push_back(std::move(row));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed table JSON: ") + e.what());
  }
  return table;
}

void write_table_pretty(std::ostream& os, const Table& table) {
  for (const auto& row : table.rows) {
    os << "n=" << std::setw(2) << row.n;
    if (table.triangular) {
      if (row.k) {
        os << "  k=" << std::setw(2) << *row.k;
      } else {
        os << "  x=1 ";
      }
    }
    os << "  " << to_pretty(parse_lambda_ascii(row.value)) << '\n';
  }
}

// ---- series -----------------------------------------------------------------

void write_series_json(std::ostream& os, const Series& series) {
  Json coeffs = Json::array();
  for (const auto& xpoly : series.coeffs()) {
    Json by_x = Json::array();
    for (const auto& lpoly : xpoly.coeffs()) {
      Json by_lambda = Json::array();
      for (const auto& r : lpoly.coeffs()) {
        by_lambda.push_back(r.str());
      }
      by_x.push_back(std::move(by_lambda));
    }
    coeffs.push_back(std::move(by_x));
  }
  Json out;
  out["order"] = series.order();
  out["coeffs"] = std::move(coeffs);
  os << out.dump() << '\n';
}

Series parse_series_json(std::string_view text) {
  const Json j = parse_json(text);
  try {
    const auto order = j.at("order").get<std::size_t>();
    const Json& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || coeffs.size() != order + 1) {
      throw ParseError("series JSON must carry order + 1 coefficients");
    }
    std::vector<XPoly> out;
    for (const auto& by_x : coeffs) {
      std::vector<LambdaPoly> xs;
      for (const auto& by_lambda : by_x) {
        std::vector<Rational> ls;
        for (const auto& r : by_lambda) {
          ls.push_back(Rational::parse(r.get<std::string>()));
        }
        if (!ls.empty() && ls.back().is_zero()) {
          throw ParseError("non-canonical lambda coefficients in series JSON");
        }
        xs.emplace_back(std::move(ls));
      }
      if (!xs.empty() && xs.back().is_zero()) {
        throw ParseError("non-canonical x coefficients in series JSON");
      }
      out.emplace_back(std::move(xs));
    }
    return Series(std::move(out));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed series JSON: ") + e.what());
  }
}

void write_series_csv(std::ostream& os, const Series& series) {
  os << "n,j,value\n";
  for (std::size_t n = 0; n <= series.order(); ++n) {
    const XPoly& c = series[n];
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (!c.coeffs()[j].is_zero()) {
        os << n << ',' << j << ',' << csv_field(to_ascii(c.coeffs()[j])) << '\n';
      }
    }
  }
}

void write_series_pretty(std::ostream& os, const Series& series) {
  os << "order " << series.order() << '\n';
  for (std::size_t n = 0; n <= series.order(); ++n) {
    os << "t" << (n == 1 ? "" : superscript(static_cast<long>(n))) << ": " << to_pretty(series[n]) << '\n';
  }
}

// ---- reports ----------------------------------------------------------------

void write_reports_json(std::ostream& os, const std::vector<VerifyReport>& reports) {
  Json out = Json::array();
  for (const auto& r : reports) {
    out.push_back(report_to_json(r));
  }
  os << out.dump(2) << '\n';
}

std::vector<VerifyReport> parse_reports_json(std::string_view text) {
  const Json j = parse_json(text);
  if (!j.is_array()) {
    throw ParseError("reports JSON must be an array");
  }
  std::vector<VerifyReport> out;
  try {
    for (const auto& r : j) {
      std::optional<Counterexample> ce;
      if (!r.at("counterexample").is_null()) {
        const Json& c = r.at("counterexample");
        ce = Counterexample{c.at("params").get<std::vector<std::string>>(), c.at("lhs").get<std::string>(),
                            c.at("rhs").get<std::string>()};
      }
      out.push_back(report_from_fields(r.at("identity").get<std::string>(), r.at("grid").get<std::string>(),
                                       r.at("status").get<std::string>(), std::move(ce)));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed reports JSON: ") + e.what());
  }
  return out;
}

void write_reports_csv(std::ostream& os, const std::vector<VerifyReport>& reports) {
  os << "identity,grid,status,params,lhs,rhs\n";
  for (const auto& r : reports) {
    os << csv_field(r.identity) << ',' << csv_field(r.grid) << ',' << (r.pass ? "pass" : "fail") << ',';
    if (r.counterexample) {
      os << csv_field(join(r.counterexample->params, ";")) << ',' << csv_field(r.counterexample->lhs) << ','
         << csv_field(r.counterexample->rhs);
    } else {
      os << ",,";
    }
    os << '\n';
  }
}

std::vector<VerifyReport> parse_reports_csv(std::string_view text) {
  const auto records = parse_csv(text);
  if (records.empty() ||
      records.front() != std::vector<std::string>{"identity", "grid", "status", "params", "lhs", "rhs"}) {
    throw ParseError("unexpected reports CSV header");
  }
  std::vector<VerifyReport> out;
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& rec = records[i];
    if (rec.size() != 6) {
      throw ParseError("reports CSV row " + std::to_string(i) + " has " + std::to_string(rec.size()) + " fields");
    }
    std::optional<Counterexample> ce;
    if (rec[2] == "fail") {
      ce = Counterexample{split(rec[3], ';'), rec[4], rec[5]};
    }
    out.push_back(report_from_fields(rec[0], rec[1], rec[2], std::move(ce)));
  }
  return out;
}

void write_reports_pretty(std::ostream& os, const std::vector<VerifyReport>& reports) {
  std::size_t passed = 0;
  for (const auto& r : reports) {
    os << (r.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(18) << r.identity << std::right << r.grid << '\n';
    if (r.counterexample) {
      os << "      at " << join(r.counterexample->params, ", ") << '\n';
      os << "      lhs = " << r.counterexample->lhs << '\n';
      os << "      rhs = " << r.counterexample->rhs << '\n';
    }
    passed += r.pass ? 1 : 0;
  }
  os << passed << '/' << reports.size() << " identities pass\n";
}

}  // namespace degbell
