#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "degbell/identities.hpp"
#include "degbell/series.hpp"

namespace degbell {

enum class OutputFormat { csv, json, pretty };

std::optional<OutputFormat> parse_output_format(std::string_view text);

/// One row of an emitted table. k is absent for linear tables (one value per
/// n) and for the x = 1 summary rows of the Bell table. value is either an
/// exact rational or an ASCII lambda-polynomial ("5-6*lambda+2*lambda^2").
struct TableRow {
  int n = 0;
  std::optional<int> k;
  std::string value;
  friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct Table {
  bool triangular = true;  // header n,k,value; otherwise n,value
  std::vector<TableRow> rows;
  friend bool operator==(const Table&, const Table&) = default;
};

void write_table_csv(std::ostream& os, const Table& table);
void write_table_json(std::ostream& os, const Table& table);
/// Display form: values rendered with Unicode lambda when symbolic.
void write_table_pretty(std::ostream& os, const Table& table);
Table parse_table_csv(std::string_view text);
Table parse_table_json(std::string_view text);

/// {"order": N, "coeffs": [[["1"]], ...]}: one entry per power of t, each an
/// array over powers of x of arrays over powers of lambda of rational strings.
void write_series_json(std::ostream& os, const Series& series);
Series parse_series_json(std::string_view text);
/// Rows n,j,value: coefficient of t^n x^j as an ASCII lambda-polynomial.
void write_series_csv(std::ostream& os, const Series& series);
void write_series_pretty(std::ostream& os, const Series& series);

/// JSON array of {"identity", "grid", "status", "counterexample"} objects.
void write_reports_json(std::ostream& os, const std::vector<VerifyReport>& reports);
std::vector<VerifyReport> parse_reports_json(std::string_view text);
/// Header identity,grid,status,params,lhs,rhs; params joined with ';'.
void write_reports_csv(std::ostream& os, const std::vector<VerifyReport>& reports);
std::vector<VerifyReport> parse_reports_csv(std::string_view text);
void write_reports_pretty(std::ostream& os, const std::vector<VerifyReport>& reports);

/// RFC 4180 field quoting and record splitting.
std::string csv_field(std::string_view value);
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

}  // namespace degbell
