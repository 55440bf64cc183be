#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tilecount/big_count.hpp"

namespace tilecount {

enum class TableName { GeneralKx1, KPlus1, Domino4xM, Tatami };

std::string table_name_string(TableName name);
std::optional<TableName> table_from_name(const std::string& name);

enum class TableFormat { Csv, Json, Markdown };

// Accepts "csv", "json", "md" and "markdown".
std::optional<TableFormat> format_from_name(const std::string& name);

// A reference value table: counts over a grid of (row parameter, column
// parameter) values. Column values are always 1..N.
//
//   general-kx1  m x n boards, m x 1 tiles     rows m = 2..10, cols n = 1..15
//   kplus1       (k+1) x pk boards, k x 1      rows k = 2..6,  cols p = 1..9
//   domino-4xm   4 x m boards, dominoes        one row,        cols m = 1..14
//   tatami       m x n boards, dominoes,       rows m = 2..4,  cols n = 1..15
//                no four-tile vertices
struct GoldenTable {
  TableName name = TableName::GeneralKx1;
  std::string row_param;
  std::string col_param;
  std::vector<long long> row_values;
  std::vector<long long> col_values;
  // cells[i][j] belongs to (row_values[i], col_values[j]).
  std::vector<std::vector<BigCount>> cells;

  bool operator==(const GoldenTable&) const = default;
};

// Computes every cell from the counting families. Never touches the
// embedded expected data.
GoldenTable build_table(TableName name);

// The transcribed reference values the regression suite verifies against.
const GoldenTable& expected_table(TableName name);

struct CellMismatch {
  // Parameter values, not indices.
  long long row = 0;
  long long col = 0;
  BigCount expected;
  BigCount computed;
};

struct VerifyReport {
  bool pass = true;
  long long cells_checked = 0;
  std::vector<CellMismatch> mismatches;
};

// Cell-by-cell comparison; the tables must have identical shape and
// parameters. Mismatches are data, not errors.
VerifyReport compare_tables(const GoldenTable& computed, const GoldenTable& expected);

// compare_tables(build_table(name), expected_table(name)).
VerifyReport verify_table(TableName name);

// Deterministic, byte-stable text. CSV: corner field "<row_param>\<col_param>",
// then one line per row. JSON: {name, row_param, col_param, rows: [{param,
// values: [decimal strings]}]} with two-space indentation; column values
// are implicit (1..N). Markdown: pipe table with the same corner label.
std::string emit(const GoldenTable& table, TableFormat format);

// Inverses of emit for the machine formats. CSV carries no table name, so
// the caller supplies it.
GoldenTable parse_table_csv(const std::string& text, TableName name);
GoldenTable parse_table_json(const std::string& text);

}  // namespace tilecount
