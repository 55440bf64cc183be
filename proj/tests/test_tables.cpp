#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "tilecount/errors.hpp"
#include "tilecount/tables.hpp"

using namespace tilecount;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

const TableName kAllTables[] = {TableName::GeneralKx1, TableName::KPlus1,
                                TableName::Domino4xM, TableName::Tatami};

}  // namespace

TEST_CASE("built tables have the documented shapes and sample cells") {
  const GoldenTable general = build_table(TableName::GeneralKx1);
  REQUIRE(general.row_values.size() == 9);
  REQUIRE(general.col_values.size() == 15);
  CHECK(general.row_param == "m");
  CHECK(general.col_param == "n");
  CHECK(general.cells[4][14] == 21);  // m = 6, n = 15

  const GoldenTable kp = build_table(TableName::KPlus1);
  REQUIRE(kp.row_values.size() == 5);
  REQUIRE(kp.col_values.size() == 9);
  CHECK(kp.row_param == "k");
  CHECK(kp.col_param == "p");
  CHECK(kp.cells[4][8] == 5387479);  // k = 6, p = 9

  const GoldenTable d4 = build_table(TableName::Domino4xM);
  REQUIRE(d4.row_values == std::vector<long long>{4});
  REQUIRE(d4.col_values.size() == 14);
  CHECK(d4.row_param == "rows");
  CHECK(d4.cells[0][13] == 1174500);  // m = 14

  const GoldenTable tat = build_table(TableName::Tatami);
  REQUIRE(tat.row_values.size() == 3);
  REQUIRE(tat.col_values.size() == 15);
  CHECK(tat.cells[2][0] == 1);  // m = 4, n = 1
}

TEST_CASE("every table verifies against the transcribed values") {
  const long long want_checked[] = {135, 45, 14, 45};
  for (int i = 0; i < 4; ++i) {
    const VerifyReport report = verify_table(kAllTables[i]);
    CHECK(report.pass);
    CHECK(report.cells_checked == want_checked[i]);
    CHECK(report.mismatches.empty());
  }
}

TEST_CASE("a corrupted cell is reported with its parameters") {
  GoldenTable bad = expected_table(TableName::GeneralKx1);
  bad.cells[2][4] += 7;  // m = 4, n = 5
  const VerifyReport report =
      compare_tables(build_table(TableName::GeneralKx1), bad);
  CHECK_FALSE(report.pass);
  CHECK(report.cells_checked == 135);
  REQUIRE(report.mismatches.size() == 1);
  CHECK(report.mismatches[0].row == 4);
  CHECK(report.mismatches[0].col == 5);
  CHECK(report.mismatches[0].expected ==
        expected_table(TableName::GeneralKx1).cells[2][4] + 7);
  CHECK(report.mismatches[0].computed ==
        expected_table(TableName::GeneralKx1).cells[2][4]);
}

TEST_CASE("shape mismatches are errors, not mismatches") {
  GoldenTable truncated = expected_table(TableName::Tatami);
  truncated.col_values.pop_back();
  for (auto& row : truncated.cells) row.pop_back();
  CHECK_THROWS_AS(
      compare_tables(build_table(TableName::Tatami), truncated), Error);
  GoldenTable relabeled = expected_table(TableName::Tatami);
  relabeled.row_values[0] = 99;
  CHECK_THROWS_AS(
      compare_tables(build_table(TableName::Tatami), relabeled), Error);
}

TEST_CASE("csv emission is exact and deterministic") {
  const GoldenTable d4 = expected_table(TableName::Domino4xM);
  const std::string text = emit(d4, TableFormat::Csv);
  CHECK(text == emit(build_table(TableName::Domino4xM), TableFormat::Csv));
  const auto lines = lines_of(text);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0].rfind("rows\\m,1,2,3", 0) == 0);
  CHECK(lines[1].rfind("4,1,5,11,36,95,281,", 0) == 0);
  CHECK(lines[1].substr(lines[1].size() - 7) == "1174500");
  for (const auto& line : lines) {
    CHECK(std::count(line.begin(), line.end(), ',') == 14);
  }
}

TEST_CASE("markdown emission is a well-formed pipe table") {
  const auto lines = lines_of(emit(expected_table(TableName::KPlus1),
                                   TableFormat::Markdown));
  REQUIRE(lines.size() == 7);  // header, rule, five body rows
  for (const auto& line : lines) {
    CHECK(line.front() == '|');
    CHECK(line.back() == '|');
    CHECK(std::count(line.begin(), line.end(), '|') == 11);
  }
  CHECK(lines[2].find(" 3 ") != std::string::npos);
  CHECK(lines[6].find("5387479") != std::string::npos);
}

TEST_CASE("json emission carries decimal strings and implicit columns") {
  const std::string text = emit(expected_table(TableName::Tatami),
                                TableFormat::Json);
  CHECK(text.back() == '\n');
  CHECK(text.find("\"name\": \"tatami\"") != std::string::npos);
  CHECK(text.find("\"row_param\": \"m\"") != std::string::npos);
  // The odd-width zeros of the three-row family survive as "0" strings.
  CHECK(text.find("\"0\"") != std::string::npos);
  CHECK(text.find("\"277\"") != std::string::npos);
  CHECK(text.find("col_values") == std::string::npos);
}

TEST_CASE("machine formats round-trip every table") {
  for (TableName name : kAllTables) {
    const GoldenTable t = expected_table(name);
    CHECK(parse_table_csv(emit(t, TableFormat::Csv), name) == t);
    CHECK(parse_table_json(emit(t, TableFormat::Json)) == t);
  }
}

TEST_CASE("table and format names parse") {
  for (TableName name : kAllTables) {
    CHECK(table_from_name(table_name_string(name)) == name);
  }
  CHECK(table_name_string(TableName::GeneralKx1) == "general-kx1");
  CHECK_FALSE(table_from_name("no-such-table").has_value());
  CHECK(format_from_name("csv") == TableFormat::Csv);
  CHECK(format_from_name("json") == TableFormat::Json);
  CHECK(format_from_name("md") == TableFormat::Markdown);
  CHECK(format_from_name("markdown") == TableFormat::Markdown);
  CHECK_FALSE(format_from_name("yaml").has_value());
}
