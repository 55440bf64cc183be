#include "tilecount/tables.hpp"

#include <sstream>

#include <json.hpp>

#include "tilecount/errors.hpp"
#include "tilecount/families.hpp"

namespace tilecount {

std::string table_name_string(TableName name) {
  switch (name) {
    case TableName::GeneralKx1: return "general-kx1";
    case TableName::KPlus1: return "kplus1";
    case TableName::Domino4xM: return "domino-4xm";
    case TableName::Tatami: return "tatami";
  }
  throw Error("unknown table name");
}

std::optional<TableName> table_from_name(const std::string& name) {
  for (TableName t : {TableName::GeneralKx1, TableName::KPlus1,
                      TableName::Domino4xM, TableName::Tatami}) {
    if (table_name_string(t) == name) return t;
  }
  return std::nullopt;
}

std::optional<TableFormat> format_from_name(const std::string& name) {
  if (name == "csv") return TableFormat::Csv;
  if (name == "json") return TableFormat::Json;
  if (name == "md" || name == "markdown") return TableFormat::Markdown;
  return std::nullopt;
}

GoldenTable build_table(TableName name) {
  GoldenTable t;
  t.name = name;
  switch (name) {
    case TableName::GeneralKx1: {
      t.row_param = "m";
      t.col_param = "n";
      for (int m = 2; m <= 10; ++m) {
        t.row_values.push_back(m);
        std::vector<BigCount> row;
        for (int n = 1; n <= 15; ++n) row.push_back(count_square_tile_family(m, n));
        t.cells.push_back(std::move(row));
      }
      for (int n = 1; n <= 15; ++n) t.col_values.push_back(n);
      break;
    }
    case TableName::KPlus1: {
      t.row_param = "k";
      t.col_param = "p";
      for (int k = 2; k <= 6; ++k) {
        t.row_values.push_back(k);
        std::vector<BigCount> row;
        for (int p = 1; p <= 9; ++p) row.push_back(count_kplus1_family(k, 1LL * p * k));
        t.cells.push_back(std::move(row));
      }
      for (int p = 1; p <= 9; ++p) t.col_values.push_back(p);
      break;
    }
    case TableName::Domino4xM: {
      t.row_param = "rows";
      t.col_param = "m";
      t.row_values.push_back(4);
      std::vector<BigCount> row;
      for (int m = 1; m <= 14; ++m) {
        row.push_back(count_family(FamilySpec{FamilyKind::Domino4xM, 0}, m));
      }
      t.cells.push_back(std::move(row));
      for (int m = 1; m <= 14; ++m) t.col_values.push_back(m);
      break;
    }
    case TableName::Tatami: {
      t.row_param = "m";
      t.col_param = "n";
      const FamilyKind kinds[] = {FamilyKind::Tatami2xM, FamilyKind::Tatami3xM,
                                  FamilyKind::Tatami4xM};
      for (int m = 2; m <= 4; ++m) {
        t.row_values.push_back(m);
        std::vector<BigCount> row;
        for (int n = 1; n <= 15; ++n) {
          row.push_back(count_family(FamilySpec{kinds[m - 2], 0}, n));
        }
        t.cells.push_back(std::move(row));
      }
      for (int n = 1; n <= 15; ++n) t.col_values.push_back(n);
      break;
    }
  }
  return t;
}

VerifyReport compare_tables(const GoldenTable& computed, const GoldenTable& expected) {
  if (computed.row_values != expected.row_values ||
      computed.col_values != expected.col_values) {
    throw Error("tables have different shapes or parameter values");
  }
  VerifyReport report;
  for (std::size_t i = 0; i < computed.cells.size(); ++i) {
    for (std::size_t j = 0; j < computed.cells[i].size(); ++j) {
      ++report.cells_checked;
      if (computed.cells[i][j] != expected.cells[i][j]) {
        report.pass = false;
        report.mismatches.push_back({computed.row_values[i],
                                     computed.col_values[j],
                                     expected.cells[i][j],
                                     computed.cells[i][j]});
      }
    }
  }
  return report;
}

VerifyReport verify_table(TableName name) {
  return compare_tables(build_table(name), expected_table(name));
}

namespace {

std::string corner_label(const GoldenTable& t) {
  return t.row_param + "\\" + t.col_param;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::string emit(const GoldenTable& table, TableFormat format) {
  std::ostringstream os;
  switch (format) {
    case TableFormat::Csv: {
      os << corner_label(table);
      for (long long c : table.col_values) os << ',' << c;
      os << '\n';
      for (std::size_t i = 0; i < table.row_values.size(); ++i) {
        os << table.row_values[i];
        for (const BigCount& v : table.cells[i]) os << ',' << v;
        os << '\n';
      }
      return os.str();
    }
    case TableFormat::Json: {
      nlohmann::ordered_json j;
      j["name"] = table_name_string(table.name);
      j["row_param"] = table.row_param;
      j["col_param"] = table.col_param;
      j["rows"] = nlohmann::ordered_json::array();
      for (std::size_t i = 0; i < table.row_values.size(); ++i) {
        nlohmann::ordered_json row;
        row["param"] = table.row_values[i];
        auto& values = row["values"] = nlohmann::ordered_json::array();
        for (const BigCount& v : table.cells[i]) values.push_back(v.str());
        j["rows"].push_back(std::move(row));
      }
      return j.dump(2) + "\n";
    }
    case TableFormat::Markdown: {
      os << "| " << corner_label(table) << " |";
      for (long long c : table.col_values) os << ' ' << c << " |";
      os << '\n' << "| --- |";
      for (std::size_t c = 0; c < table.col_values.size(); ++c) os << " --- |";
      os << '\n';
      for (std::size_t i = 0; i < table.row_values.size(); ++i) {
        os << "| " << table.row_values[i] << " |";
        for (const BigCount& v : table.cells[i]) os << ' ' << v << " |";
        os << '\n';
      }
      return os.str();
    }
  }
  throw Error("unknown table format");
}

GoldenTable parse_table_csv(const std::string& text, TableName name) {
  GoldenTable t;
  t.name = name;
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) throw Error("empty CSV table");
  auto header = split(line, ',');
  const auto corner = split(header[0], '\\');
  if (corner.size() != 2) throw Error("CSV corner field must be rowparam\\colparam");
  t.row_param = corner[0];
  t.col_param = corner[1];
  for (std::size_t i = 1; i < header.size(); ++i) {
    t.col_values.push_back(std::stoll(header[i]));
  }
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto fields = split(line, ',');
    if (fields.size() != header.size()) {
      throw Error("CSV row has wrong field count");
    }
    t.row_values.push_back(std::stoll(fields[0]));
    std::vector<BigCount> row;
    for (std::size_t i = 1; i < fields.size(); ++i) row.emplace_back(fields[i]);
    t.cells.push_back(std::move(row));
  }
  return t;
}

GoldenTable parse_table_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  GoldenTable t;
  const auto name = table_from_name(j.at("name").get<std::string>());
  if (!name) throw Error("unknown table name in JSON");
  t.name = *name;
  t.row_param = j.at("row_param").get<std::string>();
  t.col_param = j.at("col_param").get<std::string>();
  for (const auto& row : j.at("rows")) {
    t.row_values.push_back(row.at("param").get<long long>());
    std::vector<BigCount> cells;
    for (const auto& v : row.at("values")) {
      cells.emplace_back(v.get<std::string>());
    }
    t.cells.push_back(std::move(cells));
  }
  const std::size_t ncols = t.cells.empty() ? 0 : t.cells[0].size();
  for (std::size_t c = 1; c <= ncols; ++c) t.col_values.push_back(c);
  return t;
}

}  // namespace tilecount
