// Transcribed reference values for the four golden tables. build_table
// must reproduce these bit-exactly; nothing here feeds back into the
// computing side.

#include "tilecount/errors.hpp"
#include "tilecount/tables.hpp"

namespace tilecount {

namespace {

GoldenTable make(TableName name, std::string row_param, std::string col_param,
                 std::vector<long long> row_values, std::size_t ncols,
                 std::vector<std::vector<long long>> cells) {
  GoldenTable t;
  t.name = name;
  t.row_param = std::move(row_param);
  t.col_param = std::move(col_param);
  t.row_values = std::move(row_values);
  for (std::size_t c = 1; c <= ncols; ++c) t.col_values.push_back(c);
  for (auto& row : cells) {
    std::vector<BigCount> out(row.begin(), row.end());
    t.cells.push_back(std::move(out));
  }
  return t;
}

const GoldenTable general_kx1 = make(
    TableName::GeneralKx1, "m", "n", {2, 3, 4, 5, 6, 7, 8, 9, 10}, 15,
    {
        {1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377, 610, 987},
        {1, 1, 2, 3, 4, 6, 9, 13, 19, 28, 41, 60, 88, 129, 189},
        {1, 1, 1, 2, 3, 4, 5, 7, 10, 14, 19, 26, 36, 50, 69},
        {1, 1, 1, 1, 2, 3, 4, 5, 6, 8, 11, 15, 20, 26, 34},
        {1, 1, 1, 1, 1, 2, 3, 4, 5, 6, 7, 9, 12, 16, 21},
        {1, 1, 1, 1, 1, 1, 2, 3, 4, 5, 6, 7, 8, 10, 13},
        {1, 1, 1, 1, 1, 1, 1, 2, 3, 4, 5, 6, 7, 8, 9},
        {1, 1, 1, 1, 1, 1, 1, 1, 2, 3, 4, 5, 6, 7, 8},
        {1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 3, 4, 5, 6, 7},
    });

const GoldenTable kplus1_table = make(
    TableName::KPlus1, "k", "p", {2, 3, 4, 5, 6}, 9,
    {
        {3, 11, 41, 153, 571, 2131, 7953, 29681, 110771},
        {3, 13, 57, 249, 1087, 4745, 20713, 90417, 394691},
        {3, 15, 75, 371, 1833, 9057, 44753, 221137, 1092699},
        {3, 17, 95, 521, 2853, 15629, 85625, 469105, 2570031},
        {3, 19, 117, 701, 4193, 25101, 150289, 899825, 5387479},
    });

const GoldenTable domino_4xm = make(
    TableName::Domino4xM, "rows", "m", {4}, 14,
    {
        {1, 5, 11, 36, 95, 281, 781, 2245, 6336, 18061, 51205, 145601, 413351,
         1174500},
    });

const GoldenTable tatami = make(
    TableName::Tatami, "m", "n", {2, 3, 4}, 15,
    {
        {1, 2, 3, 4, 6, 9, 13, 19, 28, 41, 60, 88, 129, 189, 277},
        {0, 3, 0, 4, 0, 6, 0, 10, 0, 16, 0, 26, 0, 42, 0},
        {1, 4, 4, 2, 3, 3, 3, 5, 5, 6, 8, 8, 11, 13, 14},
    });

}  // namespace

const GoldenTable& expected_table(TableName name) {
  switch (name) {
    case TableName::GeneralKx1: return general_kx1;
    case TableName::KPlus1: return kplus1_table;
    case TableName::Domino4xM: return domino_4xm;
    case TableName::Tatami: return tatami;
  }
  throw Error("unknown table name");
}

}  // namespace tilecount
