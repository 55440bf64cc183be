#include <algorithm>
#include <doctest.h>
#include <random>

#include "tilecount/enumerate.hpp"
#include "tilecount/errors.hpp"

using namespace tilecount;

TEST_CASE("enumeration: counts of small boards") {
  EnumerationConfig dominoes;
  dominoes.tile_len = 2;
  CHECK(count_exhaustive({3, 2}, dominoes) == 3);
  CHECK(count_exhaustive({2, 3}, dominoes) == 3);
  CHECK(count_exhaustive({3, 4}, dominoes) == 11);
  CHECK(count_exhaustive({2, 10}, dominoes) == 89);
  CHECK(count_exhaustive({4, 4}, dominoes) == 36);
  CHECK(count_exhaustive({3, 3}, dominoes) == 0);
  CHECK(count_exhaustive({1, 0}, dominoes) == 1);

  EnumerationConfig trominoes;
  trominoes.tile_len = 3;
  CHECK(count_exhaustive({3, 3}, trominoes) == 2);
  CHECK(count_exhaustive({4, 6}, trominoes) == 13);

  EnumerationConfig units;
  units.tile_len = 1;
  CHECK(count_exhaustive({3, 5}, units) == 1);
}

TEST_CASE("enumeration: canonical visit order") {
  EnumerationConfig config;
  config.tile_len = 2;
  const auto tilings = collect_tilings({2, 2}, config);
  REQUIRE(tilings.size() == 2);
  // Horizontal placements come before vertical at the first free cell.
  CHECK(tilings[0].placements()[0].orient == Orientation::Horizontal);
  CHECK(tilings[1].placements()[0].orient == Orientation::Vertical);

  EnumerationConfig flipped = config;
  flipped.deterministic_order = false;
  const auto reversed = collect_tilings({2, 2}, flipped);
  REQUIRE(reversed.size() == 2);
  CHECK(reversed[0] == tilings[1]);
  CHECK(reversed[1] == tilings[0]);
}

TEST_CASE("enumeration: limit and early stop") {
  EnumerationConfig config;
  config.tile_len = 2;
  config.limit = 5;
  CHECK(collect_tilings({3, 4}, config).size() == 5);

  config.limit.reset();
  int seen = 0;
  const long long visited = enumerate_tilings({3, 4}, config, [&](const Tiling&) {
    return ++seen < 2;
  });
  CHECK(visited == 2);

  config.limit = 0;
  CHECK(enumerate_tilings({3, 4}, config, [](const Tiling&) { return true; }) == 0);
}

TEST_CASE("enumeration: every yielded tiling is valid and uses one tile shape") {
  EnumerationConfig config;
  config.tile_len = 3;
  for (const Tiling& t : collect_tilings({4, 6}, config)) {
    for (const Placement& p : t.placements()) CHECK(p.len == 3);
    CHECK(t.placements().size() == 8);  // 24 cells / 3
  }
}

TEST_CASE("tatami filter matches filtering after the fact") {
  EnumerationConfig plain;
  plain.tile_len = 2;
  EnumerationConfig filtered = plain;
  filtered.tatami_filter = true;

  for (int cols = 0; cols <= 8; ++cols) {
    for (int rows = 1; rows <= 4; ++rows) {
      const auto all = collect_tilings({rows, cols}, plain);
      const long long by_hand =
          std::count_if(all.begin(), all.end(),
                        [](const Tiling& t) { return is_tatami(t); });
      CHECK(count_exhaustive({rows, cols}, filtered) == by_hand);
    }
  }
}

TEST_CASE("tatami filter: spot values") {
  EnumerationConfig filtered;
  filtered.tile_len = 2;
  filtered.tatami_filter = true;
  CHECK(count_exhaustive({4, 4}, filtered) == 2);
  CHECK(count_exhaustive({4, 7}, filtered) == 3);
  CHECK(count_exhaustive({3, 8}, filtered) == 10);
}

TEST_CASE("budget guard") {
  EnumerationConfig config;
  config.tile_len = 2;
  try {
    count_exhaustive({5, 13}, config);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.cells == 65);
    CHECK(e.budget == 64);
  }
  CHECK(count_exhaustive({5, 13}, config, -1) == 0);  // odd cell count
  // A board exactly at the budget still runs.
  CHECK(count_exhaustive({2, 20}, config, 40) == 10946);
}

TEST_CASE("profile DP: agrees with known counts") {
  CHECK(count_profile_dp({7, 15}, 7) == 13);
  CHECK(count_profile_dp({2, 10}, 2) == 89);
  CHECK(count_profile_dp({4, 9}, 3) == 57);
  CHECK(count_profile_dp({3, 0}, 2) == 1);
  CHECK(count_profile_dp({5, 4}, 1) == 1);
}

TEST_CASE("profile DP: state caps") {
  CHECK_THROWS_AS(count_profile_dp({13, 4}, 2), StateSpaceTooLarge);
  ProfileDpLimits tight;
  tight.max_states = 100;
  CHECK_THROWS_AS(count_profile_dp({7, 4}, 2, tight), StateSpaceTooLarge);
  // 2^7 states pass a cap of exactly 128.
  tight.max_states = 128;
  CHECK(count_profile_dp({7, 4}, 2, tight) == count_exhaustive({7, 4},
                                                               {2, false, {}, true}));
}

TEST_CASE("profile DP == backtracking on random boards") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> rows_d(1, 6), cols_d(0, 6), len_d(1, 4);
  for (int i = 0; i < 60; ++i) {
    const int rows = rows_d(rng);
    const int cols = cols_d(rng);
    const int len = len_d(rng);
    EnumerationConfig config;
    config.tile_len = len;
    const BigCount bt = count_exhaustive({rows, cols}, config, -1);
    CHECK(count_profile_dp({rows, cols}, len) == bt);
  }
}

TEST_CASE("counts are transposition-invariant") {
  for (const auto& [rows, cols, len] :
       {std::tuple{4, 6, 3}, {2, 8, 2}, {5, 3, 2}, {6, 4, 4}}) {
    EnumerationConfig config;
    config.tile_len = len;
    CHECK(count_exhaustive({rows, cols}, config, -1) ==
          count_exhaustive({cols, rows}, config, -1));
  }
}

TEST_CASE("oracle input validation") {
  EnumerationConfig config;
  config.tile_len = 0;
  CHECK_THROWS_AS(count_exhaustive({2, 2}, config), OutOfBoundsError);
  config.tile_len = 2;
  CHECK_THROWS_AS(count_profile_dp({2, -1}, 2), OutOfBoundsError);
}
