#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "tilecount/big_count.hpp"
#include "tilecount/board.hpp"

namespace tilecount {

// Controls for the exhaustive enumerator. All tiles share one length.
struct EnumerationConfig {
  int tile_len = 2;
  // Skip tilings with a four-tile interior vertex (pruned eagerly, not by
  // filtering finished tilings).
  bool tatami_filter = false;
  // Stop after this many tilings have been visited.
  std::optional<long long> limit;
  // With true the first uncovered cell tries horizontal before vertical,
  // giving a stable visit order. False flips the orientation order; both
  // visit the same set.
  bool deterministic_order = true;
};

// Visits every tiling of the board by 1 x tile_len tiles, backtracking on
// the first uncovered cell in row-major order. The visitor returns false to
// stop early. Returns the number of tilings visited.
long long enumerate_tilings(const BoardSpec& board, const EnumerationConfig& config,
                            const std::function<bool(const Tiling&)>& visit);

// Convenience wrapper collecting the visited tilings.
std::vector<Tiling> collect_tilings(const BoardSpec& board,
                                    const EnumerationConfig& config);

// Counts by full backtracking without materializing tilings. Ignores
// config.limit. Boards larger than budget_cells throw BudgetExceeded
// (pass a negative budget to disable the guard).
BigCount count_exhaustive(const BoardSpec& board, const EnumerationConfig& config,
                          long long budget_cells = 64);

// Caps for count_profile_dp. The DP sweeps columns with one protrusion
// depth in [0, tile_len) per row, so the state space is tile_len^rows.
struct ProfileDpLimits {
  int max_rows = 12;
  long long max_states = 1LL << 22;
};

// Counts tilings by a column-sweep dynamic program over protrusion
// profiles. No tatami awareness; counts all tilings. Throws
// StateSpaceTooLarge when rows or tile_len^rows exceed the limits.
BigCount count_profile_dp(const BoardSpec& board, int tile_len,
                          const ProfileDpLimits& limits = {});

}  // namespace tilecount
