#include "tilecount/enumerate.hpp"

#include <sstream>

#include "tilecount/errors.hpp"

namespace tilecount {

namespace {

void check_inputs(const BoardSpec& board, int tile_len) {
  if (board.rows < 1 || board.cols < 0) {
    throw OutOfBoundsError("board must have rows >= 1 and cols >= 0");
  }
  if (tile_len < 1) throw OutOfBoundsError("tile length must be >= 1");
}

// Depth-first enumerator. Owner indices double as the occupancy map; the
// scan cursor only moves forward because every cell before it stays covered
// for the lifetime of the subtree.
class Backtracker {
 public:
  Backtracker(const BoardSpec& board, const EnumerationConfig& config)
      : board_(board),
        k_(config.tile_len),
        tatami_(config.tatami_filter),
        horizontal_first_(config.deterministic_order),
        limit_(config.limit),
        owner_(board.cell_count(), -1) {}

  // Pure count, no tiling objects built.
  BigCount count() {
    count_only_ = true;
    search(0);
    return count_;
  }

  long long enumerate(const std::function<bool(const Tiling&)>& visit) {
    visit_ = &visit;
    search(0);
    return visited_;
  }

 private:
  void search(int scan) {
    if (stop_) return;
    const int cells = static_cast<int>(board_.cell_count());
    while (scan < cells && owner_[scan] != -1) ++scan;
    if (scan == cells) {
      yield();
      return;
    }
    const int r = scan / board_.cols;
    const int c = scan % board_.cols;
    // A length-1 tile has only one shape; trying both orientations would
    // count it twice.
    if (k_ == 1) {
      try_placement(scan, r, c, Orientation::Horizontal);
      return;
    }
    const Orientation first =
        horizontal_first_ ? Orientation::Horizontal : Orientation::Vertical;
    const Orientation second =
        horizontal_first_ ? Orientation::Vertical : Orientation::Horizontal;
    try_placement(scan, r, c, first);
    try_placement(scan, r, c, second);
  }

  void try_placement(int scan, int r, int c, Orientation orient) {
    if (stop_) return;
    const int dr = orient == Orientation::Vertical ? 1 : 0;
    const int dc = 1 - dr;
    if (r + dr * (k_ - 1) >= board_.rows) return;
    if (c + dc * (k_ - 1) >= board_.cols) return;
    for (int j = 0; j < k_; ++j) {
      if (owner_[(r + dr * j) * board_.cols + (c + dc * j)] != -1) return;
    }
    const int id = static_cast<int>(placements_.size());
    placements_.push_back({r, c, orient, k_});
    for (int j = 0; j < k_; ++j) {
      owner_[(r + dr * j) * board_.cols + (c + dc * j)] = id;
    }
    if (!tatami_ || !creates_violation(r, c, dr, dc)) search(scan);
    for (int j = 0; j < k_; ++j) {
      owner_[(r + dr * j) * board_.cols + (c + dc * j)] = -1;
    }
    placements_.pop_back();
  }

  // After placing a tile, only vertices touching its cells can newly gain
  // four distinct owners, and a vertex's status is final once its four
  // cells are covered. Checking here keeps the pruning eager and exact.
  bool creates_violation(int r, int c, int dr, int dc) {
    for (int j = 0; j < k_; ++j) {
      const int cr = r + dr * j;
      const int cc = c + dc * j;
      for (int vy = cr; vy <= cr + 1; ++vy) {
        if (vy < 1 || vy >= board_.rows) continue;
        for (int vx = cc; vx <= cc + 1; ++vx) {
          if (vx < 1 || vx >= board_.cols) continue;
          const int a = owner_[(vy - 1) * board_.cols + (vx - 1)];
          const int b = owner_[(vy - 1) * board_.cols + vx];
          const int d = owner_[vy * board_.cols + (vx - 1)];
          const int e = owner_[vy * board_.cols + vx];
          if (a == -1 || b == -1 || d == -1 || e == -1) continue;
          if (a != b && a != d && a != e && b != d && b != e && d != e) {
            return true;
          }
        }
      }
    }
    return false;
  }

  void yield() {
    if (count_only_) {
      ++count_;
      return;
    }
    Tiling t = validate_tiling(board_, placements_);
    ++visited_;
    if (!(*visit_)(t)) stop_ = true;
    if (limit_ && visited_ >= *limit_) stop_ = true;
  }

  BoardSpec board_;
  int k_;
  bool tatami_;
  bool horizontal_first_;
  std::optional<long long> limit_;
  std::vector<int> owner_;
  std::vector<Placement> placements_;
  const std::function<bool(const Tiling&)>* visit_ = nullptr;
  bool count_only_ = false;
  bool stop_ = false;
  BigCount count_ = 0;
  long long visited_ = 0;
};

}  // namespace

long long enumerate_tilings(const BoardSpec& board, const EnumerationConfig& config,
                            const std::function<bool(const Tiling&)>& visit) {
  check_inputs(board, config.tile_len);
  if (config.limit && *config.limit <= 0) return 0;
  Backtracker bt(board, config);
  return bt.enumerate(visit);
}

std::vector<Tiling> collect_tilings(const BoardSpec& board,
                                    const EnumerationConfig& config) {
  std::vector<Tiling> out;
  enumerate_tilings(board, config, [&](const Tiling& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

BigCount count_exhaustive(const BoardSpec& board, const EnumerationConfig& config,
                          long long budget_cells) {
  check_inputs(board, config.tile_len);
  if (budget_cells >= 0 && board.cell_count() > budget_cells) {
    std::ostringstream os;
    os << "board has " << board.cell_count()
       << " cells, above the exhaustive-count budget of " << budget_cells;
    throw BudgetExceeded(os.str(), board.cell_count(), budget_cells);
  }
  Backtracker bt(board, config);
  return bt.count();
}

BigCount count_profile_dp(const BoardSpec& board, int tile_len,
                          const ProfileDpLimits& limits) {
  check_inputs(board, tile_len);
  const int rows = board.rows;
  const int cols = board.cols;
  if (cols == 0) return 1;
  if (tile_len == 1) return 1;
  if (rows > limits.max_rows) {
    std::ostringstream os;
    os << rows << " rows exceeds the profile-DP row cap of " << limits.max_rows;
    throw StateSpaceTooLarge(os.str());
  }
  // states = tile_len^rows, guarded against both the cap and overflow.
  long long states = 1;
  std::vector<long long> pow_k(rows);
  for (int r = 0; r < rows; ++r) {
    pow_k[r] = states;
    if (states > limits.max_states / tile_len) {
      std::ostringstream os;
      os << "profile DP needs " << tile_len << "^" << rows
         << " states, above the cap of " << limits.max_states;
      throw StateSpaceTooLarge(os.str());
    }
    states *= tile_len;
  }

  // State: per row, how many further columns the tile entering this column
  // still occupies (0 = free). dp holds counts before processing a column.
  std::vector<BigCount> dp(states), next(states);
  dp[0] = 1;
  std::vector<int> cur(rows);

  // Fill the free rows of the current column top-down. Horizontal tiles
  // protrude tile_len - 1 columns; vertical tiles consume a run of free
  // rows within the column.
  std::function<void(int, long long, const BigCount&, int)> fill =
      [&](int r, long long next_state, const BigCount& ways, int col) {
        if (r == rows) {
          next[next_state] += ways;
          return;
        }
        if (cur[r] > 0) {
          fill(r + 1, next_state + 1LL * (cur[r] - 1) * pow_k[r], ways, col);
          return;
        }
        if (col + tile_len <= cols) {
          fill(r + 1, next_state + 1LL * (tile_len - 1) * pow_k[r], ways, col);
        }
        if (r + tile_len <= rows) {
          bool run_free = true;
          for (int j = 1; j < tile_len; ++j) {
            if (cur[r + j] != 0) {
              run_free = false;
              break;
            }
          }
          if (run_free) fill(r + tile_len, next_state, ways, col);
        }
      };

  for (int col = 0; col < cols; ++col) {
    for (auto& v : next) v = 0;
    for (long long s = 0; s < states; ++s) {
      if (dp[s] == 0) continue;
      long long rem = s;
      for (int r = 0; r < rows; ++r) {
        cur[r] = static_cast<int>(rem % tile_len);
        rem /= tile_len;
      }
      fill(0, 0, dp[s], col);
    }
    dp.swap(next);
  }
  return dp[0];
}

}  // namespace tilecount
