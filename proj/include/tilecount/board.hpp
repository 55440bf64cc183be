#pragma once

#include <string>
#include <vector>

namespace tilecount {

// Rectangular board of unit cells, rows x cols. cols may be zero (the empty
// board has exactly one tiling, the empty one); rows must be positive.
struct BoardSpec {
  int rows = 1;
  int cols = 0;

  long long cell_count() const { return 1LL * rows * cols; }
  bool operator==(const BoardSpec&) const = default;
};

enum class Orientation { Horizontal, Vertical };

// One 1xlen tile. (row, col) is the anchor: the topmost cell for vertical
// tiles, the leftmost for horizontal ones. A tile of length 1 is stored as
// Horizontal so equal tilings compare equal.
struct Placement {
  int row = 0;
  int col = 0;
  Orientation orient = Orientation::Horizontal;
  int len = 1;

  bool operator==(const Placement&) const = default;
};

// Interior lattice vertex whose four surrounding cells belong to four
// distinct tiles. Coordinates are lattice coordinates: vx in [1, cols-1],
// vy in [1, rows-1]; the vertex touches cells (vy-1, vx-1) through (vy, vx).
struct TatamiViolation {
  int vx = 0;
  int vy = 0;

  bool operator==(const TatamiViolation&) const = default;
};

// A validated tiling: placements that exactly partition the board. Only
// validate_tiling constructs these, so holding one certifies the cover.
class Tiling {
 public:
  const BoardSpec& board() const { return board_; }
  const std::vector<Placement>& placements() const { return placements_; }

  // Index into placements() of the tile covering (row, col).
  int owner(int row, int col) const { return owner_[row * board_.cols + col]; }
  const std::vector<int>& owners() const { return owner_; }

  // Equal boards and the same set of tiles, regardless of placement order.
  bool operator==(const Tiling& other) const;

 private:
  Tiling(BoardSpec board, std::vector<Placement> placements,
         std::vector<int> owner)
      : board_(board),
        placements_(std::move(placements)),
        owner_(std::move(owner)) {}

  BoardSpec board_;
  std::vector<Placement> placements_;
  std::vector<int> owner_;

  friend Tiling validate_tiling(const BoardSpec&, std::vector<Placement>);
};

// Checks that the placements exactly partition the board and returns the
// certified tiling. Throws OutOfBoundsError, OverlapError or CoverageError.
// Ownership indices follow the input order; tiles of length 1 are
// normalized to Horizontal.
Tiling validate_tiling(const BoardSpec& board, std::vector<Placement> placements);

// All interior vertices where four pairwise-distinct tiles meet, in
// row-major (vy, vx) order.
std::vector<TatamiViolation> tatami_violations(const Tiling& tiling);

// True iff no interior vertex has four distinct tiles around it.
bool is_tatami(const Tiling& tiling);

// Unicode box-drawing picture of the tiling. One text row per lattice row
// (2*rows + 1 lines), three columns per cell plus the left border; edges
// between cells of the same tile are left blank. Every line ends in '\n'.
// Equal tilings render byte-identically.
std::string render_ascii(const Tiling& tiling);

// Mirror across the vertical axis (columns reversed).
Tiling reflect_horizontal(const Tiling& tiling);
// Mirror across the horizontal axis (rows reversed).
Tiling reflect_vertical(const Tiling& tiling);
// Half-turn rotation.
Tiling rotate_180(const Tiling& tiling);

}  // namespace tilecount
