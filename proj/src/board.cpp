#include "tilecount/board.hpp"

#include <algorithm>
#include <sstream>

#include "tilecount/errors.hpp"

namespace tilecount {

namespace {

std::string describe(const Placement& p) {
  std::ostringstream os;
  os << (p.orient == Orientation::Horizontal ? "1x" : "") << p.len
     << (p.orient == Orientation::Horizontal ? " horizontal" : "x1 vertical")
     << " tile at (" << p.row << ", " << p.col << ")";
  return os.str();
}

std::vector<Placement> sorted_placements(const Tiling& t) {
  auto ps = t.placements();
  std::sort(ps.begin(), ps.end(), [](const Placement& a, const Placement& b) {
    return std::tie(a.row, a.col, a.orient, a.len) <
           std::tie(b.row, b.col, b.orient, b.len);
  });
  return ps;
}

}  // namespace

bool Tiling::operator==(const Tiling& other) const {
  return board_ == other.board_ &&
         sorted_placements(*this) == sorted_placements(other);
}

Tiling validate_tiling(const BoardSpec& board, std::vector<Placement> placements) {
  if (board.rows < 1 || board.cols < 0) {
    throw OutOfBoundsError("board must have rows >= 1 and cols >= 0");
  }
  std::vector<int> owner(board.cell_count(), -1);
  for (std::size_t i = 0; i < placements.size(); ++i) {
    Placement& p = placements[i];
    if (p.len < 1) throw OutOfBoundsError(describe(p) + ": length must be >= 1");
    if (p.len == 1) p.orient = Orientation::Horizontal;
    const int dr = p.orient == Orientation::Vertical ? 1 : 0;
    const int dc = 1 - dr;
    const int end_row = p.row + dr * (p.len - 1);
    const int end_col = p.col + dc * (p.len - 1);
    if (p.row < 0 || p.col < 0 || end_row >= board.rows || end_col >= board.cols) {
      throw OutOfBoundsError(describe(p) + " leaves the board");
    }
    for (int j = 0; j < p.len; ++j) {
      const int idx = (p.row + dr * j) * board.cols + (p.col + dc * j);
      if (owner[idx] != -1) {
        throw OverlapError(describe(p) + " overlaps " +
                           describe(placements[owner[idx]]));
      }
      owner[idx] = static_cast<int>(i);
    }
  }
  for (int r = 0; r < board.rows; ++r) {
    for (int c = 0; c < board.cols; ++c) {
      if (owner[r * board.cols + c] == -1) {
        std::ostringstream os;
        os << "cell (" << r << ", " << c << ") is not covered";
        throw CoverageError(os.str());
      }
    }
  }
  return Tiling(board, std::move(placements), std::move(owner));
}

std::vector<TatamiViolation> tatami_violations(const Tiling& tiling) {
  const BoardSpec& b = tiling.board();
  std::vector<TatamiViolation> out;
  for (int vy = 1; vy < b.rows; ++vy) {
    for (int vx = 1; vx < b.cols; ++vx) {
      const int a = tiling.owner(vy - 1, vx - 1);
      const int c = tiling.owner(vy - 1, vx);
      const int d = tiling.owner(vy, vx - 1);
      const int e = tiling.owner(vy, vx);
      if (a != c && a != d && a != e && c != d && c != e && d != e) {
        out.push_back({vx, vy});
      }
    }
  }
  return out;
}

bool is_tatami(const Tiling& tiling) { return tatami_violations(tiling).empty(); }

namespace {

// Box-drawing glyph for a junction, indexed by which of the four segments
// around it are drawn: bit 0 up, bit 1 down, bit 2 left, bit 3 right.
const char* junction_glyph(unsigned mask) {
  switch (mask) {
    case 0b0011: return "│";  // up+down
    case 0b1100: return "─";  // left+right
    case 0b1010: return "┌";  // down+right
    case 0b0110: return "┐";  // down+left
    case 0b1001: return "└";  // up+right
    case 0b0101: return "┘";  // up+left
    case 0b1011: return "├";  // up+down+right
    case 0b0111: return "┤";  // up+down+left
    case 0b1110: return "┬";  // down+left+right
    case 0b1101: return "┴";  // up+left+right
    case 0b1111: return "┼";  // all four
    default: return " ";
  }
}

}  // namespace

std::string render_ascii(const Tiling& tiling) {
  const int rows = tiling.board().rows;
  const int cols = tiling.board().cols;
  std::string out;

  if (cols == 0) {
    out += "┌┐\n";
    for (int i = 0; i < 2 * rows - 1; ++i) out += "││\n";
    out += "└┘\n";
    return out;
  }

  // An edge is drawn when it lies on the boundary or separates two tiles.
  auto vertical_edge = [&](int r, int vx) {
    if (vx == 0 || vx == cols) return true;
    return tiling.owner(r, vx - 1) != tiling.owner(r, vx);
  };
  auto horizontal_edge = [&](int vy, int c) {
    if (vy == 0 || vy == rows) return true;
    return tiling.owner(vy - 1, c) != tiling.owner(vy, c);
  };

  for (int vy = 0; vy <= rows; ++vy) {
    // Lattice line: junctions and horizontal edge segments.
    for (int vx = 0; vx <= cols; ++vx) {
      unsigned mask = 0;
      if (vy > 0 && vertical_edge(vy - 1, vx)) mask |= 0b0001;
      if (vy < rows && vertical_edge(vy, vx)) mask |= 0b0010;
      if (vx > 0 && horizontal_edge(vy, vx - 1)) mask |= 0b0100;
      if (vx < cols && horizontal_edge(vy, vx)) mask |= 0b1000;
      out += junction_glyph(mask);
      if (vx < cols) {
        out += horizontal_edge(vy, vx) ? "──" : "  ";
      }
    }
    out += '\n';
    if (vy == rows) break;
    // Cell line: vertical edges and cell interiors.
    for (int vx = 0; vx <= cols; ++vx) {
      out += vertical_edge(vy, vx) ? "│" : " ";
      if (vx < cols) out += "  ";
    }
    out += '\n';
  }
  return out;
}

namespace {

Tiling transformed(const Tiling& t, bool flip_rows, bool flip_cols) {
  const int rows = t.board().rows;
  const int cols = t.board().cols;
  std::vector<Placement> ps = t.placements();
  for (Placement& p : ps) {
    const bool horiz = p.orient == Orientation::Horizontal;
    if (flip_rows) p.row = rows - p.row - (horiz ? 1 : p.len);
    if (flip_cols) p.col = cols - p.col - (horiz ? p.len : 1);
  }
  return validate_tiling(t.board(), std::move(ps));
}

}  // namespace

Tiling reflect_horizontal(const Tiling& tiling) {
  return transformed(tiling, false, true);
}

Tiling reflect_vertical(const Tiling& tiling) {
  return transformed(tiling, true, false);
}

Tiling rotate_180(const Tiling& tiling) { return transformed(tiling, true, true); }

}  // namespace tilecount
