#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tilecount/big_count.hpp"
#include "tilecount/recurrence.hpp"

namespace tilecount {

enum class FamilyKind {
  Domino2xM,
  Domino3xM,
  Domino4xM,
  Tromino4xM,
  SquareTile,
  KPlus1,
  Tatami2xM,
  Tatami3xM,
  Tatami4xM,
};

// A solved board family: a fixed row count and tile length, counted as a
// function of the board width m. SquareTile{param = m} is the m x n board
// tiled by m x 1 tiles (rows = tile length); KPlus1{param = k} is the
// (k+1) x n board tiled by k x 1 tiles. The tatami families admit only
// tilings where no four tiles meet at a vertex.
struct FamilySpec {
  FamilyKind kind = FamilyKind::Domino2xM;
  // m for SquareTile, k for KPlus1, unused otherwise.
  int param = 0;

  bool operator==(const FamilySpec&) const = default;
};

FamilySpec square_tile(int m);  // requires m >= 2
FamilySpec kplus1(int k);       // requires k >= 2

int family_rows(const FamilySpec& f);
int family_tile_len(const FamilySpec& f);
bool family_tatami(const FamilySpec& f);

// Catalogue name, kebab-case: "domino-3xm", "tatami-4xm", "square-tile-5",
// "kplus1-3".
std::string family_name(const FamilySpec& f);

// Inverse of family_name. Parameterized families parse either from the
// suffixed form ("kplus1-3") or from the bare prefix plus an explicit
// param.
std::optional<FamilySpec> family_from_name(const std::string& name,
                                           std::optional<int> param = {});

// The family living on rows x m boards with this tile length and tatami
// restriction, if one exists.
std::optional<FamilySpec> infer_family(int rows, int tile_len, bool tatami);

// The family's constant-coefficient recurrence. Families whose counts are
// zero off a sublattice (Domino3xM, Tromino4xM, Tatami3xM, KPlus1) carry
// the recurrence of the nonzero subsequence; width_step maps a recurrence
// index back to a board width (width = width_step * index).
struct FamilyRecurrence {
  LinearRecurrence rec;
  int width_step = 1;
};
FamilyRecurrence family_recurrence(const FamilySpec& f);

// Exact count of the family's (tatami) tilings at board width m. m = 0
// counts the single empty tiling.
BigCount count_family(const FamilySpec& f, long long m);

// m x n board tiled by m x 1 tiles, m >= 2: a(n) = a(n-1) + a(n-m), with
// a(n) = 1 for n < m.
BigCount count_square_tile_family(int m, long long n);

// (k+1) x m board tiled by k x 1 tiles, k >= 2, evaluated by the
// full-history sum a(pk) = 3 a((p-1)k) + 2 sum_{n=2..p} w_n a((p-n)k)
// whose weights w_n = stars_and_bars(k-2, n) count the square-column
// arrangements between vertical blocks. Zero when k does not divide m.
BigCount count_kplus1_family(int k, long long m);

// The untelescoped full-history sums. Defined for Domino3xM, Tromino4xM
// and Domino4xM; agrees with count_family everywhere both exist.
BigCount full_history_count(const FamilySpec& f, long long m);

// Non-negative solutions of x_1 + ... + x_gaps = zeros:
// C(zeros + gaps - 1, gaps - 1), computed exactly.
BigCount stars_and_bars(long long zeros, long long gaps);

// Counts at widths 0..upto, one pass.
std::vector<BigCount> sequence(const FamilySpec& f, long long upto);

}  // namespace tilecount
