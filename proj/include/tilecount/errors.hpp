#pragma once

#include <stdexcept>
#include <string>

namespace tilecount {

// Base class for every error this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A placement lies (partly) outside the board.
class OutOfBoundsError : public Error {
 public:
  using Error::Error;
};

// Two placements cover a common cell.
class OverlapError : public Error {
 public:
  using Error::Error;
};

// Some cell is covered by no placement.
class CoverageError : public Error {
 public:
  using Error::Error;
};

// Exhaustive enumeration was asked to cover more cells than its budget
// allows. Carries the offending cell count so callers can report it.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, long long cells, long long budget)
      : Error(what), cells(cells), budget(budget) {}
  long long cells;
  long long budget;
};

// The profile DP would need more states than the configured cap.
class StateSpaceTooLarge : public Error {
 public:
  using Error::Error;
};

// A sequence was evaluated at an index before its first defined term.
class IndexBeforeStart : public Error {
 public:
  using Error::Error;
};

// Coefficient fitting hit a (numerically) singular system.
class SingularSystem : public Error {
 public:
  using Error::Error;
};

// No counting family matches the requested board/tile combination.
class UnsupportedFamily : public Error {
 public:
  using Error::Error;
};

}  // namespace tilecount
