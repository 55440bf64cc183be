#pragma once

#include <utility>
#include <vector>

#include "tilecount/big_count.hpp"
#include "tilecount/families.hpp"

namespace tilecount {

// Exponential-sum form of a counting sequence: value(n) = sum_i
// coeffs[i] * roots[i]^n, evaluated in doubles. For families counted on a
// sublattice the sum runs over the nonzero subsequence and
// subsequence_step converts a board width to the exponent index.
struct ClosedFormSpec {
  FamilySpec family;
  std::vector<double> roots;
  std::vector<double> coeffs;
  int subsequence_step = 1;
};

// Solves sum_i coeffs[i] * roots[i]^index = value for the coefficients
// (generalized Vandermonde system, Gaussian elimination with partial
// pivoting). Indices may be negative; roots must be nonzero in that case.
// Throws SingularSystem when a pivot falls below 1e-12, which is how
// numerically coincident roots surface.
std::vector<double> fit_coefficients(
    const std::vector<double>& roots,
    const std::vector<std::pair<long long, double>>& initial);

// The fitted exponential sums for the three solved domino families.
ClosedFormSpec closed_form_spec_2xm();
ClosedFormSpec closed_form_spec_3xm();
ClosedFormSpec closed_form_spec_4xm();

double eval_closed_form(const ClosedFormSpec& spec, long long m);

// Approximate domino-tiling counts of the 2xm / 3xm / 4xm boards, m >= 1.
// Nearest-integer rounding is exact up to the documented width cliffs
// (m <= 30, even m <= 30, m <= 25 respectively); closed_form_3xm is
// exactly 0.0 at odd m.
double closed_form_2xm(long long m);
double closed_form_3xm(long long m);
double closed_form_4xm(long long m);

// Product formula for domino tilings of the m x n board:
// prod_j prod_k (4cos^2(pi j/(m+1)) + 4cos^2(pi k/(n+1)))^(1/4).
// The factor with 2j = m+1 and 2k = n+1 is an exact zero, so odd x odd
// boards return exactly 0.0. Accurate to ~1e-9 relative over the tested
// range (m <= 4, n <= 15); rounding gives the exact count there.
double kasteleyn_count(int m, int n);

}  // namespace tilecount
