#pragma once

#include <vector>

#include "tilecount/big_count.hpp"

namespace tilecount {

// Constant-coefficient linear recurrence
//
//   a(n) = coeffs[0] * a(n-1) + coeffs[1] * a(n-2) + ... + coeffs[order-1] * a(n-order)
//
// defined for indices n >= start_index. The first terms,
// a(start_index) ... a(valid_from - 1), are given explicitly in `initial`;
// the recurrence relation holds from n = valid_from on. Sequences whose
// early terms break the relation (tatami counts do) simply carry a longer
// initial segment.
struct LinearRecurrence {
  int order = 1;
  std::vector<BigCount> coeffs;
  std::vector<BigCount> initial;
  long long start_index = 0;
  long long valid_from = 0;
};

// a(n) by forward iteration: O(n) multiplications. Throws IndexBeforeStart
// for n < start_index and Error if the recurrence is malformed (coeffs size
// != order, fewer than `order` initial terms, or valid_from inconsistent
// with the initial segment).
BigCount eval_linear_recurrence(const LinearRecurrence& rec, long long n);

// a(start_index) ... a(upto) as a vector. upto below start_index throws.
std::vector<BigCount> recurrence_prefix(const LinearRecurrence& rec, long long upto);

// a(n) through exponentiation of the order x order companion matrix
//
//       | c_1 c_2 ... c_{d-1} c_d |
//   M = |  1   0  ...    0     0  |
//       |  0   1  ...    0     0  |
//       |  0   0  ...    1     0  |
//
// M advances the window (a(n), ..., a(n-d+1)) by one index, so a(n) is the
// first entry of M^(n - valid_from + 1) applied to the window ending at
// valid_from - 1. O(d^3 log n) big-integer multiplications; exact.
BigCount companion_matrix_term(const LinearRecurrence& rec, long long n);

}  // namespace tilecount
