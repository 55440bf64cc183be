#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace tilecount {

// Tiling counts overflow uint64 quickly (domino counts on 4xm boards pass
// 2^64 near m = 90), so every counting API returns an arbitrary-precision
// integer.
using BigCount = boost::multiprecision::cpp_int;

}  // namespace tilecount
