#pragma once

#include <cstddef>
#include <vector>

namespace fintop {

/// Dense integer matrix, row major. Rows may be empty (0 x c or r x 0
/// matrices are fine).
using IntMatrix = std::vector<std::vector<long long>>;

/// Elementary divisors d1 | d2 | ... | dr of an integer matrix.
struct SnfResult {
  std::vector<long long> diagonal;
  std::size_t rank() const { return diagonal.size(); }
};

/// Exact Smith normal form. Pivots on the non-zero entry of minimal
/// absolute value; computes in checked 64-bit arithmetic and reruns in
/// arbitrary precision if anything overflows.
SnfResult smith_normal_form(const IntMatrix& m);

}  // namespace fintop
