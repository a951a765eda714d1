#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <omega/rational.hh>

namespace omega::detail
{
  /// One equation: sum over (column, coefficient) = rhs.
  struct sparse_equation
  {
    std::map<std::uint32_t, rational> coefficients;
    rational rhs;
  };

  /// Exact sparse Gaussian elimination. Columns are eliminated in order of
  /// increasing current fill; within a column the pivot is the first
  /// remaining row with a nonzero entry. Throws std::domain_error if the
  /// system is singular.
  std::vector<rational> solve_exact(std::vector<sparse_equation> system);
}
