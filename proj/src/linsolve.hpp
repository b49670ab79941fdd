#pragma once

#include <optional>
#include <vector>

#include "rat.hpp"

namespace m24 {

// Exact Gauss-Jordan over Q for the small dense systems the ansatz produces.
struct RrefResult {
  std::vector<std::vector<Rat>> mat;  // reduced [A | b]
  std::vector<long> pivot_cols;       // pivot column per reduced row
  bool consistent = true;             // no pivot in the RHS column
};

// Reduce the augmented matrix [A | b]; the last column is the RHS.
RrefResult rref_augmented(std::vector<std::vector<Rat>> rows);

// Particular solution with all free variables set to zero, or nullopt when
// inconsistent.
std::optional<std::vector<Rat>> solve_particular(const std::vector<std::vector<Rat>>& a,
                                                 const std::vector<Rat>& b);

}  // namespace m24
