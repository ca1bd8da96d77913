#pragma once

#include <vector>

#include "askey/exact/scalar.hpp"

namespace askey {

using ExactMatrix = std::vector<std::vector<ExactScalar>>;

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
/// Throws NotSquare for empty or ragged input.
ExactScalar det(const ExactMatrix& m);

}  // namespace askey
