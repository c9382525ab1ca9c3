#pragma once

// Dense exact linear algebra over the rationals. Matrices are small (the
// ambient dimension is at most four or five), so everything is plain
// Gaussian elimination on row vectors.

#include "coconvex/arith.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace coconvex {

using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;

RatMatrix to_rational(const std::vector<std::vector<Integer>>& rows);

std::size_t rank(RatMatrix m);

Rational determinant(RatMatrix m);

/// Solution of the square system a·x = b, or nullopt when a is singular.
std::optional<RatVector> solve(RatMatrix a, RatVector b);

/// Basis of {x : m·x = 0}. `cols` is needed when m has no rows.
std::vector<RatVector> nullspace(RatMatrix m, std::size_t cols);

/// Indices of a maximal linearly independent subset of rows, chosen greedily
/// in order.
std::vector<std::size_t> independent_rows(const RatMatrix& m);

Rational dot(const RatVector& a, const RatVector& b);

}  // namespace coconvex
