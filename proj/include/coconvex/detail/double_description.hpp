#pragma once

#include "coconvex/arith.hpp"

#include <cstddef>
#include <vector>

namespace coconvex::detail {

/// Extreme rays of the pointed cone {x ∈ Rᵈ : row·x ≥ 0 for every row},
/// by incremental double description with exact integer arithmetic and the
/// combinatorial adjacency test. Rows must have rank d. Output rays are
/// primitive and sorted lexicographically.
std::vector<std::vector<Integer>> extreme_rays(const std::vector<std::vector<Integer>>& rows, std::size_t d);

}  // namespace coconvex::detail
