#pragma once

#include <cstddef>
#include <vector>

#include "tcas/rational.hpp"

namespace tcas {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Rank by exact Gaussian elimination.
std::size_t rank(RationalMatrix rows);

/// Indices of a maximal linearly independent subset of the rows, chosen
/// greedily in order (deterministic).
std::vector<std::size_t> independent_rows(const RationalMatrix& rows);

}  // namespace tcas
