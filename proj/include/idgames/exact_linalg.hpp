#pragma once

#include "idgames/rational.hpp"

#include <vector>

namespace idg {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Rank by fraction-exact Gaussian elimination.
std::size_t rank(RationalMatrix m);

// Dimension of the affine hull of a point set; -1 for the empty set.
int affine_dimension(const RationalMatrix& points);

}  // namespace idg
