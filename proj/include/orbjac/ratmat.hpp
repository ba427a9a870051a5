#pragma once

#include <vector>

#include "orbjac/rational.hpp"

namespace orbjac {

using RatMat = std::vector<std::vector<Rat>>;

/// Determinant by fraction-free-ish Gaussian elimination over Q.
Rat rat_det(RatMat m);

/// Inverse of a square matrix; throws SingularExponentMatrix when singular.
RatMat rat_inverse(RatMat m);

/// Solve m * x = rhs for square m.
std::vector<Rat> rat_solve(RatMat m, std::vector<Rat> rhs);

}  // namespace orbjac
