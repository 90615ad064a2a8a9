#pragma once

#include <optional>
#include <vector>

#include "sfm/scalar.hpp"

namespace sfm {

// Dense matrix over Q, row-major.
using RatMatrix = std::vector<std::vector<Rational>>;

std::size_t rank(RatMatrix m);

struct SolveResult {
    bool consistent = false;
    std::size_t rank = 0;
    std::size_t nullity = 0;
    std::vector<Rational> x;  // one particular solution (free variables zero) when consistent
};

// Solves m x = rhs by Gauss-Jordan elimination.
SolveResult solve(RatMatrix m, std::vector<Rational> rhs, std::size_t ncols);

}  // namespace sfm
