#pragma once

#include "mdx/rational.hpp"

#include <optional>
#include <vector>

namespace mdx {

// Dense exact Gaussian elimination. Column pivots are chosen left to right,
// within a column the first usable row, so results are deterministic.
struct LinearSolution {
    std::optional<std::vector<Rational>> particular;  // free variables set to 0
    std::vector<std::vector<Rational>> nullspace;     // basis, one vector per free column
};

LinearSolution solve_linear(std::vector<std::vector<Rational>> m,
                            std::vector<Rational> rhs);

}  // namespace mdx
