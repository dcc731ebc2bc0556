#pragma once

#include <optional>
#include <vector>

#include "wsnash/matrix.hpp"
#include "wsnash/rational.hpp"

namespace wsnash {

// Unique solution of the square system A x = b, or nullopt when A is
// singular. Exact Gaussian elimination, first nonzero pivot in each column.
std::optional<std::vector<Rational>> solve_square(RationalMatrix a, std::vector<Rational> b);

} // namespace wsnash
