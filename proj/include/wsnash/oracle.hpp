#pragma once

#include <cstddef>
#include <vector>

#include "wsnash/game.hpp"

namespace wsnash {

// An exact Nash equilibrium found by support enumeration.
struct NeRecord {
    StrategyProfile profile;
    Rational row_value;  // x^T R y
    Rational col_value;  // x^T C y
    bool symmetric;      // row strategy equals column strategy
};

// Exact support enumeration over equal-size support pairs: solves the
// indifference-and-normalization system for each pair, keeps solutions with
// strictly positive weights on the claimed support, and verifies best
// responses outside it. Singular (degenerate) support systems are skipped;
// pure equilibria always survive via the size-1 supports. Every returned
// record has epsilon_ne = 0 exactly. Guarded to n <= max_n; this is a test
// oracle, not a large-game solver.
std::vector<NeRecord> support_enumeration_ne(const BimatrixGame& game, std::size_t max_n = 5);

// The records of support_enumeration_ne whose two strategies coincide.
// Every symmetric game has at least one (Nash). Rejects non-symmetric games.
std::vector<NeRecord> symmetric_ne(const BimatrixGame& game, std::size_t max_n = 5);

} // namespace wsnash
