#pragma once

#include <cstdint>
#include <string>

#include "wsnash/game.hpp"
#include "wsnash/well_support.hpp"

namespace wsnash {

enum class SolutionPath { PE, WS };

struct Solution {
    StrategyProfile profile;
    SolutionPath path;
    RegretReport certificate;         // recomputed independently of the solver
    std::uint64_t pairs_examined = 0; // 0 on the PE path
    Rational delta;
    std::uint64_t kappa = 0;          // 0 on the PE path
    std::string warning;              // set when delta >= 1/2 (vacuous guarantee)
};

// Computes a (1/2 + delta)-well-supported equilibrium of a symmetric game
// with payoffs in [0,1]: first tries the one-sided PE system at 1/2 and
// returns (x, x) on success (then epsilon_wsne <= 1/2); otherwise scans
// kappa(delta)-uniform multiset pairs for a WS(1/2, 1/2, I, J, delta)
// solution (then epsilon_wsne <= 1/2 + delta). Exhausting the scan without
// a hit contradicts the existence guarantee and raises GuaranteeError;
// running out of pair budget raises BudgetError instead.
Solution half_wsne(const BimatrixGame& game, const Rational& delta,
                   const SearchOptions& options = {});

} // namespace wsnash
