#pragma once

#include <optional>

#include "wsnash/game.hpp"
#include "wsnash/linear_system.hpp"

namespace wsnash {

// Payoff caps for the prevents-exceeding system; both must lie in [0,1].
struct PeParams {
    Rational v;  // cap on pure row responses to y
    Rational u;  // cap on pure column responses to x
};

// The feasibility system over (x, y): sum x = 1, sum y = 1, R_{i.} y <= v
// for every row i, x^T C_{.j} <= u for every column j, all variables >= 0.
LinearSystem build_pe(const BimatrixGame& game, const PeParams& params);

// Solves the system above. A returned profile is re-verified to prevent
// exceeding (v, u) before it leaves this function.
std::optional<StrategyProfile> solve_pe(const BimatrixGame& game, const PeParams& params);

// One-sided specialization for symmetric games: find x with R_{j.} x <= u
// for all j. Since C = R^T, the profile (x, x) then prevents exceeding
// (u, u). Rejects non-symmetric games.
std::optional<MixedStrategy> symmetric_pe(const BimatrixGame& game, const Rational& u);

} // namespace wsnash
