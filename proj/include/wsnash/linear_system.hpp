#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wsnash/rational.hpp"

namespace wsnash {

enum class Relation { LessEq, Equal, GreaterEq };

struct LinearConstraint {
    std::vector<Rational> coeffs;
    Relation relation = Relation::LessEq;
    Rational rhs;
};

// A system over nonnegative variables. Free variables are deliberately
// unsupported: every system we build lives on a probability simplex.
struct LinearSystem {
    std::size_t num_vars = 0;
    std::vector<LinearConstraint> constraints;
    bool nonneg = true;
};

// Throws std::invalid_argument on length mismatches, num_vars == 0, or
// nonneg == false.
void validate(const LinearSystem& system);

// Exact substitution check of every constraint plus nonnegativity.
bool satisfies(const LinearSystem& system, const std::vector<Rational>& assignment);

// Phase-1 simplex with Bland's anti-cycling rule. Returns a feasible point
// (re-verified by substitution) or nullopt when the system is infeasible.
// Deterministic: pivots always pick the lowest eligible index.
std::optional<std::vector<Rational>> solve_feasible(const LinearSystem& system);

} // namespace wsnash
