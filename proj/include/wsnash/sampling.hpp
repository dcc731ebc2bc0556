#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "wsnash/game.hpp"

namespace wsnash {

struct SampleConfig {
    Rational delta;             // in (0, 1)
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
};

struct SampleOutcome {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;            // trials whose sample well supports the thresholds
    std::optional<StrategyProfile> first_success;
    Rational empirical_failure_rate;        // (trials - successes) / trials, exact
    double per_side_bound = 0.0;            // kappa * exp(-2 delta^2 kappa)
    double union_bound = 0.0;               // 2 delta^2 ln(1/delta)
    std::uint64_t kappa = 0;
    Rational row_value;                     // v* of the supplied equilibrium
    Rational col_value;                     // u*
};

// SplitMix64 step: advances the state and returns the next value. Used to
// derive independent per-trial generator seeds from one master seed.
std::uint64_t splitmix64(std::uint64_t& state);

// Draws k indices i.i.d. from base and returns the empirical distribution, a
// k-uniform strategy whose support is contained in base's support. Category
// boundaries are floor(cum * 2^64), so a zero-weight index is never drawn.
MixedStrategy sample_k_uniform(const MixedStrategy& base, std::uint64_t k,
                               std::mt19937_64& rng);

// exp(-2 delta^2 k), relative error well under 1e-12.
double hoeffding_tail(const Rational& delta, std::uint64_t k);

// 2 delta^2 ln(1/delta). The double overload exists for irrational arguments
// such as 1/sqrt(e), where the function attains its maximum 1/e.
double union_bound_value(const Rational& delta);
double union_bound_value(double delta);

// Samples kappa(delta)-uniform strategies from an exact equilibrium `ne`
// (epsilon_ne must be 0) and counts how often the sampled profile well
// supports (v* - delta, u* - delta). Trials draw from independent
// deterministic streams, so identical configs reproduce bit-identical
// outcomes in any evaluation order.
SampleOutcome demonstrate_existence(const BimatrixGame& game, const StrategyProfile& ne,
                                    const SampleConfig& config);

} // namespace wsnash
