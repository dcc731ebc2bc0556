#ifndef WSNASH_GAME_HPP
#define WSNASH_GAME_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "wsnash/matrix.hpp"
#include "wsnash/rational.hpp"

namespace wsnash {

/// Two-player game in normal form: square payoff matrices for the row and
/// column player. Entries are arbitrary rationals; the solvers that need
/// payoffs in [0,1] check entries_within_unit() or normalize() first.
class BimatrixGame {
public:
    BimatrixGame(RationalMatrix row_payoffs, RationalMatrix col_payoffs);

    std::size_t size() const { return n_; }
    const RationalMatrix& row_payoffs() const { return row_payoffs_; }
    const RationalMatrix& col_payoffs() const { return col_payoffs_; }

    bool entries_within_unit() const;

    friend bool operator==(const BimatrixGame& a, const BimatrixGame& b) {
        return a.row_payoffs_ == b.row_payoffs_ && a.col_payoffs_ == b.col_payoffs_;
    }

private:
    std::size_t n_;
    RationalMatrix row_payoffs_;
    RationalMatrix col_payoffs_;
};

/// Probability distribution over pure strategies. Weights are validated at
/// construction: nonnegative, exact sum 1, at least one positive.
class MixedStrategy {
public:
    explicit MixedStrategy(std::vector<Rational> weights);

    static MixedStrategy uniform(std::size_t dimension);
    static MixedStrategy point_mass(std::size_t dimension, std::size_t index);

    std::size_t dimension() const { return weights_.size(); }
    const Rational& weight(std::size_t i) const { return weights_[i]; }
    const std::vector<Rational>& weights() const { return weights_; }

    /// Indices with positive probability, ascending.
    const std::vector<std::size_t>& support() const { return support_; }

    friend bool operator==(const MixedStrategy& a, const MixedStrategy& b) {
        return a.weights_ == b.weights_;
    }

private:
    std::vector<Rational> weights_;
    std::vector<std::size_t> support_;
};

struct StrategyProfile {
    MixedStrategy row;
    MixedStrategy col;

    friend bool operator==(const StrategyProfile& a, const StrategyProfile& b) {
        return a.row == b.row && a.col == b.col;
    }
};

/// Exact equilibrium-quality certificate for one profile.
struct RegretReport {
    Rational row_payoff;       // x^T R y
    Rational col_payoff;       // x^T C y
    Rational row_wsne_regret;  // worst regret over the row support
    Rational col_wsne_regret;
    Rational epsilon_wsne;     // max of the two support regrets
    Rational epsilon_ne;       // best-response regret against the mixed payoff
};

struct PureResponses {
    std::vector<Rational> row_values;  // row_values[i] = R_{i.} y
    std::vector<Rational> col_values;  // col_values[j] = x^T C_{.j}
};

struct NormalizedGame {
    BimatrixGame game;
    Rational shift;  // min entry of the original game
    Rational scale;  // max - min, or 1 for a constant game
};

std::pair<Rational, Rational> payoffs(const BimatrixGame& game, const StrategyProfile& profile);

PureResponses pure_response_values(const BimatrixGame& game, const StrategyProfile& profile);

RegretReport wsne_epsilon(const BimatrixGame& game, const StrategyProfile& profile);

bool is_symmetric(const BimatrixGame& game);

/// Affine map onto [0,1]: shift by the min entry, divide by (max - min).
/// A constant game maps to all zeros with scale 1.
NormalizedGame normalize(const BimatrixGame& game);

/// True iff no pure row response to y earns more than row_cap and no pure
/// column response to x earns more than col_cap.
bool prevents_exceeding(const BimatrixGame& game, const StrategyProfile& profile,
                        const Rational& row_cap, const Rational& col_cap);

/// True iff every supported pure strategy earns at least the given floor
/// against the opponent's strategy, on both sides.
bool well_supports(const BimatrixGame& game, const StrategyProfile& profile,
                   const Rational& row_floor, const Rational& col_floor);

} // namespace wsnash

#endif
