#include "wsnash/oracle.hpp"

#include <bit>
#include <optional>
#include <stdexcept>

#include "wsnash/rational_linalg.hpp"

namespace wsnash {

namespace {

std::vector<std::size_t> mask_indices(unsigned mask, std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) out.push_back(i);
    return out;
}

// Solves for the strategy that makes every pure strategy in `indifferent`
// earn the same value: unknowns are the weights on `support` plus that
// common value. Returns the full weight vector (zeros off support) and the
// value, or nothing when the system is singular or a weight is not strictly
// positive.
std::optional<std::pair<std::vector<Rational>, Rational>> solve_support(
    const std::vector<std::size_t>& indifferent, const std::vector<std::size_t>& support,
    const std::size_t n, auto&& payoff_against) {
    const std::size_t s = support.size();
    RationalMatrix a(s + 1, s + 1);
    std::vector<Rational> b(s + 1, Rational(0));
    for (std::size_t r = 0; r < s; ++r) {
        for (std::size_t c = 0; c < s; ++c)
            a.at(r, c) = payoff_against(indifferent[r], support[c]);
        a.at(r, s) = -1; // minus the common value
    }
    for (std::size_t c = 0; c < s; ++c) a.at(s, c) = 1; // weights sum to 1
    b[s] = 1;

    auto solution = solve_square(std::move(a), std::move(b));
    if (!solution) return std::nullopt;
    for (std::size_t c = 0; c < s; ++c)
        if ((*solution)[c] <= 0) return std::nullopt;

    std::vector<Rational> weights(n, Rational(0));
    for (std::size_t c = 0; c < s; ++c) weights[support[c]] = (*solution)[c];
    return std::make_pair(std::move(weights), (*solution)[s]);
}

} // namespace

std::vector<NeRecord> support_enumeration_ne(const BimatrixGame& game, std::size_t max_n) {
    const std::size_t n = game.size();
    if (n > max_n)
        throw std::invalid_argument("game exceeds the support-enumeration guard");

    const RationalMatrix& r = game.row_payoffs();
    const RationalMatrix& c = game.col_payoffs();
    std::vector<NeRecord> records;

    const unsigned full = (1u << n) - 1;
    for (unsigned rmask = 1; rmask <= full; ++rmask) {
        auto row_support = mask_indices(rmask, n);
        for (unsigned cmask = 1; cmask <= full; ++cmask) {
            if (std::popcount(rmask) != std::popcount(cmask)) continue;
            auto col_support = mask_indices(cmask, n);

            // y makes the supported rows indifferent; x the supported columns.
            auto y_sol = solve_support(row_support, col_support, n,
                                       [&](std::size_t i, std::size_t j) { return r.at(i, j); });
            if (!y_sol) continue;
            auto x_sol = solve_support(col_support, row_support, n,
                                       [&](std::size_t j, std::size_t i) { return c.at(i, j); });
            if (!x_sol) continue;

            const auto& [y_weights, v] = *y_sol;
            const auto& [x_weights, u] = *x_sol;

            bool best = true;
            for (std::size_t i = 0; i < n && best; ++i) {
                if (rmask & (1u << i)) continue;
                Rational value(0);
                for (std::size_t j : col_support) value += r.at(i, j) * y_weights[j];
                if (value > v) best = false;
            }
            for (std::size_t j = 0; j < n && best; ++j) {
                if (cmask & (1u << j)) continue;
                Rational value(0);
                for (std::size_t i : row_support) value += c.at(i, j) * x_weights[i];
                if (value > u) best = false;
            }
            if (!best) continue;

            StrategyProfile profile{MixedStrategy(x_weights), MixedStrategy(y_weights)};
            if (wsne_epsilon(game, profile).epsilon_ne != 0)
                throw std::logic_error("support enumeration produced a non-equilibrium");
            bool symmetric = profile.row == profile.col;
            records.push_back(NeRecord{std::move(profile), v, u, symmetric});
        }
    }
    return records;
}

std::vector<NeRecord> symmetric_ne(const BimatrixGame& game, std::size_t max_n) {
    if (!is_symmetric(game))
        throw std::invalid_argument("symmetric_ne requires a symmetric game");
    std::vector<NeRecord> out;
    for (NeRecord& record : support_enumeration_ne(game, max_n))
        if (record.symmetric) out.push_back(std::move(record));
    return out;
}

} // namespace wsnash
