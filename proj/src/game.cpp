#include "wsnash/game.hpp"

#include <algorithm>
#include <stdexcept>

namespace wsnash {

BimatrixGame::BimatrixGame(RationalMatrix row_payoffs, RationalMatrix col_payoffs)
    : n_(row_payoffs.rows()),
      row_payoffs_(std::move(row_payoffs)),
      col_payoffs_(std::move(col_payoffs)) {
    if (n_ == 0) throw std::invalid_argument("game must have at least one pure strategy");
    if (row_payoffs_.cols() != n_ || col_payoffs_.rows() != n_ || col_payoffs_.cols() != n_)
        throw std::invalid_argument("payoff matrices must be square with identical dimension");
}

bool BimatrixGame::entries_within_unit() const {
    auto ok = [](const Rational& v) { return v >= 0 && v <= 1; };
    return std::ranges::all_of(row_payoffs_.cells(), ok) &&
           std::ranges::all_of(col_payoffs_.cells(), ok);
}

MixedStrategy::MixedStrategy(std::vector<Rational> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw std::invalid_argument("strategy must have positive dimension");
    Rational sum(0);
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (weights_[i] < 0) throw std::invalid_argument("strategy weight is negative");
        if (weights_[i] > 0) support_.push_back(i);
        sum += weights_[i];
    }
    if (sum != 1) throw std::invalid_argument("strategy weights do not sum to 1");
    // sum == 1 with nonnegative weights implies a nonempty support
}

MixedStrategy MixedStrategy::uniform(std::size_t dimension) {
    if (dimension == 0) throw std::invalid_argument("strategy must have positive dimension");
    std::vector<Rational> w(dimension, make_rational(1, static_cast<long>(dimension)));
    return MixedStrategy(std::move(w));
}

MixedStrategy MixedStrategy::point_mass(std::size_t dimension, std::size_t index) {
    if (index >= dimension) throw std::invalid_argument("point mass index out of range");
    std::vector<Rational> w(dimension, Rational(0));
    w[index] = 1;
    return MixedStrategy(std::move(w));
}

namespace {

void check_profile(const BimatrixGame& game, const StrategyProfile& profile) {
    if (profile.row.dimension() != game.size() || profile.col.dimension() != game.size())
        throw std::invalid_argument("profile dimension does not match the game");
}

Rational max_of(const std::vector<Rational>& values) {
    return *std::max_element(values.begin(), values.end());
}

} // namespace

std::pair<Rational, Rational> payoffs(const BimatrixGame& game, const StrategyProfile& profile) {
    check_profile(game, profile);
    Rational row_total(0), col_total(0);
    for (std::size_t i : profile.row.support()) {
        for (std::size_t j : profile.col.support()) {
            Rational mass = profile.row.weight(i) * profile.col.weight(j);
            row_total += mass * game.row_payoffs().at(i, j);
            col_total += mass * game.col_payoffs().at(i, j);
        }
    }
    return {row_total, col_total};
}

PureResponses pure_response_values(const BimatrixGame& game, const StrategyProfile& profile) {
    check_profile(game, profile);
    const std::size_t n = game.size();
    PureResponses out;
    out.row_values.assign(n, Rational(0));
    out.col_values.assign(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        Rational v(0);
        for (std::size_t j : profile.col.support())
            v += game.row_payoffs().at(i, j) * profile.col.weight(j);
        out.row_values[i] = v;
    }
    for (std::size_t j = 0; j < n; ++j) {
        Rational u(0);
        for (std::size_t i : profile.row.support())
            u += game.col_payoffs().at(i, j) * profile.row.weight(i);
        out.col_values[j] = u;
    }
    return out;
}

RegretReport wsne_epsilon(const BimatrixGame& game, const StrategyProfile& profile) {
    PureResponses responses = pure_response_values(game, profile);
    auto [row_payoff, col_payoff] = payoffs(game, profile);

    Rational row_best = max_of(responses.row_values);
    Rational col_best = max_of(responses.col_values);

    // The worst supported pure strategy determines the well-support regret.
    Rational row_worst_supported = responses.row_values[profile.row.support().front()];
    for (std::size_t i : profile.row.support())
        row_worst_supported = std::min(row_worst_supported, responses.row_values[i]);
    Rational col_worst_supported = responses.col_values[profile.col.support().front()];
    for (std::size_t j : profile.col.support())
        col_worst_supported = std::min(col_worst_supported, responses.col_values[j]);

    RegretReport report;
    report.row_payoff = row_payoff;
    report.col_payoff = col_payoff;
    report.row_wsne_regret = row_best - row_worst_supported;
    report.col_wsne_regret = col_best - col_worst_supported;
    report.epsilon_wsne = std::max(report.row_wsne_regret, report.col_wsne_regret);
    report.epsilon_ne = std::max(row_best - row_payoff, col_best - col_payoff);
    return report;
}

bool is_symmetric(const BimatrixGame& game) {
    const std::size_t n = game.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (game.col_payoffs().at(i, j) != game.row_payoffs().at(j, i)) return false;
    return true;
}

NormalizedGame normalize(const BimatrixGame& game) {
    Rational lo = game.row_payoffs().at(0, 0);
    Rational hi = lo;
    auto widen = [&](const Rational& v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    };
    for (const Rational& v : game.row_payoffs().cells()) widen(v);
    for (const Rational& v : game.col_payoffs().cells()) widen(v);

    Rational shift = lo;
    Rational scale = hi == lo ? Rational(1) : Rational(hi - lo);

    const std::size_t n = game.size();
    RationalMatrix r(n, n), c(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            r.at(i, j) = (game.row_payoffs().at(i, j) - shift) / scale;
            c.at(i, j) = (game.col_payoffs().at(i, j) - shift) / scale;
        }
    }
    return {BimatrixGame(std::move(r), std::move(c)), shift, scale};
}

bool prevents_exceeding(const BimatrixGame& game, const StrategyProfile& profile,
                        const Rational& row_cap, const Rational& col_cap) {
    PureResponses responses = pure_response_values(game, profile);
    for (const Rational& v : responses.row_values)
        if (v > row_cap) return false;
    for (const Rational& u : responses.col_values)
        if (u > col_cap) return false;
    return true;
}

bool well_supports(const BimatrixGame& game, const StrategyProfile& profile,
                   const Rational& row_floor, const Rational& col_floor) {
    PureResponses responses = pure_response_values(game, profile);
    for (std::size_t i : profile.row.support())
        if (responses.row_values[i] < row_floor) return false;
    for (std::size_t j : profile.col.support())
        if (responses.col_values[j] < col_floor) return false;
    return true;
}

} // namespace wsnash
