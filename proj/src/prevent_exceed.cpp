#include "wsnash/prevent_exceed.hpp"

#include <stdexcept>

#include "wsnash/errors.hpp"

namespace wsnash {

namespace {

void check_params(const PeParams& params) {
    if (params.v < 0 || params.v > 1 || params.u < 0 || params.u > 1)
        throw std::invalid_argument("payoff caps must lie in [0,1]");
}

} // namespace

LinearSystem build_pe(const BimatrixGame& game, const PeParams& params) {
    check_params(params);
    const std::size_t n = game.size();

    LinearSystem system;
    system.num_vars = 2 * n; // x_1..x_n, then y_1..y_n

    LinearConstraint sum_x;
    sum_x.coeffs.assign(2 * n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) sum_x.coeffs[i] = 1;
    sum_x.relation = Relation::Equal;
    sum_x.rhs = 1;
    system.constraints.push_back(std::move(sum_x));

    LinearConstraint sum_y;
    sum_y.coeffs.assign(2 * n, Rational(0));
    for (std::size_t j = 0; j < n; ++j) sum_y.coeffs[n + j] = 1;
    sum_y.relation = Relation::Equal;
    sum_y.rhs = 1;
    system.constraints.push_back(std::move(sum_y));

    for (std::size_t i = 0; i < n; ++i) {
        LinearConstraint row; // R_{i.} y <= v
        row.coeffs.assign(2 * n, Rational(0));
        for (std::size_t j = 0; j < n; ++j) row.coeffs[n + j] = game.row_payoffs().at(i, j);
        row.relation = Relation::LessEq;
        row.rhs = params.v;
        system.constraints.push_back(std::move(row));
    }

    for (std::size_t j = 0; j < n; ++j) {
        LinearConstraint col; // x^T C_{.j} <= u
        col.coeffs.assign(2 * n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) col.coeffs[i] = game.col_payoffs().at(i, j);
        col.relation = Relation::LessEq;
        col.rhs = params.u;
        system.constraints.push_back(std::move(col));
    }

    return system;
}

std::optional<StrategyProfile> solve_pe(const BimatrixGame& game, const PeParams& params) {
    auto point = solve_feasible(build_pe(game, params));
    if (!point) return std::nullopt;

    const std::size_t n = game.size();
    std::vector<Rational> xw(point->begin(), point->begin() + n);
    std::vector<Rational> yw(point->begin() + n, point->end());
    StrategyProfile profile{MixedStrategy(std::move(xw)), MixedStrategy(std::move(yw))};

    if (!prevents_exceeding(game, profile, params.v, params.u))
        throw GuaranteeError("PE solution failed the prevents-exceeding re-check");
    return profile;
}

std::optional<MixedStrategy> symmetric_pe(const BimatrixGame& game, const Rational& u) {
    if (!is_symmetric(game))
        throw std::invalid_argument("symmetric_pe requires a symmetric game");
    check_params(PeParams{u, u});
    const std::size_t n = game.size();

    LinearSystem system;
    system.num_vars = n;

    LinearConstraint sum_x;
    sum_x.coeffs.assign(n, Rational(1));
    sum_x.relation = Relation::Equal;
    sum_x.rhs = 1;
    system.constraints.push_back(std::move(sum_x));

    for (std::size_t j = 0; j < n; ++j) {
        LinearConstraint row; // R_{j.} x <= u
        row.coeffs.assign(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) row.coeffs[i] = game.row_payoffs().at(j, i);
        row.relation = Relation::LessEq;
        row.rhs = u;
        system.constraints.push_back(std::move(row));
    }

    auto point = solve_feasible(system);
    if (!point) return std::nullopt;

    MixedStrategy x(std::move(*point));
    StrategyProfile profile{x, x};
    if (!prevents_exceeding(game, profile, u, u))
        throw GuaranteeError("symmetric PE solution failed the prevents-exceeding re-check");
    return x;
}

} // namespace wsnash
