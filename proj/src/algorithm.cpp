#include "wsnash/algorithm.hpp"

#include <stdexcept>

#include "wsnash/errors.hpp"
#include "wsnash/prevent_exceed.hpp"

namespace wsnash {

Solution half_wsne(const BimatrixGame& game, const Rational& delta,
                   const SearchOptions& options) {
    if (!is_symmetric(game))
        throw std::invalid_argument("half_wsne requires a symmetric game");
    if (!game.entries_within_unit())
        throw std::invalid_argument("half_wsne requires payoffs in [0,1]; normalize first");
    if (delta <= 0 || delta >= 1)
        throw std::invalid_argument("delta must lie in (0,1)");

    std::string warning;
    if (delta >= make_rational(1, 2))
        warning = "delta >= 1/2 makes the 1/2+delta guarantee vacuous";

    const Rational half = make_rational(1, 2);
    if (auto x = symmetric_pe(game, half)) {
        StrategyProfile profile{*x, *x};
        RegretReport certificate = wsne_epsilon(game, profile);
        if (certificate.epsilon_wsne > half)
            throw GuaranteeError("PE-path result exceeds the 1/2 regret bound");
        return Solution{std::move(profile), SolutionPath::PE, std::move(certificate),
                        0,                  delta,            0,
                        std::move(warning)};
    }

    WsParams params = WsParams::make(half, half, delta);
    WsSearchResult found = search_ws(game, params, options);
    if (!found.profile)
        throw GuaranteeError(
            "well-support search exhausted " + found.total_pairs.get_str() +
            " pairs without a hit; this contradicts the existence guarantee");
    RegretReport certificate = wsne_epsilon(game, *found.profile);
    if (certificate.epsilon_wsne > half + delta)
        throw GuaranteeError("WS-path result exceeds the 1/2+delta regret bound");
    return Solution{std::move(*found.profile), SolutionPath::WS,   std::move(certificate),
                    found.pairs_examined,      delta,              params.kappa,
                    std::move(warning)};
}

} // namespace wsnash
