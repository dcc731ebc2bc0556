#pragma once

#include <cstdint>
#include <optional>

#include "wsnash/dot_kernels.hpp"
#include "wsnash/game.hpp"
#include "wsnash/multiset.hpp"

namespace wsnash {

// ceil(2 ln(1/delta) / delta^2), evaluated with certified interval rounding:
// precision widens until the enclosure of the (transcendental, hence never
// integral) value pins a single ceiling. Rejects delta outside (0,1).
mpz_class kappa_exact(const Rational& delta);

// Same value narrowed to uint64; deltas tiny enough to overflow it put the
// search far beyond any budget, so the overflow surfaces as BudgetError.
std::uint64_t kappa(const Rational& delta);

// Thresholds and support size for the well-support system WS(v, u, I, J, delta).
struct WsParams {
    Rational v;
    Rational u;
    Rational delta;      // in (0, 1)
    std::uint64_t kappa; // derived: ceil(2 ln(1/delta)/delta^2)

    static WsParams make(const Rational& v, const Rational& u, const Rational& delta);
};

// weight_i = counts_i / k: the k-uniform strategy with empirical
// distribution of the multiset. Rejects the empty multiset.
MixedStrategy strategy_from_multiset(const Multiset& ms);

// Decides WS(v, u, I, J, delta): the equalities pin x = I/kappa and
// y = J/kappa, so membership reduces to checking R_{i.} y >= v - delta on
// supp(x) and x^T C_{.j} >= u - delta on supp(y). Exact arithmetic; this is
// the reference the search's integer fast path is verified against.
std::optional<StrategyProfile> check_ws(const BimatrixGame& game, const WsParams& params,
                                        const Multiset& I, const Multiset& J);

struct SearchOptions {
    unsigned jobs = 1;                        // worker threads for the pair scan
    std::uint64_t pair_budget = 100'000'000;  // abort above this many pairs
    KernelChoice kernel = KernelChoice::Auto;
};

struct WsSearchResult {
    std::optional<StrategyProfile> profile; // engaged iff some pair satisfied WS
    Multiset row_multiset;                  // the successful I (when found)
    Multiset col_multiset;                  // the successful J (when found)
    std::uint64_t pairs_examined = 0;       // rank of the hit + 1, or total on exhaustion
    mpz_class total_pairs;                  // C(n+kappa-1, kappa)^2
    bool exhausted = false;                 // scanned everything, no hit
    const char* kernel_name = "";           // which inner-product path ran
};

// Scans all ordered multiset pairs (I, J) in lexicographic pair order and
// returns the first hit, independent of worker count. Throws BudgetError
// when the pair space exceeds options.pair_budget: a partial scan could not
// certify exhaustion, so it is not attempted.
WsSearchResult search_ws(const BimatrixGame& game, const WsParams& params,
                         const SearchOptions& options = {});

} // namespace wsnash
