#pragma once

#include <cstdint>

#include "binfair/instance.hpp"
#include "binfair/welfare.hpp"

namespace binfair {

inline constexpr std::uint64_t kDefaultOracleBudget = 100'000'000;

/// Exact rational, used for fairness factors like 1/6.
struct Ratio {
    long long num = 0;
    long long den = 1;
};

struct OptResult {
    Allocation allocation;
    double nash_welfare = 0.0;
    long long social_welfare = 0;
    ValueProfile profile;
};

/// Exhaustive Nash-welfare maximization. Enumerates every assignment of each
/// good to an agent or to the unassigned pool ((n+1)^m states, guarded by the
/// budget); ties resolve to the lexicographically smallest assignment vector
/// with good 0 most significant.
OptResult brute_force_nsw_opt(const Instance& inst,
                              std::uint64_t budget = kDefaultOracleBudget);

/// Exhaustive social-welfare maximization under the same enumeration scheme.
OptResult brute_force_sw_opt(const Instance& inst,
                             std::uint64_t budget = kDefaultOracleBudget);

struct MaximinQuery {
    std::size_t agent = 0;
    std::size_t parts = 1;
    GoodSet goods;
};

/// Restricted maximin share: the best worst-part value the agent can force by
/// splitting the queried goods into `parts` (possibly empty) labeled parts.
/// Exhaustive over parts^|goods| labelings, guarded by the budget.
long long maximin_share(const Instance& inst, const MaximinQuery& query,
                        std::uint64_t budget = kDefaultOracleBudget);

/// Groupwise maximin threshold of one agent for an allocation: the maximum,
/// over every agent group containing the agent, of its restricted maximin
/// share on the group's combined bundles plus the unassigned goods.
long long gmms_threshold(const Instance& inst, const Allocation& alloc, std::size_t agent,
                         std::uint64_t budget = kDefaultOracleBudget);

/// true iff den·v_i(A_i) >= num·GMMS_i for every agent (exact integers).
bool is_alpha_gmms(const Instance& inst, const Allocation& alloc, Ratio alpha,
                   std::uint64_t budget = kDefaultOracleBudget);

}  // namespace binfair
