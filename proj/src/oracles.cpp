#include "binfair/oracles.hpp"

#include <cmath>
#include <string>

namespace binfair {

namespace {

void check_enumeration_budget(const char* op, double states, std::uint64_t budget) {
    if (states > static_cast<double>(budget))
        throw budget_error(std::string(op) + " needs about " + std::to_string(states) +
                               " states, over the budget of " + std::to_string(budget),
                           states);
}

enum class Objective { nash, social };

struct BestAssignment {
    bool initialized = false;
    unsigned __int128 product = 0;
    long long sum = 0;
    std::vector<std::size_t> assignment;
};

// Walks assignment vectors in lexicographic order (good 0 most significant,
// digits 0..n-1 = agents, digit n = unassigned) and keeps the first vector
// attaining the best objective, i.e. the lexicographically smallest optimum.
void enumerate(const Instance& inst, Objective obj, std::size_t good,
               std::vector<GoodSet>& bundles, std::vector<std::size_t>& assignment,
               BestAssignment& best) {
    const std::size_t n = inst.num_agents();
    if (good == inst.num_goods()) {
        unsigned __int128 product = 1;
        long long sum = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const long long v = inst.valuation(i).value(bundles[i]);
            product *= static_cast<unsigned __int128>(v);
            sum += v;
        }
        const bool better = !best.initialized ||
                            (obj == Objective::nash ? product > best.product : sum > best.sum);
        if (better) {
            best.initialized = true;
            best.product = product;
            best.sum = sum;
            best.assignment = assignment;
        }
        return;
    }
    for (std::size_t digit = 0; digit <= n; ++digit) {
        assignment[good] = digit;
        if (digit < n) bundles[digit].set(good);
        enumerate(inst, obj, good + 1, bundles, assignment, best);
        if (digit < n) bundles[digit].reset(good);
    }
}

OptResult run_opt(const Instance& inst, Objective obj, std::uint64_t budget, const char* op) {
    const std::size_t n = inst.num_agents();
    const std::size_t m = inst.num_goods();
    check_enumeration_budget(op, std::pow(static_cast<double>(n) + 1.0,
                                          static_cast<double>(m)),
                             budget);

    std::vector<GoodSet> bundles(n, GoodSet(m));
    std::vector<std::size_t> assignment(m, 0);
    BestAssignment best;
    enumerate(inst, obj, 0, bundles, assignment, best);

    std::vector<GoodSet> out(n, GoodSet(m));
    for (std::size_t g = 0; g < m; ++g)
        if (best.assignment[g] < n) out[best.assignment[g]].set(g);
    Allocation alloc{std::move(out)};
    ValueProfile profile = value_profile(inst, alloc);
    long long sw = 0;
    for (long long v : profile) sw += v;
    return OptResult{std::move(alloc), nash_welfare_of_profile(profile), sw, std::move(profile)};
}

long long maximin_min_over_parts(const Instance& inst, std::size_t agent,
                                 std::vector<GoodSet>& parts) {
    long long worst = -1;
    for (const auto& part : parts) {
        const long long v = inst.valuation(agent).value(part);
        if (worst < 0 || v < worst) worst = v;
    }
    return worst;
}

void enumerate_partitions(const Instance& inst, std::size_t agent,
                          const std::vector<std::size_t>& goods, std::size_t index,
                          std::vector<GoodSet>& parts, long long& best) {
    if (index == goods.size()) {
        best = std::max(best, maximin_min_over_parts(inst, agent, parts));
        return;
    }
    for (auto& part : parts) {
        part.set(goods[index]);
        enumerate_partitions(inst, agent, goods, index + 1, parts, best);
        part.reset(goods[index]);
    }
}

}  // namespace

OptResult brute_force_nsw_opt(const Instance& inst, std::uint64_t budget) {
    return run_opt(inst, Objective::nash, budget, "brute_force_nsw_opt");
}

OptResult brute_force_sw_opt(const Instance& inst, std::uint64_t budget) {
    return run_opt(inst, Objective::social, budget, "brute_force_sw_opt");
}

long long maximin_share(const Instance& inst, const MaximinQuery& query, std::uint64_t budget) {
    if (query.agent >= inst.num_agents()) throw validation_error("maximin agent out of range");
    if (query.parts < 1) throw validation_error("maximin needs at least one part");
    if (query.goods.universe() != inst.num_goods())
        throw validation_error("maximin goods universe mismatch");
    const auto goods = query.goods.to_indices();
    check_enumeration_budget("maximin_share",
                             std::pow(static_cast<double>(query.parts),
                                      static_cast<double>(goods.size())),
                             budget);
    std::vector<GoodSet> parts(query.parts, GoodSet(inst.num_goods()));
    long long best = -1;
    enumerate_partitions(inst, query.agent, goods, 0, parts, best);
    return best;
}

long long gmms_threshold(const Instance& inst, const Allocation& alloc, std::size_t agent,
                         std::uint64_t budget) {
    alloc.validate_for(inst);
    if (agent >= inst.num_agents()) throw validation_error("gmms agent out of range");
    const std::size_t n = inst.num_agents();
    const GoodSet unassigned = alloc.unassigned();

    long long best = 0;
    // Every group containing the agent, encoded by a mask over the others.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
        GoodSet pool = unassigned;
        pool |= alloc.bundle(agent);
        std::size_t group_size = 1;
        std::size_t bit = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == agent) continue;
            if (mask & (std::uint64_t{1} << bit)) {
                pool |= alloc.bundle(j);
                ++group_size;
            }
            ++bit;
        }
        best = std::max(best,
                        maximin_share(inst, MaximinQuery{agent, group_size, pool}, budget));
    }
    return best;
}

bool is_alpha_gmms(const Instance& inst, const Allocation& alloc, Ratio alpha,
                   std::uint64_t budget) {
    alloc.validate_for(inst);
    if (alpha.den <= 0) throw validation_error("alpha denominator must be positive");
    for (std::size_t i = 0; i < inst.num_agents(); ++i) {
        const long long own = inst.valuation(i).value(alloc.bundle(i));
        const long long threshold = gmms_threshold(inst, alloc, i, budget);
        if (own * alpha.den < alpha.num * threshold) return false;
    }
    return true;
}

}  // namespace binfair
