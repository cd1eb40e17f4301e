#include "binfair/matching.hpp"

namespace binfair {

namespace {

bool augment(std::size_t agent, const std::vector<std::vector<std::size_t>>& adj,
             std::vector<long long>& good_owner, std::vector<char>& visited) {
    for (std::size_t g : adj[agent]) {
        if (visited[g]) continue;
        visited[g] = 1;
        if (good_owner[g] < 0 ||
            augment(static_cast<std::size_t>(good_owner[g]), adj, good_owner, visited)) {
            good_owner[g] = static_cast<long long>(agent);
            return true;
        }
    }
    return false;
}

}  // namespace

MatchingResult initial_matching(const Instance& inst, std::vector<CountingOracle>& oracles) {
    const std::size_t n = inst.num_agents();
    const std::size_t m = inst.num_goods();
    for (const auto& v : inst.valuations())
        if (!v.is_binary_xos_class())
            throw class_error("initial matching requires binary XOS valuations");

    std::vector<std::vector<std::size_t>> adj(n);
    GoodSet probe(m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t g = 0; g < m; ++g) {
            probe.clear();
            probe.set(g);
            if (oracles[i].value(probe) == 1) adj[i].push_back(g);
        }
    }

    std::vector<long long> good_owner(m, -1);
    std::size_t matched = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<char> visited(m, 0);
        if (augment(i, adj, good_owner, visited)) ++matched;
    }

    std::vector<GoodSet> bundles(n, GoodSet(m));
    for (std::size_t g = 0; g < m; ++g)
        if (good_owner[g] >= 0) bundles[static_cast<std::size_t>(good_owner[g])].set(g);

    return MatchingResult{matched == n, matched, Allocation(std::move(bundles))};
}

MatchingResult initial_matching(const Instance& inst) {
    std::vector<CountingOracle> oracles;
    oracles.reserve(inst.num_agents());
    for (const auto& v : inst.valuations()) oracles.emplace_back(v);
    return initial_matching(inst, oracles);
}

}  // namespace binfair
