#pragma once

#include <vector>

#include "binfair/instance.hpp"

namespace binfair {

struct MatchingResult {
    /// true when every agent is matched to a good it values at 1.
    bool perfect = false;
    std::size_t matched = 0;
    /// One matched good per matched agent; empty bundles for the rest.
    Allocation allocation;
};

/// Maximum bipartite matching between agents and the goods they value at 1
/// (augmenting paths, agents in index order, goods scanned ascending). Issues
/// one singleton value query per (agent, good) pair through the oracles.
MatchingResult initial_matching(const Instance& inst, std::vector<CountingOracle>& oracles);

/// Convenience overload with throwaway query counting.
MatchingResult initial_matching(const Instance& inst);

}  // namespace binfair
