#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "binfair/instance.hpp"

namespace binfair {

/// Simple 3-regular graph: every vertex has degree exactly 3, no self-loops,
/// no parallel edges. Validated on construction.
struct CubicGraph {
    std::size_t vertices = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    CubicGraph(std::size_t vertices, std::vector<std::pair<std::size_t, std::size_t>> edges);
};

CubicGraph k4();
CubicGraph petersen();

/// Hardness-gap instance built from a 3-regular graph: tau agents, one good
/// per edge (in input order), and the shared valuation
/// v(S) = max over vertices of |S ∩ incident-edges(v)|. Every bundle is worth
/// at most 3; an independent set of size >= tau yields Nash welfare exactly 3.
Instance gen_apx_reduction(const CubicGraph& graph, std::size_t tau);

/// Lexicographically smallest maximum independent set (exhaustive search;
/// kept to desk scale).
std::vector<std::size_t> max_independent_set(const CubicGraph& graph);

/// Allocation giving agent j the edges incident to the j-th vertex of a
/// size->=tau independent set, or nullopt when none exists.
std::optional<Allocation> apx_witness_allocation(const CubicGraph& graph, std::size_t tau);

struct EnvyGapFamily {
    Instance instance;
    /// Envy-free allocation with Nash welfare sqrt(2k).
    Allocation envy_free;
    /// Non-wasteful allocation with Nash welfare k (every agent gets k).
    Allocation high_nsw;
};

/// Family with 4k agents and 2k(2k+1) goods split into 2k+1 blocks of 2k:
/// the first 2k agents count every good, the rest count only their best
/// block. The two returned allocations realize the sqrt(k/2) welfare gap
/// between envy-freeness and the Nash optimum.
EnvyGapFamily gen_envy_gap(std::size_t k);

struct LowerBoundPair {
    /// All n agents share the same piecewise-cardinality valuation.
    Instance identical;
    /// Agent i additionally counts a hidden planted block T_i.
    Instance planted;
    /// The planted blocks: a seeded random partition of the n^2 goods into n
    /// blocks of size n. Allocating T_i to agent i gives everyone value n.
    std::vector<GoodSet> blocks;
};

/// Two n-agent, n^2-good instances that value oracles can barely tell apart
/// yet whose optimal Nash welfares differ by a near-linear factor.
LowerBoundPair gen_lower_bound_pair(std::size_t n, long long p, long long q,
                                    std::uint64_t seed);

/// Convenience mapping from the asymptotic parameterization: p as
/// floor((1+delta) n^{4 delta}) and q as floor(n^{1+2 delta}); requires the
/// result to satisfy p < q.
std::pair<long long, long long> pq_from_delta(std::size_t n, double delta);

struct ProbeBand {
    std::uint64_t queries = 0;
    std::uint64_t mismatches = 0;
    double fraction() const {
        return queries == 0 ? 0.0 : static_cast<double>(mismatches) / static_cast<double>(queries);
    }
};

/// Empirical mismatch rates between the identical and planted valuations on
/// random subsets, bucketed by cardinality band: |S| <= p, p < |S| <= q, and
/// |S| > q. Sets of size at most p can never disagree; the other bands are
/// report-only.
struct ProbeReport {
    ProbeBand small;   // |S| <= p
    ProbeBand middle;  // p < |S| <= q
    ProbeBand large;   // |S| > q
};

ProbeReport distinguish_probe(std::size_t n, long long p, long long q, std::uint64_t seed,
                              std::uint64_t num_queries);

/// Seeded random instance: each agent gets a family of `family_size` sets,
/// each a uniform subset of size 1..max_set_size.
Instance gen_random_xos(std::size_t n, std::size_t m, std::size_t family_size,
                        std::size_t max_set_size, std::uint64_t seed);

/// All n agents share a window valuation of width delta+1 over m goods.
Instance gen_spectrum_instance(std::size_t n, std::size_t m, std::size_t delta);

}  // namespace binfair
