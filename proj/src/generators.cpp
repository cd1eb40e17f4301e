#include "binfair/generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "binfair/rng.hpp"

namespace binfair {

CubicGraph::CubicGraph(std::size_t vertices_,
                       std::vector<std::pair<std::size_t, std::size_t>> edges_)
    : vertices(vertices_), edges(std::move(edges_)) {
    std::vector<std::size_t> degree(vertices, 0);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (auto [u, v] : edges) {
        if (u >= vertices || v >= vertices)
            throw validation_error("graph edge endpoint out of range");
        if (u == v) throw validation_error("graph has a self-loop");
        auto key = std::minmax(u, v);
        if (!seen.insert({key.first, key.second}).second)
            throw validation_error("graph has parallel edges");
        ++degree[u];
        ++degree[v];
    }
    for (std::size_t v = 0; v < vertices; ++v)
        if (degree[v] != 3)
            throw validation_error("vertex " + std::to_string(v) + " has degree " +
                                   std::to_string(degree[v]) + "; graph is not 3-regular");
}

CubicGraph k4() {
    return CubicGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

CubicGraph petersen() {
    return CubicGraph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},   // outer cycle
                           {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},   // spokes
                           {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}}); // inner pentagram
}

namespace {

std::vector<GoodSet> incident_edge_sets(const CubicGraph& graph) {
    std::vector<GoodSet> delta(graph.vertices, GoodSet(graph.edges.size()));
    for (std::size_t e = 0; e < graph.edges.size(); ++e) {
        delta[graph.edges[e].first].set(e);
        delta[graph.edges[e].second].set(e);
    }
    return delta;
}

}  // namespace

Instance gen_apx_reduction(const CubicGraph& graph, std::size_t tau) {
    if (tau < 1 || tau > graph.vertices)
        throw validation_error("apx reduction needs 1 <= tau <= vertex count");
    const std::size_t m = graph.edges.size();
    auto family = incident_edge_sets(graph);
    ValuationSpec shared = ValuationSpec::xos_family(m, std::move(family));
    return Instance(tau, m, std::vector<ValuationSpec>(tau, shared));
}

std::vector<std::size_t> max_independent_set(const CubicGraph& graph) {
    if (graph.vertices > 26)
        throw budget_error("exhaustive independent-set search limited to 26 vertices",
                           std::ldexp(1.0, static_cast<int>(graph.vertices)));
    std::vector<std::uint64_t> neighbor_mask(graph.vertices, 0);
    for (auto [u, v] : graph.edges) {
        neighbor_mask[u] |= std::uint64_t{1} << v;
        neighbor_mask[v] |= std::uint64_t{1} << u;
    }
    std::uint64_t best = 0;
    int best_size = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << graph.vertices); ++mask) {
        if (std::popcount(mask) <= best_size) continue;
        bool independent = true;
        for (std::uint64_t rest = mask; rest != 0 && independent; rest &= rest - 1) {
            const auto v = static_cast<std::size_t>(std::countr_zero(rest));
            if (neighbor_mask[v] & mask) independent = false;
        }
        if (independent) {
            best = mask;
            best_size = std::popcount(mask);
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < graph.vertices; ++v)
        if (best & (std::uint64_t{1} << v)) out.push_back(v);
    return out;
}

std::optional<Allocation> apx_witness_allocation(const CubicGraph& graph, std::size_t tau) {
    auto independent = max_independent_set(graph);
    if (independent.size() < tau) return std::nullopt;
    auto delta = incident_edge_sets(graph);
    std::vector<GoodSet> bundles;
    bundles.reserve(tau);
    for (std::size_t j = 0; j < tau; ++j) bundles.push_back(delta[independent[j]]);
    return Allocation(std::move(bundles));
}

EnvyGapFamily gen_envy_gap(std::size_t k) {
    if (k < 1) throw validation_error("envy-gap family needs k >= 1");
    const std::size_t n = 4 * k;
    const std::size_t block = 2 * k;
    const std::size_t num_blocks = 2 * k + 1;
    const std::size_t m = block * num_blocks;

    // Goods laid out block-major: block x covers indices [x*2k, (x+1)*2k).
    std::vector<GoodSet> blocks;
    blocks.reserve(num_blocks);
    for (std::size_t x = 0; x < num_blocks; ++x) {
        GoodSet b(m);
        for (std::size_t j = 0; j < block; ++j) b.set(x * block + j);
        blocks.push_back(std::move(b));
    }

    std::vector<ValuationSpec> vals;
    vals.reserve(n);
    ValuationSpec everything = ValuationSpec::xos_family(m, {GoodSet::full(m)});
    ValuationSpec best_block = ValuationSpec::xos_family(m, blocks);
    for (std::size_t i = 0; i < block; ++i) vals.push_back(everything);
    for (std::size_t i = 0; i < block; ++i) vals.push_back(best_block);
    Instance inst(n, m, std::move(vals));

    // Envy-free split: agent i < 2k takes the i-th good of the first 2k
    // blocks; the rest take singletons from the last block.
    std::vector<GoodSet> envy_free(n, GoodSet(m));
    for (std::size_t i = 0; i < block; ++i)
        for (std::size_t x = 0; x < block; ++x) envy_free[i].set(x * block + i);
    for (std::size_t j = 0; j < block; ++j)
        envy_free[block + j].set(block * block + j);

    // High-welfare split: half a block for everyone (value k each); the last
    // block stays unassigned.
    std::vector<GoodSet> high(n, GoodSet(m));
    for (std::size_t i = 0; i < block; ++i)
        for (std::size_t j = 0; j < k; ++j) high[i].set(i * block + j);
    for (std::size_t j = 0; j < block; ++j)
        for (std::size_t l = k; l < block; ++l) high[block + j].set(j * block + l);

    return EnvyGapFamily{std::move(inst), Allocation(std::move(envy_free)),
                         Allocation(std::move(high))};
}

LowerBoundPair gen_lower_bound_pair(std::size_t n, long long p, long long q,
                                    std::uint64_t seed) {
    if (n < 1) throw validation_error("lower-bound pair needs n >= 1");
    if (p < 1 || p >= q) throw validation_error("lower-bound pair requires 1 <= p < q");
    const std::size_t m = n * n;

    Instance identical(n, m,
                       std::vector<ValuationSpec>(n, ValuationSpec::subadditive_pq(m, p, q)));

    std::mt19937_64 rng(seed);
    std::vector<GoodSet> blocks = random_equal_partition(rng, m, n);
    std::vector<ValuationSpec> planted_vals;
    planted_vals.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        planted_vals.push_back(ValuationSpec::planted_subadditive(m, p, q, blocks[i]));
    Instance planted(n, m, std::move(planted_vals));

    return LowerBoundPair{std::move(identical), std::move(planted), std::move(blocks)};
}

std::pair<long long, long long> pq_from_delta(std::size_t n, double delta) {
    if (delta <= 0.0 || delta >= 1.0 / 16.0)
        throw validation_error("delta must lie strictly between 0 and 1/16");
    const double nd = static_cast<double>(n);
    const auto p = static_cast<long long>(std::floor((1.0 + delta) * std::pow(nd, 4.0 * delta)));
    const auto q = static_cast<long long>(std::floor(std::pow(nd, 1.0 + 2.0 * delta)));
    if (p < 1 || p >= q)
        throw validation_error("n is too small for this delta: derived p >= q");
    return {p, q};
}

ProbeReport distinguish_probe(std::size_t n, long long p, long long q, std::uint64_t seed,
                              std::uint64_t num_queries) {
    LowerBoundPair pair = gen_lower_bound_pair(n, p, q, seed);
    const std::size_t m = n * n;
    // Separate stream so probing does not perturb the planted blocks.
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);

    ProbeReport report;
    for (std::uint64_t t = 0; t < num_queries; ++t) {
        const std::size_t card = 1 + static_cast<std::size_t>(t % m);
        const std::size_t agent = static_cast<std::size_t>((t / m) % n);
        GoodSet s = random_subset(rng, m, card);
        const bool mismatch = pair.planted.valuation(agent).value(s) !=
                              pair.identical.valuation(agent).value(s);
        ProbeBand& band = static_cast<long long>(card) <= p   ? report.small
                          : static_cast<long long>(card) <= q ? report.middle
                                                              : report.large;
        ++band.queries;
        if (mismatch) ++band.mismatches;
    }
    return report;
}

Instance gen_random_xos(std::size_t n, std::size_t m, std::size_t family_size,
                        std::size_t max_set_size, std::uint64_t seed) {
    if (n < 1 || m < 1 || family_size < 1 || max_set_size < 1)
        throw validation_error("random instance parameters must be positive");
    if (max_set_size > m)
        throw validation_error("max_set_size cannot exceed the number of goods");
    std::mt19937_64 rng(seed);
    std::vector<ValuationSpec> vals;
    vals.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<GoodSet> sets;
        sets.reserve(family_size);
        for (std::size_t t = 0; t < family_size; ++t) {
            const std::size_t size = 1 + static_cast<std::size_t>(bounded_rand(rng, max_set_size));
            sets.push_back(random_subset(rng, m, size));
        }
        vals.push_back(ValuationSpec::xos_family(m, std::move(sets)));
    }
    return Instance(n, m, std::move(vals));
}

Instance gen_spectrum_instance(std::size_t n, std::size_t m, std::size_t delta) {
    if (n < 1 || m < 1) throw validation_error("spectrum instance parameters must be positive");
    return Instance(n, m, std::vector<ValuationSpec>(n, ValuationSpec::spectrum(m, delta)));
}

}  // namespace binfair
