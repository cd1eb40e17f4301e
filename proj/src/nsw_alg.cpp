#include "binfair/nsw_alg.hpp"

#include <cmath>
#include <string>

namespace binfair {

namespace {

GoodSet derive_unassigned(const std::vector<GoodSet>& bundles, std::size_t m) {
    GoodSet assigned(m);
    for (const auto& b : bundles) assigned |= b;
    return assigned.complement();
}

std::pair<std::vector<std::size_t>, GoodSet> h_and_g(const std::vector<GoodSet>& bundles,
                                                     const GoodSet& unassigned, std::size_t i) {
    const std::size_t base = bundles[i].count();
    std::vector<std::size_t> h;
    GoodSet pool = unassigned;
    pool |= bundles[i];
    for (std::size_t j = 0; j < bundles.size(); ++j) {
        if (bundles[j].count() > 4 * base) {
            h.push_back(j);
            pool |= bundles[j];
        }
    }
    return {std::move(h), std::move(pool)};
}

std::vector<std::vector<std::size_t>> bundle_lists(const Allocation& alloc) {
    std::vector<std::vector<std::size_t>> out;
    out.reserve(alloc.num_agents());
    for (const auto& b : alloc.bundles()) out.push_back(b.to_indices());
    return out;
}

std::uint64_t total_queries(const std::vector<CountingOracle>& oracles) {
    std::uint64_t sum = 0;
    for (const auto& o : oracles) sum += o.query_count();
    return sum;
}

void require_xos_class(const Instance& inst, const char* op) {
    for (const auto& v : inst.valuations())
        if (!v.is_binary_xos_class())
            throw class_error(std::string(op) + " requires binary XOS valuations "
                              "(xos_family or spectrum)");
}

// Post-update consistency checks. Evaluates valuations directly so the
// checks do not show up in the query accounting. A failure means a value
// oracle does not behave like a member of its declared class.
void check_iteration_invariants(const Instance& inst, const std::vector<GoodSet>& bundles,
                                const std::vector<long long>& sizes,
                                const std::vector<std::size_t>& h, std::size_t actor,
                                const std::vector<long long>& old_sizes) {
    GoodSet seen(inst.num_goods());
    for (std::size_t j = 0; j < bundles.size(); ++j) {
        if (seen.intersects(bundles[j]))
            throw invariant_error("solver bundles lost pairwise disjointness");
        seen |= bundles[j];
        if (sizes[j] < 1)
            throw invariant_error("agent " + std::to_string(j) + " dropped to an empty bundle");
        if (inst.valuation(j).value(bundles[j]) != sizes[j])
            throw invariant_error("bundle of agent " + std::to_string(j) +
                                  " is no longer non-wasteful; the value oracle is not "
                                  "binary XOS");
    }
    if (sizes[actor] != 2 * old_sizes[actor])
        throw invariant_error("acting agent's value did not double");
    for (std::size_t j : h)
        if (sizes[j] <= 2 * old_sizes[actor])
            throw invariant_error("stripped agent " + std::to_string(j) +
                                  " fell to at most twice the acting agent's old size");
}

}  // namespace

std::pair<std::vector<std::size_t>, GoodSet> compute_h_and_g(const Allocation& alloc,
                                                             std::size_t agent) {
    if (agent >= alloc.num_agents()) throw validation_error("agent index out of range");
    return h_and_g(alloc.bundles(), alloc.unassigned(), agent);
}

long long max_solve_iterations(std::size_t num_agents, std::size_t num_goods) {
    const double n = static_cast<double>(num_agents);
    const double m = static_cast<double>(num_goods);
    const double bound = (4.0 * m + 1.0) * n * (std::log2(m / n) + 1.0) + 1.0;
    if (bound < 1.0) return 1;
    return static_cast<long long>(std::floor(bound));
}

SolveResult solve(const Instance& inst) {
    require_xos_class(inst, "solve");
    const std::size_t n = inst.num_agents();
    const std::size_t m = inst.num_goods();

    std::vector<CountingOracle> oracles;
    oracles.reserve(n);
    for (const auto& v : inst.valuations()) oracles.emplace_back(v);

    MatchingResult match = initial_matching(inst, oracles);
    SolveTrace trace;
    trace.initial_bundles = bundle_lists(match.allocation);

    if (!match.perfect) {
        // Some agent cannot receive any valued good, so every allocation has
        // Nash welfare 0. Keep the maximum matching: it gives a positive
        // value to as many agents as possible.
        std::vector<GoodSet> completed = match.allocation.bundles();
        completed[0] |= match.allocation.unassigned();
        trace.total_value_queries = total_queries(oracles);
        return SolveResult{SolveStatus::zero_nsw, match.allocation,
                           Allocation(std::move(completed)), std::move(trace)};
    }

    std::vector<GoodSet> bundles = match.allocation.bundles();
    std::vector<long long> sizes(n, 1);
    const long long iteration_bound = max_solve_iterations(n, m);

    while (true) {
        const GoodSet unassigned = derive_unassigned(bundles, m);
        long long violator = -1;
        std::vector<std::size_t> h;
        GoodSet pool(m);
        for (std::size_t i = 0; i < n; ++i) {
            auto [hi, gi] = h_and_g(bundles, unassigned, i);
            if (2 * sizes[i] <= oracles[i].value(gi)) {
                violator = static_cast<long long>(i);
                h = std::move(hi);
                pool = std::move(gi);
                break;
            }
        }
        if (violator < 0) break;

        const auto i = static_cast<std::size_t>(violator);
        const long long target = 2 * sizes[i];
        const std::vector<long long> old_sizes = sizes;
        const double nsw_before = nash_welfare_of_profile(sizes);

        GoodSet replacement = shrink_to_size(oracles[i], extract_nonwasteful(oracles[i], pool),
                                             target);
        bundles[i] = replacement;
        for (std::size_t j : h) bundles[j] -= replacement;
        for (std::size_t j = 0; j < n; ++j)
            sizes[j] = static_cast<long long>(bundles[j].count());

        check_iteration_invariants(inst, bundles, sizes, h, i, old_sizes);
        // Each step multiplies the welfare product by at least (4m+2)/(4m+1).
        if (!scaled_product_geq(sizes, 4 * static_cast<unsigned __int128>(m) + 1, old_sizes,
                                4 * static_cast<unsigned __int128>(m) + 2))
            throw invariant_error("per-iteration Nash welfare growth fell below the bound");

        trace.iterations.push_back(IterationRecord{i, old_sizes[i], sizes[i], nsw_before,
                                                   nash_welfare_of_profile(sizes), sizes});
        if (static_cast<long long>(trace.iterations.size()) > iteration_bound)
            throw invariant_error("solver exceeded its iteration bound of " +
                                  std::to_string(iteration_bound));
    }

    Allocation partial{std::vector<GoodSet>(bundles)};
    std::size_t receiver = 0;
    for (std::size_t j = 1; j < n; ++j)
        if (sizes[j] > sizes[receiver]) receiver = j;
    bundles[receiver] |= derive_unassigned(bundles, m);

    trace.total_value_queries = total_queries(oracles);
    return SolveResult{SolveStatus::solved, std::move(partial), Allocation(std::move(bundles)),
                       std::move(trace)};
}

Instance pad_with_dummies(const Instance& inst) {
    require_xos_class(inst, "pad_with_dummies");
    MatchingResult match = initial_matching(inst);
    if (match.perfect)
        throw validation_error("pad_with_dummies called on an instance that already admits a "
                               "perfect matching");
    const std::size_t extra = inst.num_agents() - match.matched;
    const std::size_t m2 = inst.num_goods() + extra;

    std::vector<ValuationSpec> vals;
    vals.reserve(inst.num_agents());
    for (const auto& v : inst.valuations()) {
        const XosFamily& fam = v.kind() == ValuationSpec::Kind::spectrum
                                   ? expand_spectrum(inst.num_goods(), v.as_spectrum().delta)
                                   : v.as_xos_family();
        std::vector<GoodSet> sets;
        sets.reserve(fam.sets.size() + extra);
        for (const auto& f : fam.sets) sets.push_back(f.resized(m2));
        for (std::size_t d = inst.num_goods(); d < m2; ++d) sets.push_back(GoodSet::of(m2, {d}));
        vals.push_back(ValuationSpec::xos_family(m2, std::move(sets)));
    }
    return Instance(inst.num_agents(), m2, std::move(vals));
}

}  // namespace binfair
