#pragma once

#include <cstddef>
#include <vector>

#include "binfair/errors.hpp"
#include "binfair/good_set.hpp"
#include "binfair/valuation.hpp"

namespace binfair {

/// A fair division instance: n agents, m goods (indices 0..m-1, shifted from
/// the conventional 1-based {1..m} notation), one valuation per agent.
/// Immutable after construction.
class Instance {
public:
    Instance(std::size_t num_agents, std::size_t num_goods,
             std::vector<ValuationSpec> valuations)
        : num_agents_(num_agents), num_goods_(num_goods), valuations_(std::move(valuations)) {
        if (num_agents_ < 1 || num_goods_ < 1)
            throw validation_error("instance needs at least one agent and one good");
        if (valuations_.size() != num_agents_)
            throw validation_error("instance needs exactly one valuation per agent");
        for (const auto& v : valuations_)
            if (v.num_goods() != num_goods_)
                throw validation_error("valuation universe does not match instance goods");
    }

    std::size_t num_agents() const noexcept { return num_agents_; }
    std::size_t num_goods() const noexcept { return num_goods_; }
    const std::vector<ValuationSpec>& valuations() const noexcept { return valuations_; }
    const ValuationSpec& valuation(std::size_t agent) const { return valuations_.at(agent); }

    bool operator==(const Instance&) const = default;

private:
    std::size_t num_agents_;
    std::size_t num_goods_;
    std::vector<ValuationSpec> valuations_;
};

/// A possibly partial allocation: n pairwise-disjoint bundles over {0..m-1}.
/// The unassigned pool is always derived, never stored.
class Allocation {
public:
    explicit Allocation(std::vector<GoodSet> bundles) : bundles_(std::move(bundles)) {
        if (bundles_.empty()) throw validation_error("allocation needs at least one bundle");
        const std::size_t m = bundles_.front().universe();
        GoodSet seen(m);
        for (const auto& b : bundles_) {
            if (b.universe() != m)
                throw validation_error("allocation bundles disagree on the good universe");
            if (seen.intersects(b))
                throw validation_error("allocation bundles are not pairwise disjoint");
            seen |= b;
        }
    }

    static Allocation empty(std::size_t num_agents, std::size_t num_goods) {
        return Allocation(std::vector<GoodSet>(num_agents, GoodSet(num_goods)));
    }

    std::size_t num_agents() const noexcept { return bundles_.size(); }
    std::size_t num_goods() const noexcept { return bundles_.front().universe(); }
    const GoodSet& bundle(std::size_t agent) const { return bundles_.at(agent); }
    const std::vector<GoodSet>& bundles() const noexcept { return bundles_; }

    /// Goods not assigned to any agent (recomputed on each call).
    GoodSet unassigned() const {
        GoodSet assigned(num_goods());
        for (const auto& b : bundles_) assigned |= b;
        return assigned.complement();
    }

    /// Throws validation_error unless the allocation matches the instance's
    /// agent count and good universe.
    void validate_for(const Instance& inst) const {
        if (num_agents() != inst.num_agents() || num_goods() != inst.num_goods())
            throw validation_error("allocation dimensions do not match the instance");
    }

    bool operator==(const Allocation&) const = default;

private:
    std::vector<GoodSet> bundles_;
};

/// Per-agent bundle values v_i(A_i); entries are integers because binary
/// marginals force integer values.
using ValueProfile = std::vector<long long>;

}  // namespace binfair
