#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "binfair/instance.hpp"
#include "binfair/matching.hpp"
#include "binfair/welfare.hpp"

namespace binfair {

/// One improvement step of the solver: the acting agent's bundle is replaced
/// by a non-wasteful set of exactly twice its value.
struct IterationRecord {
    std::size_t agent = 0;
    long long old_size = 0;
    long long new_size = 0;
    double nsw_before = 0.0;
    double nsw_after = 0.0;
    /// Bundle sizes of all agents after the step; equals the value profile
    /// because every maintained bundle is non-wasteful.
    std::vector<long long> sizes_after;
};

struct SolveTrace {
    /// Bundles right after the matching step (size-1 bundles when perfect,
    /// the partial maximum matching otherwise).
    std::vector<std::vector<std::size_t>> initial_bundles;
    std::vector<IterationRecord> iterations;
    std::uint64_t total_value_queries = 0;
};

enum class SolveStatus { solved, zero_nsw };

struct SolveResult {
    SolveStatus status = SolveStatus::zero_nsw;
    /// Possibly partial allocation with the solver's guarantees.
    Allocation allocation;
    /// Same allocation with the unassigned pool handed to one agent.
    Allocation completed_allocation;
    SolveTrace trace;
};

/// Agents holding bundles strictly larger than 4x agent i's bundle, together
/// with the good pool G_i = (their bundles) ∪ (unassigned) ∪ A_i.
std::pair<std::vector<std::size_t>, GoodSet> compute_h_and_g(const Allocation& alloc,
                                                             std::size_t agent);

/// Upper bound on solver iterations for an n-agent, m-good instance, clamped
/// to at least 1 (the welfare growth per step caps the count at
/// (4m+1)·n·(log2(m/n)+1)+1).
long long max_solve_iterations(std::size_t num_agents, std::size_t num_goods);

/// Envy-bounded doubling solver for instances with binary XOS valuations.
///
/// Starts from a perfect matching of unit-valued goods, then repeatedly picks
/// the lowest-indexed agent i whose bundle value is at most half its value
/// for G_i and replaces that bundle with a non-wasteful subset of G_i worth
/// exactly twice as much, stripping the replacement from the large bundles it
/// intersects. On return every agent values its bundle at more than half of
/// its pool, every bundle is non-wasteful, and every value is at least 1.
///
/// When no perfect matching exists the optimal Nash welfare is 0; the result
/// carries the maximum-cardinality matching (which maximizes the number of
/// positive agents) and status zero_nsw.
SolveResult solve(const Instance& inst);

/// Copy of the instance with one extra good per unmatched agent appended;
/// every agent values any dummy-containing set at >= 1 (each dummy joins each
/// agent's family as a singleton). The padded instance always admits a
/// perfect matching. Throws when the instance already has one.
Instance pad_with_dummies(const Instance& inst);

}  // namespace binfair
