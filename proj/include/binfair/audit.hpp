#pragma once

#include <optional>

#include <json.hpp>

#include "binfair/instance.hpp"
#include "binfair/nsw_alg.hpp"
#include "binfair/oracles.hpp"

namespace binfair {

/// Certified checks for an (instance, allocation) pair. Boolean fields are
/// computed with exact integer arithmetic; the float fields are convenience
/// values. Oracle-backed fields are present only when the enumeration budget
/// allowed computing them, and trace-backed fields only when a solve trace
/// was supplied.
struct AuditReport {
    std::vector<bool> termination_ok;  // per agent: 2 v_i(A_i) > v_i(G_i)
    bool non_wasteful_ok = false;
    double nsw = 0.0;
    long long sw = 0;

    std::optional<double> nsw_opt;
    std::optional<long long> sw_opt;
    std::optional<double> nsw_ratio;
    std::optional<double> sw_ratio;
    std::optional<bool> gmms_alpha_ok;  // at alpha = 1/6
    std::optional<bool> lemma_counting_ok;  // 18α-suboptimal agents <= n/α for α in {1,2,4,8}

    std::optional<long long> iterations;
    std::optional<bool> growth_ok;
    std::optional<std::uint64_t> query_count;

    /// Conjunction of every boolean check that was computed.
    bool all_ok() const;
};

/// Count of agents whose assigned value falls below a 1/(18*alpha) share of
/// their value in the reference allocation; the solver guarantees at most
/// n/alpha such agents against a Nash-optimal reference.
std::size_t suboptimal_agent_count(const ValueProfile& assigned, const ValueProfile& reference,
                                   long long alpha);

/// true iff |{i : 18α v_i(A_i) < v_i(N_i)}| <= n/α for every α in {1,2,4,8}.
bool counting_bound_holds(const ValueProfile& assigned, const ValueProfile& reference);

/// Replays a solve trace: every step must double the acting agent's size,
/// multiply the welfare product by at least (4m+2)/(4m+1) (exact), stay
/// within the iteration bound, and end at the audited allocation's profile.
bool trace_growth_ok(const SolveTrace& trace, std::size_t num_agents, std::size_t num_goods,
                     const ValueProfile& final_profile);

AuditReport audit(const Instance& inst, const Allocation& alloc,
                  const std::optional<SolveTrace>& trace = std::nullopt,
                  std::uint64_t oracle_budget = kDefaultOracleBudget);

nlohmann::json audit_report_to_json(const AuditReport& report);

}  // namespace binfair
