#include "binfair/audit.hpp"

#include "binfair/welfare.hpp"

namespace binfair {

bool AuditReport::all_ok() const {
    for (bool ok : termination_ok)
        if (!ok) return false;
    if (!non_wasteful_ok) return false;
    if (gmms_alpha_ok && !*gmms_alpha_ok) return false;
    if (lemma_counting_ok && !*lemma_counting_ok) return false;
    if (growth_ok && !*growth_ok) return false;
    return true;
}

std::size_t suboptimal_agent_count(const ValueProfile& assigned, const ValueProfile& reference,
                                   long long alpha) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < assigned.size(); ++i)
        if (18 * alpha * assigned[i] < reference[i]) ++count;
    return count;
}

bool counting_bound_holds(const ValueProfile& assigned, const ValueProfile& reference) {
    const auto n = static_cast<long long>(assigned.size());
    for (long long alpha : {1LL, 2LL, 4LL, 8LL})
        if (static_cast<long long>(suboptimal_agent_count(assigned, reference, alpha)) * alpha >
            n)
            return false;
    return true;
}

bool trace_growth_ok(const SolveTrace& trace, std::size_t num_agents, std::size_t num_goods,
                     const ValueProfile& final_profile) {
    if (static_cast<long long>(trace.iterations.size()) >
        max_solve_iterations(num_agents, num_goods))
        return false;
    if (trace.iterations.empty()) return true;

    ValueProfile previous(num_agents, 1);  // the matching gives everyone value 1
    const auto m = static_cast<unsigned __int128>(num_goods);
    for (const auto& it : trace.iterations) {
        if (it.agent >= num_agents) return false;
        if (it.sizes_after.size() != num_agents) return false;
        if (it.new_size != 2 * it.old_size) return false;
        if (previous[it.agent] != it.old_size) return false;
        if (it.sizes_after[it.agent] != it.new_size) return false;
        if (!scaled_product_geq(it.sizes_after, 4 * m + 1, previous, 4 * m + 2)) return false;
        previous = it.sizes_after;
    }
    return previous == final_profile;
}

AuditReport audit(const Instance& inst, const Allocation& alloc,
                  const std::optional<SolveTrace>& trace, std::uint64_t oracle_budget) {
    alloc.validate_for(inst);
    AuditReport report;

    const ValueProfile profile = value_profile(inst, alloc);
    report.nsw = nash_welfare_of_profile(profile);
    report.sw = 0;
    for (long long v : profile) report.sw += v;

    report.termination_ok.reserve(inst.num_agents());
    for (std::size_t i = 0; i < inst.num_agents(); ++i) {
        auto [h, pool] = compute_h_and_g(alloc, i);
        report.termination_ok.push_back(2 * profile[i] > inst.valuation(i).value(pool));
    }
    report.non_wasteful_ok = is_non_wasteful(inst, alloc);

    if (oracle_budget > 0) {
        try {
            OptResult nsw_opt = brute_force_nsw_opt(inst, oracle_budget);
            report.nsw_opt = nsw_opt.nash_welfare;
            if (nsw_opt.nash_welfare > 0.0) {
                report.nsw_ratio = report.nsw / nsw_opt.nash_welfare;
                report.lemma_counting_ok = counting_bound_holds(profile, nsw_opt.profile);
            }
        } catch (const budget_error&) {
        }
        try {
            OptResult sw_opt = brute_force_sw_opt(inst, oracle_budget);
            report.sw_opt = sw_opt.social_welfare;
            if (sw_opt.social_welfare > 0)
                report.sw_ratio = static_cast<double>(report.sw) /
                                  static_cast<double>(sw_opt.social_welfare);
        } catch (const budget_error&) {
        }
        try {
            report.gmms_alpha_ok = is_alpha_gmms(inst, alloc, Ratio{1, 6}, oracle_budget);
        } catch (const budget_error&) {
        }
    }

    if (trace) {
        report.iterations = static_cast<long long>(trace->iterations.size());
        report.query_count = trace->total_value_queries;
        report.growth_ok =
            trace_growth_ok(*trace, inst.num_agents(), inst.num_goods(), profile);
    }
    return report;
}

nlohmann::json audit_report_to_json(const AuditReport& report) {
    nlohmann::json j{{"termination_ok", report.termination_ok},
                     {"non_wasteful_ok", report.non_wasteful_ok},
                     {"nsw", report.nsw},
                     {"sw", report.sw},
                     {"all_ok", report.all_ok()}};
    if (report.nsw_opt) j["nsw_opt"] = *report.nsw_opt;
    if (report.sw_opt) j["sw_opt"] = *report.sw_opt;
    if (report.nsw_ratio) j["nsw_ratio"] = *report.nsw_ratio;
    if (report.sw_ratio) j["sw_ratio"] = *report.sw_ratio;
    if (report.gmms_alpha_ok) j["gmms_alpha_ok"] = *report.gmms_alpha_ok;
    if (report.lemma_counting_ok) j["lemma_counting_ok"] = *report.lemma_counting_ok;
    if (report.iterations) j["iterations"] = *report.iterations;
    if (report.growth_ok) j["growth_ok"] = *report.growth_ok;
    if (report.query_count) j["query_count"] = *report.query_count;
    return j;
}

}  // namespace binfair
