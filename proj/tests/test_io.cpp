#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binfair/audit.hpp"
#include "binfair/generators.hpp"
#include "binfair/json_io.hpp"
#include "binfair/nsw_alg.hpp"
#include "binfair/oracles.hpp"

using namespace binfair;
using nlohmann::json;

TEST_CASE("valuation wire formats") {
    json j = json::parse(R"({"type":"xos_family","sets":[[0,1],[2]]})");
    ValuationSpec spec = valuation_from_json(j, 3);
    CHECK(spec.kind() == ValuationSpec::Kind::xos_family);
    CHECK(valuation_to_json(spec) == j);

    json s = json::parse(R"({"type":"spectrum","delta":3})");
    CHECK(valuation_to_json(valuation_from_json(s, 10)) == s);

    json pq = json::parse(R"({"type":"subadditive_pq","p":2,"q":5})");
    CHECK(valuation_to_json(valuation_from_json(pq, 9)) == pq);

    json planted = json::parse(R"({"type":"planted_subadditive","p":2,"q":5,"t":[0,1,2]})");
    CHECK(valuation_to_json(valuation_from_json(planted, 9)) == planted);

    CHECK_THROWS_AS((void)valuation_from_json(json::parse(R"({"type":"nope"})"), 3), parse_error);
    CHECK_THROWS_AS((void)valuation_from_json(json::parse(R"({"sets":[[0]]})"), 3), parse_error);
    // out-of-range member index
    CHECK_THROWS_AS((void)valuation_from_json(j, 2), parse_error);
    // p >= q is malformed input at parse time
    CHECK_THROWS_AS(
        (void)valuation_from_json(json::parse(R"({"type":"subadditive_pq","p":5,"q":2})"), 9),
        parse_error);
}

TEST_CASE("instances round-trip through their wire format") {
    std::vector<Instance> fixtures;
    fixtures.push_back(gen_random_xos(3, 7, 2, 4, 42));
    fixtures.push_back(gen_envy_gap(2).instance);
    fixtures.push_back(gen_apx_reduction(petersen(), 4));
    fixtures.push_back(gen_lower_bound_pair(2, 1, 2, 3).planted);
    fixtures.push_back(gen_spectrum_instance(2, 6, 2));
    for (const auto& inst : fixtures) {
        Instance back = instance_from_json(parse_json_text(dump_json(instance_to_json(inst))));
        CHECK(back == inst);
    }
}

TEST_CASE("allocation wire format") {
    Allocation alloc({GoodSet::of(4, {0, 2}), GoodSet::of(4, {1})});
    json j = allocation_to_json(alloc);
    CHECK(j.at("bundles") == json::parse("[[0,2],[1]]"));
    CHECK(j.at("unassigned_policy") == "max_bundle");
    CHECK(allocation_from_json(j, 2, 4) == alloc);

    // overlapping bundles are invalid, not malformed
    CHECK_THROWS_AS((void)allocation_from_json(json::parse(R"({"bundles":[[0],[0]]})"), 2, 4),
                    validation_error);
    CHECK_THROWS_AS((void)allocation_from_json(json::parse(R"({"bundles":[[9],[0]]})"), 2, 4),
                    validation_error);
    CHECK_THROWS_AS((void)allocation_from_json(json::parse(R"({"bundles":[[0]]})"), 2, 4),
                    validation_error);
    CHECK_THROWS_AS((void)allocation_from_json(json::parse(R"({"x":1})"), 2, 4), parse_error);
}

TEST_CASE("graph wire format") {
    CubicGraph pet = petersen();
    CubicGraph back = graph_from_json(parse_json_text(dump_json(graph_to_json(pet))));
    CHECK(back.vertices == pet.vertices);
    CHECK(back.edges == pet.edges);
    CHECK_THROWS_AS((void)graph_from_json(json::parse(R"({"vertices":2,"edges":[[0,1]]})")),
                    validation_error);
}

TEST_CASE("traces round-trip") {
    EnvyGapFamily fam = gen_envy_gap(1);
    SolveResult result = solve(fam.instance);
    SolveTrace back = trace_from_json(parse_json_text(dump_json(trace_to_json(result.trace))));
    CHECK(back.total_value_queries == result.trace.total_value_queries);
    CHECK(back.initial_bundles == result.trace.initial_bundles);
    REQUIRE(back.iterations.size() == result.trace.iterations.size());
    for (std::size_t t = 0; t < back.iterations.size(); ++t) {
        CHECK(back.iterations[t].agent == result.trace.iterations[t].agent);
        CHECK(back.iterations[t].sizes_after == result.trace.iterations[t].sizes_after);
    }
    ValueProfile profile = value_profile(fam.instance, result.allocation);
    CHECK(trace_growth_ok(back, fam.instance.num_agents(), fam.instance.num_goods(), profile));
}

TEST_CASE("audit of a solver run passes every computed check") {
    EnvyGapFamily fam = gen_envy_gap(1);
    SolveResult result = solve(fam.instance);
    AuditReport report = audit(fam.instance, result.allocation, result.trace);
    CHECK(report.all_ok());
    CHECK(report.non_wasteful_ok);
    CHECK(report.nsw_opt.has_value());
    CHECK(report.gmms_alpha_ok.has_value());
    CHECK(report.iterations.has_value());
    REQUIRE(report.growth_ok.has_value());
    CHECK(*report.growth_ok);

    json j = audit_report_to_json(report);
    CHECK(j.at("all_ok") == true);
    CHECK(j.contains("nsw_ratio"));
}

TEST_CASE("audit with budget zero computes only local checks") {
    EnvyGapFamily fam = gen_envy_gap(1);
    SolveResult result = solve(fam.instance);
    AuditReport report = audit(fam.instance, result.allocation, std::nullopt, 0);
    CHECK_FALSE(report.nsw_opt.has_value());
    CHECK_FALSE(report.gmms_alpha_ok.has_value());
    CHECK_FALSE(report.iterations.has_value());
    CHECK(report.all_ok());

    json j = audit_report_to_json(report);
    CHECK_FALSE(j.contains("nsw_opt"));
    CHECK_FALSE(j.contains("growth_ok"));
}

TEST_CASE("audit flags a wasteful or dominated allocation") {
    EnvyGapFamily fam = gen_envy_gap(1);
    // everything to agent 0: wasteful for its best-block peers and far from
    // the termination guarantee for the others
    Allocation greedy({GoodSet::full(6), GoodSet(6), GoodSet(6), GoodSet(6)});
    AuditReport report = audit(fam.instance, greedy, std::nullopt, 0);
    CHECK_FALSE(report.all_ok());
}

TEST_CASE("canonical dumps are stable") {
    Instance inst = gen_random_xos(2, 5, 2, 3, 7);
    CHECK(dump_json(instance_to_json(inst)) == dump_json(instance_to_json(inst)));
    CHECK(dump_json(instance_to_json(inst)).back() == '\n');
}
