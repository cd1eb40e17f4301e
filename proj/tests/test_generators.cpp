#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "binfair/generators.hpp"
#include "binfair/oracles.hpp"
#include "binfair/rng.hpp"
#include "binfair/welfare.hpp"

using namespace binfair;

TEST_CASE("canonical graphs") {
    CubicGraph g4 = k4();
    CHECK(g4.vertices == 4);
    CHECK(g4.edges.size() == 6);

    CubicGraph pet = petersen();
    CHECK(pet.vertices == 10);
    CHECK(pet.edges.size() == 15);
    CHECK(max_independent_set(pet).size() == 4);
    CHECK(max_independent_set(g4).size() == 1);

    CHECK_THROWS_AS(CubicGraph(3, {{0, 1}, {1, 2}, {2, 0}}), validation_error);  // 2-regular
    CHECK_THROWS_AS(CubicGraph(2, {{0, 0}, {0, 1}, {1, 1}}), validation_error);  // loops
}

TEST_CASE("edge-goods reduction instance") {
    Instance inst = gen_apx_reduction(k4(), 1);
    CHECK(inst.num_agents() == 1);
    CHECK(inst.num_goods() == 6);
    const auto& family = inst.valuation(0).as_xos_family().sets;
    REQUIRE(family.size() == 4);
    for (const auto& f : family) CHECK(f.count() == 3);
    // the shared valuation never exceeds 3
    CHECK(inst.valuation(0).value(GoodSet::full(6)) == 3);

    CHECK_THROWS_AS((void)gen_apx_reduction(k4(), 0), validation_error);
    CHECK_THROWS_AS((void)gen_apx_reduction(k4(), 5), validation_error);
}

TEST_CASE("independent-set witness achieves welfare three") {
    Instance inst = gen_apx_reduction(petersen(), 4);
    auto witness = apx_witness_allocation(petersen(), 4);
    REQUIRE(witness.has_value());
    witness->validate_for(inst);
    ValueProfile profile = value_profile(inst, *witness);
    CHECK(profile == ValueProfile{3, 3, 3, 3});
    CHECK(nash_welfare(inst, *witness) == doctest::Approx(3.0));
    CHECK(social_welfare(inst, *witness) == 12);

    // K4 has independence number 1, so no witness for two agents
    CHECK_FALSE(apx_witness_allocation(k4(), 2).has_value());
}

TEST_CASE("envy-gap family shapes and welfare gap") {
    for (std::size_t k = 1; k <= 10; ++k) {
        EnvyGapFamily fam = gen_envy_gap(k);
        CHECK(fam.instance.num_agents() == 4 * k);
        CHECK(fam.instance.num_goods() == 2 * k * (2 * k + 1));

        ValueProfile p = value_profile(fam.instance, fam.envy_free);
        ValueProfile n = value_profile(fam.instance, fam.high_nsw);
        for (std::size_t i = 0; i < 2 * k; ++i) CHECK(p[i] == (long long)(2 * k));
        for (std::size_t i = 2 * k; i < 4 * k; ++i) CHECK(p[i] == 1);
        for (long long v : n) CHECK(v == (long long)k);

        // exact profile identities pin the sqrt(k/2) gap; spot-check the float
        const double ratio = nash_welfare_of_profile(n) / nash_welfare_of_profile(p);
        CHECK(ratio == doctest::Approx(std::sqrt((double)k / 2.0)).epsilon(1e-12));
        CHECK(is_non_wasteful(fam.instance, fam.high_nsw));
    }
    CHECK_THROWS_AS((void)gen_envy_gap(0), validation_error);
}

TEST_CASE("envy-gap allocations are disjoint and valid at k=1") {
    EnvyGapFamily fam = gen_envy_gap(1);
    fam.envy_free.validate_for(fam.instance);
    fam.high_nsw.validate_for(fam.instance);
    CHECK(fam.envy_free.unassigned().empty());
    CHECK(fam.high_nsw.unassigned().count() == 2);  // the last block stays free
}

TEST_CASE("lower-bound pair construction") {
    LowerBoundPair pair = gen_lower_bound_pair(3, 2, 4, 7);
    CHECK(pair.identical.num_agents() == 3);
    CHECK(pair.identical.num_goods() == 9);
    CHECK(pair.planted.num_goods() == 9);

    // blocks partition the goods into equal thirds
    GoodSet all(9);
    std::size_t total = 0;
    for (const auto& t : pair.blocks) {
        CHECK(t.count() == 3);
        CHECK_FALSE(all.intersects(t));
        all |= t;
        total += t.count();
    }
    CHECK(total == 9);
    CHECK(all == GoodSet::full(9));

    // handing agent i its block gives everyone value n
    Allocation blocks_alloc{std::vector<GoodSet>(pair.blocks)};
    CHECK(value_profile(pair.planted, blocks_alloc) == ValueProfile{3, 3, 3});

    // identical seeds reproduce identical blocks
    LowerBoundPair again = gen_lower_bound_pair(3, 2, 4, 7);
    CHECK(again.blocks == pair.blocks);
    LowerBoundPair other = gen_lower_bound_pair(3, 2, 4, 8);
    CHECK(other.blocks != pair.blocks);

    CHECK_THROWS_AS((void)gen_lower_bound_pair(3, 4, 2, 7), validation_error);
}

TEST_CASE("identical-valuation optimum stays below the planted optimum") {
    LowerBoundPair pair = gen_lower_bound_pair(2, 1, 2, 5);
    OptResult opt = brute_force_nsw_opt(pair.identical);
    // frozen from the first oracle run: best profile product is 2 = (1, 2),
    // strictly below the planted instance's 2 * 2
    CHECK(*checked_product(opt.profile) == 2);
    CHECK(opt.nash_welfare < 2.0);

    Allocation blocks_alloc{std::vector<GoodSet>(pair.blocks)};
    CHECK(nash_welfare(pair.planted, blocks_alloc) == doctest::Approx(2.0));
}

TEST_CASE("lower-bound valuations pass the class checks") {
    LowerBoundPair pair = gen_lower_bound_pair(3, 2, 4, 11);
    CHECK(check_binary_marginals(pair.identical.valuation(0)));
    CHECK(check_subadditive(pair.identical.valuation(0)));
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(check_binary_marginals(pair.planted.valuation(i)));
        CHECK(check_subadditive(pair.planted.valuation(i)));
    }
}

TEST_CASE("probe never sees a mismatch on small sets") {
    ProbeReport report = distinguish_probe(3, 2, 4, 21, 600);
    CHECK(report.small.queries > 0);
    CHECK(report.small.mismatches == 0);
    CHECK(report.small.fraction() == 0.0);
    CHECK(report.small.queries + report.middle.queries + report.large.queries == 600);

    ProbeReport empty = distinguish_probe(3, 2, 4, 21, 0);
    CHECK(empty.small.queries == 0);
    CHECK(empty.middle.queries == 0);
    CHECK(empty.large.queries == 0);
}

TEST_CASE("random instances are reproducible and well-formed") {
    Instance a = gen_random_xos(3, 7, 2, 4, 123);
    Instance b = gen_random_xos(3, 7, 2, 4, 123);
    CHECK(a == b);
    Instance c = gen_random_xos(3, 7, 2, 4, 124);
    CHECK_FALSE(a == c);

    // a single-set family is additive on its member: v(S) = |S ∩ F|
    Instance single = gen_random_xos(2, 5, 1, 5, 9);
    for (std::size_t i = 0; i < 2; ++i) {
        const auto& sets = single.valuation(i).as_xos_family().sets;
        REQUIRE(sets.size() == 1);
        GoodSet s(5);
        for (std::uint64_t mask = 0; mask < 32; ++mask) {
            s.assign_mask(mask);
            CHECK(single.valuation(i).value(s) == (long long)s.intersection_count(sets[0]));
        }
    }
    // and with the full universe as the member it counts everything
    ValuationSpec everything = ValuationSpec::xos_family(5, {GoodSet::full(5)});
    GoodSet probe(5);
    for (std::uint64_t mask = 0; mask < 32; ++mask) {
        probe.assign_mask(mask);
        CHECK(everything.value(probe) == (long long)probe.count());
    }

    CHECK_THROWS_AS((void)gen_random_xos(2, 5, 1, 6, 9), validation_error);
}

TEST_CASE("generated families always satisfy the witness property") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Instance inst = gen_random_xos(1, 7, 3, 5, seed);
        CHECK(check_xos_p2(inst.valuation(0)));
    }
}

TEST_CASE("asymptotic parameter helper") {
    auto [p, q] = pq_from_delta(2, 1.0 / 32.0);
    CHECK(p == 1);
    CHECK(q == 2);
    CHECK_THROWS_AS((void)pq_from_delta(2, 0.5), validation_error);
}

TEST_CASE("window instance generator") {
    Instance inst = gen_spectrum_instance(2, 10, 3);
    CHECK(inst.num_agents() == 2);
    CHECK(inst.valuation(0).value(GoodSet::of(10, {0, 3, 4, 6})) == 3);
}
