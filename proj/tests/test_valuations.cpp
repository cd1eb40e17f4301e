#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>

#include "binfair/generators.hpp"
#include "binfair/rng.hpp"
#include "binfair/valuation.hpp"

using namespace binfair;

namespace {

// Independent witness search used to cross-check extract_nonwasteful: is
// there any subset of S of exactly the given size whose value equals size?
bool has_nonwasteful_subset_of_size(const ValuationSpec& spec, const GoodSet& s,
                                    long long size) {
    const auto goods = s.to_indices();
    GoodSet candidate(spec.num_goods());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << goods.size()); ++mask) {
        if (std::popcount(mask) != size) continue;
        candidate.clear();
        for (std::size_t t = 0; t < goods.size(); ++t)
            if (mask & (std::uint64_t{1} << t)) candidate.set(goods[t]);
        if (spec.value(candidate) == size) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("window valuation matches the worked bundles") {
    ValuationSpec spec = ValuationSpec::spectrum(10, 3);
    CHECK(spec.value(GoodSet::of(10, {0, 3, 9})) == 2);
    CHECK(spec.value(GoodSet::of(10, {0, 3, 4, 6})) == 3);
    CHECK(spec.value(GoodSet(10)) == 0);
    // width covers everything: value degenerates to cardinality
    ValuationSpec wide = ValuationSpec::spectrum(4, 9);
    CHECK(wide.value(GoodSet::full(4)) == 4);
}

TEST_CASE("piecewise cardinality valuation") {
    ValuationSpec spec = ValuationSpec::subadditive_pq(9, 2, 5);
    CHECK(spec.value(GoodSet::of(9, {1})) == 1);
    CHECK(spec.value(GoodSet::of(9, {0, 2, 4, 6})) == 2);
    CHECK(spec.value(GoodSet::of(9, {0, 1, 2, 3, 4, 5, 6})) == 3);  // ceil(2*7/5)
    CHECK_THROWS_AS(ValuationSpec::subadditive_pq(9, 3, 3), validation_error);
    CHECK_THROWS_AS(ValuationSpec::subadditive_pq(9, 0, 3), validation_error);
}

TEST_CASE("planted valuation takes the max with the hidden block") {
    ValuationSpec spec = ValuationSpec::planted_subadditive(9, 2, 5, GoodSet::of(9, {0, 1, 2}));
    CHECK(spec.value(GoodSet::of(9, {0, 1, 2})) == 3);   // block beats f = 2
    CHECK(spec.value(GoodSet::of(9, {4, 5, 6})) == 2);   // f alone
    CHECK(spec.value(GoodSet::of(9, {0})) == 1);
}

TEST_CASE("family valuation edge cases") {
    ValuationSpec zero = ValuationSpec::xos_family(4, {GoodSet(4)});
    CHECK(zero.value(GoodSet::full(4)) == 0);
    CHECK_THROWS_AS(ValuationSpec::xos_family(4, {}), validation_error);

    ValuationSpec spec = ValuationSpec::xos_family(4, {GoodSet::of(4, {0, 1}), GoodSet::of(4, {2})});
    CHECK_THROWS_AS((void)spec.value(GoodSet::full(5)), validation_error);
}

TEST_CASE("query counting is exact under serial use") {
    CountingOracle oracle(ValuationSpec::spectrum(6, 1));
    CHECK(oracle.query_count() == 0);
    GoodSet s = GoodSet::of(6, {0, 2});
    (void)oracle.value(s);
    (void)oracle.value(s);
    (void)oracle.value(s);
    CHECK(oracle.query_count() == 3);
    oracle.reset();
    CHECK(oracle.query_count() == 0);
}

TEST_CASE("non-wasteful extraction") {
    ValuationSpec spec =
        ValuationSpec::xos_family(3, {GoodSet::of(3, {0, 1}), GoodSet::of(3, {2})});
    GoodSet s = GoodSet::full(3);
    GoodSet x = extract_nonwasteful(spec, s);
    CHECK(x == GoodSet::of(3, {0, 1}));
    // no size-3 witness exists, so dropping exactly one good is forced
    CHECK_FALSE(has_nonwasteful_subset_of_size(spec, s, 3));
    CHECK(has_nonwasteful_subset_of_size(spec, s, spec.value(s)));

    // already non-wasteful input comes back unchanged
    ValuationSpec additive = ValuationSpec::xos_family(3, {GoodSet::full(3)});
    CHECK(extract_nonwasteful(additive, s) == s);

    // tie between the two singleton witnesses resolves to the lower index
    ValuationSpec tie = ValuationSpec::xos_family(2, {GoodSet::of(2, {0}), GoodSet::of(2, {1})});
    CHECK(extract_nonwasteful(tie, GoodSet::full(2)) == GoodSet::of(2, {0}));

    CHECK_THROWS_AS(
        (void)extract_nonwasteful(ValuationSpec::subadditive_pq(4, 1, 3), GoodSet::full(4)),
        class_error);
}

TEST_CASE("extraction needs at most one query per good plus the opener") {
    CountingOracle oracle(
        ValuationSpec::xos_family(5, {GoodSet::of(5, {0, 1}), GoodSet::of(5, {3})}));
    GoodSet s = GoodSet::full(5);
    (void)extract_nonwasteful(oracle, s);
    CHECK(oracle.query_count() <= 6);
}

TEST_CASE("extraction returns a valid witness on random families") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t m = 2 + bounded_rand(rng, 7);
        Instance inst = gen_random_xos(1, m, 1 + bounded_rand(rng, 4),
                                       1 + bounded_rand(rng, m), rng());
        const ValuationSpec& spec = inst.valuation(0);
        GoodSet s = random_subset(rng, m, bounded_rand(rng, m + 1));
        GoodSet x = extract_nonwasteful(spec, s);
        CHECK(s.contains(x));
        CHECK(spec.value(x) == (long long)x.count());
        CHECK(spec.value(x) == spec.value(s));
    }
}

TEST_CASE("shrinking a non-wasteful set drops highest indices first") {
    ValuationSpec additive = ValuationSpec::xos_family(4, {GoodSet::full(4)});
    GoodSet x = GoodSet::of(4, {0, 1, 2});
    CHECK(shrink_to_size(additive, x, 2) == GoodSet::of(4, {0, 1}));
    CHECK(shrink_to_size(additive, x, 3) == x);
    CHECK(shrink_to_size(additive, x, 0) == GoodSet(4));
    CHECK_THROWS_AS((void)shrink_to_size(additive, x, 4), validation_error);

    ValuationSpec narrow = ValuationSpec::xos_family(4, {GoodSet::of(4, {0})});
    CHECK_THROWS_AS((void)shrink_to_size(narrow, x, 1), validation_error);
}

TEST_CASE("binary marginals hold for the piecewise families") {
    CHECK(check_binary_marginals(ValuationSpec::subadditive_pq(9, 2, 5)));
    CHECK(check_binary_marginals(
        ValuationSpec::planted_subadditive(9, 2, 5, GoodSet::of(9, {0, 1, 2}))));
    CHECK_THROWS_AS((void)check_binary_marginals(ValuationSpec::spectrum(15, 2)), budget_error);

    // doubling valuation: marginals of 2 everywhere
    std::vector<long long> doubled(1 << 5);
    for (std::uint64_t mask = 0; mask < doubled.size(); ++mask)
        doubled[mask] = 2 * std::popcount(mask);
    CHECK_FALSE(check_binary_marginals_table(5, doubled));
}

TEST_CASE("subadditivity checks") {
    CHECK(check_subadditive(ValuationSpec::subadditive_pq(8, 2, 5)));
    CHECK(check_subadditive(
        ValuationSpec::xos_family(8, {GoodSet::of(8, {0, 1, 2}), GoodSet::of(8, {5, 6})})));
    CHECK(check_subadditive(ValuationSpec::spectrum(8, 2)));

    // pair bonus: v({a,b}) = 1 but singletons are worthless
    std::vector<long long> pair_bonus(1 << 4, 0);
    for (std::uint64_t mask = 0; mask < pair_bonus.size(); ++mask)
        if (std::popcount(mask) == 2) pair_bonus[mask] = 1;
    CHECK_FALSE(check_subadditive_table(4, pair_bonus));
}

TEST_CASE("witness property separates the families from the piecewise class") {
    CHECK(check_xos_p2(ValuationSpec::xos_family(6, {GoodSet::of(6, {0, 3}), GoodSet::of(6, {1})})));
    CHECK(check_xos_p2(ValuationSpec::spectrum(6, 2)));
    // |S| = 4 gives ceil(4/3) = 2, but every 2-subset is worth only 1
    CHECK_FALSE(check_xos_p2(ValuationSpec::subadditive_pq(5, 1, 3)));
}

TEST_CASE("window family expansion agrees with the window valuation everywhere") {
    for (std::size_t delta : {0u, 1u, 2u, 4u, 9u}) {
        const std::size_t m = 8;
        ValuationSpec windows = ValuationSpec::spectrum(m, delta);
        ValuationSpec expanded = ValuationSpec::xos_family(m, expand_spectrum(m, delta).sets);
        CHECK(subset_value_table(windows, m) == subset_value_table(expanded, m));
    }
}

TEST_CASE("all families are normalized and monotone") {
    std::vector<ValuationSpec> specs;
    specs.push_back(ValuationSpec::xos_family(7, {GoodSet::of(7, {0, 2, 4}), GoodSet::of(7, {1})}));
    specs.push_back(ValuationSpec::spectrum(7, 2));
    specs.push_back(ValuationSpec::subadditive_pq(7, 2, 4));
    specs.push_back(ValuationSpec::planted_subadditive(7, 1, 4, GoodSet::of(7, {2, 3})));
    for (const auto& spec : specs) {
        auto table = subset_value_table(spec, 7);
        CHECK(table[0] == 0);
        bool monotone = true;
        for (std::uint64_t t = 0; t < table.size() && monotone; ++t) {
            for (std::uint64_t sub = t; sub != 0; sub = (sub - 1) & t)
                if (table[sub] > table[t]) {
                    monotone = false;
                    break;
                }
            if (table[0] > table[t]) monotone = false;
        }
        CHECK(monotone);
    }
}

TEST_CASE("family values are capped by set size and largest member") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t m = 3 + bounded_rand(rng, 6);
        Instance inst = gen_random_xos(1, m, 1 + bounded_rand(rng, 3),
                                       1 + bounded_rand(rng, m), rng());
        const ValuationSpec& spec = inst.valuation(0);
        std::size_t largest = 0;
        for (const auto& f : spec.as_xos_family().sets) largest = std::max(largest, f.count());
        GoodSet s = random_subset(rng, m, bounded_rand(rng, m + 1));
        CHECK(spec.value(s) <= (long long)std::min(s.count(), largest));
    }
}

TEST_CASE("piecewise families stay binary subadditive under random blocks") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t m = 5 + bounded_rand(rng, 3);  // 5..7 keeps this fast
        const long long q = 2 + (long long)bounded_rand(rng, 4);
        const long long p = 1 + (long long)bounded_rand(rng, (std::uint64_t)q - 1);
        GoodSet t = random_subset(rng, m, bounded_rand(rng, m + 1));
        ValuationSpec planted = ValuationSpec::planted_subadditive(m, p, q, t);
        CHECK(check_binary_marginals(planted));
        CHECK(check_subadditive(planted));
    }
}
