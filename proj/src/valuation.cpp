#include "binfair/valuation.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <string>

namespace binfair {

namespace {

void check_universe(const ValuationSpec& spec, const GoodSet& s) {
    if (s.universe() != spec.num_goods())
        throw validation_error("subset universe " + std::to_string(s.universe()) +
                               " does not match valuation over " +
                               std::to_string(spec.num_goods()) + " goods");
}

long long pq_value(long long p, long long q, long long size) {
    if (size <= p) return size;
    if (size <= q) return p;
    return (p * size + q - 1) / q;  // ceil(p*size/q)
}

}  // namespace

ValuationSpec ValuationSpec::xos_family(std::size_t num_goods, std::vector<GoodSet> sets) {
    if (sets.empty())
        throw validation_error("xos_family must be non-empty; use the family {∅} for the "
                               "zero valuation");
    for (const auto& f : sets)
        if (f.universe() != num_goods)
            throw validation_error("xos_family member set universe mismatch");
    return ValuationSpec(num_goods, XosFamily{std::move(sets)});
}

ValuationSpec ValuationSpec::spectrum(std::size_t num_goods, std::size_t delta) {
    return ValuationSpec(num_goods, Spectrum{delta});
}

ValuationSpec ValuationSpec::subadditive_pq(std::size_t num_goods, long long p, long long q) {
    if (p < 1 || p >= q)
        throw validation_error("subadditive_pq requires 1 <= p < q");
    return ValuationSpec(num_goods, SubadditivePQ{p, q});
}

ValuationSpec ValuationSpec::planted_subadditive(std::size_t num_goods, long long p, long long q,
                                                 GoodSet planted) {
    if (p < 1 || p >= q)
        throw validation_error("planted_subadditive requires 1 <= p < q");
    if (planted.universe() != num_goods)
        throw validation_error("planted set universe mismatch");
    return ValuationSpec(num_goods, PlantedSubadditive{p, q, std::move(planted)});
}

ValuationSpec::Kind ValuationSpec::kind() const noexcept {
    switch (kind_.index()) {
        case 0: return Kind::xos_family;
        case 1: return Kind::spectrum;
        case 2: return Kind::subadditive_pq;
        default: return Kind::planted_subadditive;
    }
}

bool ValuationSpec::is_binary_xos_class() const noexcept {
    return kind_.index() <= 1;
}

long long ValuationSpec::value(const GoodSet& s) const {
    check_universe(*this, s);
    const std::size_t m = num_goods_;
    switch (kind_.index()) {
        case 0: {
            const auto& fam = std::get<XosFamily>(kind_);
            std::size_t best = 0;
            for (const auto& f : fam.sets) best = std::max(best, s.intersection_count(f));
            return static_cast<long long>(best);
        }
        case 1: {
            const auto& sp = std::get<Spectrum>(kind_);
            const std::size_t width = sp.delta + 1;
            if (width >= m) return static_cast<long long>(s.count());
            std::size_t best = 0;
            for (std::size_t t = 0; t + width <= m; ++t)
                best = std::max(best, s.count_range(t, t + width));
            return static_cast<long long>(best);
        }
        case 2: {
            const auto& f = std::get<SubadditivePQ>(kind_);
            return pq_value(f.p, f.q, static_cast<long long>(s.count()));
        }
        default: {
            const auto& f = std::get<PlantedSubadditive>(kind_);
            long long base = pq_value(f.p, f.q, static_cast<long long>(s.count()));
            long long planted = static_cast<long long>(s.intersection_count(f.planted));
            return std::max(base, planted);
        }
    }
}

namespace {

template <typename Value>
GoodSet extract_nonwasteful_impl(const ValuationSpec& spec, const GoodSet& s, Value&& value) {
    if (!spec.is_binary_xos_class())
        throw class_error("extract_nonwasteful is only defined for the binary XOS classes; "
                          "the subadditive families may have no non-wasteful witness");
    const long long target = value(s);  // one query
    GoodSet x = s;
    auto goods = s.to_indices();
    // Drop from the highest index down so that ties keep the lowest-indexed
    // goods; a good kept here stays critical in every later subset, so one
    // pass reaches a non-wasteful set.
    for (auto it = goods.rbegin(); it != goods.rend(); ++it) {
        if (static_cast<long long>(x.count()) == target) break;
        x.reset(*it);
        if (value(x) != target) x.set(*it);
    }
    assert(s.contains(x));
    assert(spec.value(x) == target &&
           static_cast<long long>(x.count()) == target);
    return x;
}

template <typename Value>
GoodSet shrink_to_size_impl(const ValuationSpec& spec, const GoodSet& x, long long target,
                            Value&& value) {
    const long long size = static_cast<long long>(x.count());
    if (value(x) != size)
        throw validation_error("shrink_to_size requires a non-wasteful input set");
    if (target < 0 || target > size)
        throw validation_error("shrink_to_size target out of range");
    GoodSet out = x;
    auto goods = x.to_indices();
    for (auto it = goods.rbegin(); it != goods.rend() && static_cast<long long>(out.count()) > target;
         ++it)
        out.reset(*it);
    assert(spec.value(out) == target);
    (void)spec;
    return out;
}

}  // namespace

GoodSet extract_nonwasteful(const CountingOracle& oracle, const GoodSet& s) {
    return extract_nonwasteful_impl(oracle.spec(), s,
                                    [&](const GoodSet& t) { return oracle.value(t); });
}

GoodSet extract_nonwasteful(const ValuationSpec& spec, const GoodSet& s) {
    return extract_nonwasteful_impl(spec, s, [&](const GoodSet& t) { return spec.value(t); });
}

GoodSet shrink_to_size(const CountingOracle& oracle, const GoodSet& x, long long target) {
    return shrink_to_size_impl(oracle.spec(), x, target,
                               [&](const GoodSet& t) { return oracle.value(t); });
}

GoodSet shrink_to_size(const ValuationSpec& spec, const GoodSet& x, long long target) {
    return shrink_to_size_impl(spec, x, target,
                               [&](const GoodSet& t) { return spec.value(t); });
}

std::vector<long long> subset_value_table(const ValuationSpec& spec, std::size_t m) {
    if (m != spec.num_goods())
        throw validation_error("subset_value_table universe mismatch");
    if (m > 26)
        throw budget_error("subset_value_table limited to m <= 26", std::ldexp(1.0, (int)m));
    std::vector<long long> table(std::size_t{1} << m);
    GoodSet s(m);
    for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
        s.assign_mask(mask);
        table[mask] = spec.value(s);
    }
    return table;
}

bool check_binary_marginals_table(std::size_t m, const std::vector<long long>& table) {
    const std::uint64_t n = std::uint64_t{1} << m;
    for (std::uint64_t mask = 0; mask < n; ++mask) {
        for (std::size_t g = 0; g < m; ++g) {
            if (mask & (std::uint64_t{1} << g)) continue;
            long long d = table[mask | (std::uint64_t{1} << g)] - table[mask];
            if (d != 0 && d != 1) return false;
        }
    }
    return true;
}

bool check_subadditive_table(std::size_t m, const std::vector<long long>& table) {
    const std::uint64_t n = std::uint64_t{1} << m;
    for (std::uint64_t a = 0; a < n; ++a)
        for (std::uint64_t b = a; b < n; ++b)
            if (table[a | b] > table[a] + table[b]) return false;
    return true;
}

bool check_xos_p2_table(std::size_t m, const std::vector<long long>& table) {
    if (!check_binary_marginals_table(m, table)) return false;
    const std::uint64_t n = std::uint64_t{1} << m;
    for (std::uint64_t mask = 0; mask < n; ++mask) {
        const long long v = table[mask];
        bool found = false;
        // Iterate the subsets of mask, including mask itself and the empty set.
        std::uint64_t sub = mask;
        while (true) {
            if (table[sub] == v && std::popcount(sub) == v) {
                found = true;
                break;
            }
            if (sub == 0) break;
            sub = (sub - 1) & mask;
        }
        if (!found) return false;
    }
    return true;
}

namespace {

void check_limit(const char* op, std::size_t m, std::size_t limit) {
    if (m > limit)
        throw budget_error(std::string(op) + " limited to m <= " + std::to_string(limit) +
                               " (got m = " + std::to_string(m) + ")",
                           std::ldexp(1.0, (int)m));
}

}  // namespace

bool check_binary_marginals(const ValuationSpec& spec, std::size_t limit) {
    check_limit("check_binary_marginals", spec.num_goods(), limit);
    return check_binary_marginals_table(spec.num_goods(),
                                        subset_value_table(spec, spec.num_goods()));
}

bool check_subadditive(const ValuationSpec& spec, std::size_t limit) {
    check_limit("check_subadditive", spec.num_goods(), limit);
    return check_subadditive_table(spec.num_goods(),
                                   subset_value_table(spec, spec.num_goods()));
}

bool check_xos_p2(const ValuationSpec& spec, std::size_t limit) {
    check_limit("check_xos_p2", spec.num_goods(), limit);
    return check_xos_p2_table(spec.num_goods(), subset_value_table(spec, spec.num_goods()));
}

XosFamily expand_spectrum(std::size_t num_goods, std::size_t delta) {
    XosFamily fam;
    const std::size_t width = delta + 1;
    if (width >= num_goods) {
        fam.sets.push_back(GoodSet::full(num_goods));
        return fam;
    }
    for (std::size_t t = 0; t + width <= num_goods; ++t) {
        GoodSet w(num_goods);
        for (std::size_t g = t; g < t + width; ++g) w.set(g);
        fam.sets.push_back(std::move(w));
    }
    return fam;
}

}  // namespace binfair
