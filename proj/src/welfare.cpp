#include "binfair/welfare.hpp"

#include <cmath>

namespace binfair {

ValueProfile value_profile(const Instance& inst, const Allocation& alloc) {
    alloc.validate_for(inst);
    ValueProfile out;
    out.reserve(inst.num_agents());
    for (std::size_t i = 0; i < inst.num_agents(); ++i)
        out.push_back(inst.valuation(i).value(alloc.bundle(i)));
    return out;
}

double nash_welfare_of_profile(const ValueProfile& profile) {
    if (profile.empty()) return 0.0;
    double log_sum = 0.0;
    for (long long v : profile) {
        if (v <= 0) return 0.0;
        log_sum += std::log(static_cast<double>(v));
    }
    return std::exp(log_sum / static_cast<double>(profile.size()));
}

double nash_welfare(const Instance& inst, const Allocation& alloc) {
    return nash_welfare_of_profile(value_profile(inst, alloc));
}

long long social_welfare(const Instance& inst, const Allocation& alloc) {
    long long sum = 0;
    for (long long v : value_profile(inst, alloc)) sum += v;
    return sum;
}

bool is_envy_free(const Instance& inst, const Allocation& alloc) {
    alloc.validate_for(inst);
    for (std::size_t i = 0; i < inst.num_agents(); ++i) {
        const long long own = inst.valuation(i).value(alloc.bundle(i));
        for (std::size_t j = 0; j < inst.num_agents(); ++j)
            if (inst.valuation(i).value(alloc.bundle(j)) > own) return false;
    }
    return true;
}

bool is_non_wasteful(const Instance& inst, const Allocation& alloc) {
    alloc.validate_for(inst);
    for (std::size_t i = 0; i < inst.num_agents(); ++i)
        if (inst.valuation(i).value(alloc.bundle(i)) !=
            static_cast<long long>(alloc.bundle(i).count()))
            return false;
    return true;
}

std::optional<unsigned __int128> checked_mul(unsigned __int128 a, unsigned __int128 b) {
    if (a == 0 || b == 0) return static_cast<unsigned __int128>(0);
    unsigned __int128 r = a * b;
    if (r / a != b) return std::nullopt;
    return r;
}

std::optional<unsigned __int128> checked_product(const ValueProfile& profile) {
    unsigned __int128 prod = 1;
    for (long long v : profile) {
        if (v < 0) return std::nullopt;
        auto r = checked_mul(prod, static_cast<unsigned __int128>(v));
        if (!r) return std::nullopt;
        prod = *r;
    }
    return prod;
}

namespace {

double log_sum(const ValueProfile& p) {
    double s = 0.0;
    for (long long v : p) s += std::log(static_cast<double>(v));
    return s;
}

bool has_zero(const ValueProfile& p) {
    for (long long v : p)
        if (v <= 0) return true;
    return false;
}

}  // namespace

bool scaled_product_geq(const ValueProfile& a, unsigned __int128 mult_a, const ValueProfile& b,
                        unsigned __int128 mult_b) {
    auto pa = checked_product(a);
    auto pb = checked_product(b);
    if (pa && pb) {
        auto lhs = checked_mul(*pa, mult_a);
        auto rhs = checked_mul(*pb, mult_b);
        if (lhs && rhs) return *lhs >= *rhs;
    }
    // 128-bit overflow: fall back to logarithms. Zeros cannot overflow, so
    // both sides are positive here.
    if (has_zero(b) || mult_b == 0) return true;
    if (has_zero(a) || mult_a == 0) return false;
    const double la = log_sum(a) + std::log(static_cast<double>(mult_a));
    const double lb = log_sum(b) + std::log(static_cast<double>(mult_b));
    return la >= lb - 1e-9;
}

}  // namespace binfair
