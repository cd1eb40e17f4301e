#pragma once

#include <optional>

#include "binfair/instance.hpp"

namespace binfair {

/// v_i(A_i) for every agent.
ValueProfile value_profile(const Instance& inst, const Allocation& alloc);

/// Geometric mean of the profile; exactly 0 when any entry is 0, otherwise
/// computed in log space to avoid overflow.
double nash_welfare_of_profile(const ValueProfile& profile);
double nash_welfare(const Instance& inst, const Allocation& alloc);

/// Sum of the profile.
long long social_welfare(const Instance& inst, const Allocation& alloc);

/// true iff v_i(A_i) >= v_i(A_j) for all agent pairs i, j.
bool is_envy_free(const Instance& inst, const Allocation& alloc);

/// true iff v_i(A_i) = |A_i| for every agent.
bool is_non_wasteful(const Instance& inst, const Allocation& alloc);

/// Product of the profile entries, or nullopt if it overflows 128 bits.
std::optional<unsigned __int128> checked_product(const ValueProfile& profile);

std::optional<unsigned __int128> checked_mul(unsigned __int128 a, unsigned __int128 b);

/// Exact test of mult_a * prod(a) >= mult_b * prod(b). Uses 128-bit integer
/// arithmetic when it fits and otherwise long-double logarithms with 1e-9
/// slack in favour of >=.
bool scaled_product_geq(const ValueProfile& a, unsigned __int128 mult_a, const ValueProfile& b,
                        unsigned __int128 mult_b);

}  // namespace binfair
