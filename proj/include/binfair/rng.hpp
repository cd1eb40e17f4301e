#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "binfair/good_set.hpp"

namespace binfair {

/// Uniform draw from {0, ..., n-1} via rejection sampling on the raw engine
/// output. std::uniform_int_distribution is implementation-defined, so all
/// seeded generation goes through this helper to keep outputs reproducible
/// across standard libraries.
inline std::uint64_t bounded_rand(std::mt19937_64& rng, std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

/// Uniform random subset of {0..m-1} of the given cardinality (partial
/// Fisher-Yates over the identity permutation).
inline GoodSet random_subset(std::mt19937_64& rng, std::size_t m, std::size_t size) {
    std::vector<std::size_t> pool(m);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    GoodSet out(m);
    for (std::size_t k = 0; k < size && k < m; ++k) {
        std::size_t j = k + static_cast<std::size_t>(bounded_rand(rng, m - k));
        std::swap(pool[k], pool[j]);
        out.set(pool[k]);
    }
    return out;
}

/// Random partition of {0..m-1} into `parts` blocks of size m/parts each
/// (m must be divisible by parts).
inline std::vector<GoodSet> random_equal_partition(std::mt19937_64& rng, std::size_t m,
                                                   std::size_t parts) {
    std::vector<std::size_t> pool(m);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    for (std::size_t k = 0; k + 1 < m; ++k) {
        std::size_t j = k + static_cast<std::size_t>(bounded_rand(rng, m - k));
        std::swap(pool[k], pool[j]);
    }
    const std::size_t block = m / parts;
    std::vector<GoodSet> out;
    out.reserve(parts);
    for (std::size_t i = 0; i < parts; ++i) {
        GoodSet t(m);
        for (std::size_t k = 0; k < block; ++k) t.set(pool[i * block + k]);
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace binfair
