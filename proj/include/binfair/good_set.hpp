#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "binfair/errors.hpp"

namespace binfair {

/// Set of good indices over a fixed universe {0, ..., m-1}, packed into
/// 64-bit words. Binary operations require both operands to share the same
/// universe and throw validation_error otherwise.
class GoodSet {
public:
    GoodSet() = default;

    explicit GoodSet(std::size_t universe)
        : universe_(universe), words_(word_count(universe), 0) {}

    static GoodSet full(std::size_t universe) {
        GoodSet s(universe);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    /// Set holding the given indices. Throws if any index is out of range.
    static GoodSet of(std::size_t universe, std::initializer_list<std::size_t> goods) {
        GoodSet s(universe);
        for (std::size_t g : goods) s.set(g);
        return s;
    }

    template <typename Container>
    static GoodSet from_indices(std::size_t universe, const Container& goods) {
        GoodSet s(universe);
        for (auto g : goods) s.set(static_cast<std::size_t>(g));
        return s;
    }

    /// Low 64-bit mask constructor; universe must be at most 64.
    static GoodSet from_mask(std::size_t universe, std::uint64_t mask) {
        if (universe > 64)
            throw validation_error("GoodSet::from_mask requires universe <= 64");
        GoodSet s(universe);
        s.assign_mask(mask);
        return s;
    }

    std::size_t universe() const noexcept { return universe_; }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool empty() const noexcept {
        for (std::uint64_t w : words_)
            if (w != 0) return false;
        return true;
    }

    bool test(std::size_t g) const {
        check_index(g);
        return (words_[g >> 6] >> (g & 63)) & 1u;
    }

    void set(std::size_t g) {
        check_index(g);
        words_[g >> 6] |= std::uint64_t{1} << (g & 63);
    }

    void reset(std::size_t g) {
        check_index(g);
        words_[g >> 6] &= ~(std::uint64_t{1} << (g & 63));
    }

    void clear() noexcept {
        for (auto& w : words_) w = 0;
    }

    /// Replace contents with the low 64-bit mask; universe must be <= 64.
    void assign_mask(std::uint64_t mask) {
        if (universe_ > 64)
            throw validation_error("GoodSet::assign_mask requires universe <= 64");
        if (universe_ < 64 && universe_ > 0) mask &= (std::uint64_t{1} << universe_) - 1;
        if (universe_ == 0) mask = 0;
        if (!words_.empty()) words_[0] = mask;
    }

    std::uint64_t low_word() const noexcept { return words_.empty() ? 0 : words_[0]; }

    /// true iff other is a subset of this set.
    bool contains(const GoodSet& other) const {
        check_universe(other);
        for (std::size_t k = 0; k < words_.size(); ++k)
            if ((other.words_[k] & ~words_[k]) != 0) return false;
        return true;
    }

    bool intersects(const GoodSet& other) const {
        check_universe(other);
        for (std::size_t k = 0; k < words_.size(); ++k)
            if ((words_[k] & other.words_[k]) != 0) return true;
        return false;
    }

    std::size_t intersection_count(const GoodSet& other) const {
        check_universe(other);
        std::size_t c = 0;
        for (std::size_t k = 0; k < words_.size(); ++k)
            c += static_cast<std::size_t>(std::popcount(words_[k] & other.words_[k]));
        return c;
    }

    /// Number of elements with index in the half-open range [first, last).
    std::size_t count_range(std::size_t first, std::size_t last) const {
        if (last > universe_) last = universe_;
        if (first >= last) return 0;
        std::size_t c = 0;
        std::size_t wf = first >> 6, wl = (last - 1) >> 6;
        for (std::size_t k = wf; k <= wl; ++k) {
            std::uint64_t w = words_[k];
            if (k == wf && (first & 63) != 0) w &= ~std::uint64_t{0} << (first & 63);
            if (k == wl && (last & 63) != 0) w &= (std::uint64_t{1} << (last & 63)) - 1;
            c += static_cast<std::size_t>(std::popcount(w));
        }
        return c;
    }

    GoodSet& operator|=(const GoodSet& other) {
        check_universe(other);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
        return *this;
    }

    GoodSet& operator&=(const GoodSet& other) {
        check_universe(other);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
        return *this;
    }

    /// Set difference.
    GoodSet& operator-=(const GoodSet& other) {
        check_universe(other);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~other.words_[k];
        return *this;
    }

    friend GoodSet operator|(GoodSet a, const GoodSet& b) { return a |= b; }
    friend GoodSet operator&(GoodSet a, const GoodSet& b) { return a &= b; }
    friend GoodSet operator-(GoodSet a, const GoodSet& b) { return a -= b; }

    /// Complement within the universe.
    GoodSet complement() const {
        GoodSet s(universe_);
        for (std::size_t k = 0; k < words_.size(); ++k) s.words_[k] = ~words_[k];
        s.trim();
        return s;
    }

    bool operator==(const GoodSet& other) const = default;

    /// Ascending list of member indices.
    std::vector<std::size_t> to_indices() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t g) { out.push_back(g); });
        return out;
    }

    /// Same members over a larger universe.
    GoodSet resized(std::size_t new_universe) const {
        if (new_universe < universe_)
            throw validation_error("GoodSet::resized cannot shrink the universe");
        GoodSet s(new_universe);
        for (std::size_t k = 0; k < words_.size(); ++k) s.words_[k] = words_[k];
        return s;
    }

    /// Visit member indices in ascending order.
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w != 0) {
                unsigned b = static_cast<unsigned>(std::countr_zero(w));
                f(k * 64 + b);
                w &= w - 1;
            }
        }
    }

private:
    static std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

    void check_index(std::size_t g) const {
        if (g >= universe_)
            throw validation_error("good index " + std::to_string(g) +
                                   " out of range for universe " + std::to_string(universe_));
    }

    void check_universe(const GoodSet& other) const {
        if (other.universe_ != universe_)
            throw validation_error("good-set universe mismatch (" + std::to_string(universe_) +
                                   " vs " + std::to_string(other.universe_) + ")");
    }

    void trim() {
        if (universe_ % 64 != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
    }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace binfair
