#pragma once

#include <atomic>
#include <cstdint>
#include <variant>
#include <vector>

#include "binfair/errors.hpp"
#include "binfair/good_set.hpp"

namespace binfair {

/// v(S) = max over member sets F of |S ∩ F|. The family must be non-empty;
/// the zero valuation is the family {∅}.
struct XosFamily {
    std::vector<GoodSet> sets;
    bool operator==(const XosFamily&) const = default;
};

/// v(S) = best window of delta+1 consecutive good indices: the maximum, over
/// all windows [t, t+delta], of |S ∩ window|.
struct Spectrum {
    std::size_t delta = 0;
    bool operator==(const Spectrum&) const = default;
};

/// Piecewise cardinality valuation with parameters 1 <= p < q:
///   v(S) = |S|            when |S| <= p,
///   v(S) = p              when p < |S| <= q,
///   v(S) = ceil(p|S|/q)   when |S| > q.
/// Subadditive with binary marginals, but not XOS in general.
struct SubadditivePQ {
    long long p = 1;
    long long q = 2;
    bool operator==(const SubadditivePQ&) const = default;
};

/// max of a SubadditivePQ valuation and |S ∩ planted| for a planted set.
struct PlantedSubadditive {
    long long p = 1;
    long long q = 2;
    GoodSet planted;
    bool operator==(const PlantedSubadditive&) const = default;
};

/// One agent's valuation over subsets of {0..m-1}. Immutable after
/// construction; build through the named factories, which validate the
/// family-specific invariants.
class ValuationSpec {
public:
    enum class Kind { xos_family, spectrum, subadditive_pq, planted_subadditive };

    static ValuationSpec xos_family(std::size_t num_goods, std::vector<GoodSet> sets);
    static ValuationSpec spectrum(std::size_t num_goods, std::size_t delta);
    static ValuationSpec subadditive_pq(std::size_t num_goods, long long p, long long q);
    static ValuationSpec planted_subadditive(std::size_t num_goods, long long p, long long q,
                                             GoodSet planted);

    Kind kind() const noexcept;
    std::size_t num_goods() const noexcept { return num_goods_; }

    /// true for the families with a set-family representation (xos_family,
    /// spectrum); these are the classes the solver accepts.
    bool is_binary_xos_class() const noexcept;

    /// Value of a subset per the family formula. Throws if S lives over a
    /// different universe than this valuation.
    long long value(const GoodSet& s) const;

    const XosFamily& as_xos_family() const { return std::get<XosFamily>(kind_); }
    const Spectrum& as_spectrum() const { return std::get<Spectrum>(kind_); }
    const SubadditivePQ& as_subadditive_pq() const { return std::get<SubadditivePQ>(kind_); }
    const PlantedSubadditive& as_planted() const { return std::get<PlantedSubadditive>(kind_); }

    bool operator==(const ValuationSpec&) const = default;

private:
    ValuationSpec(std::size_t num_goods,
                  std::variant<XosFamily, Spectrum, SubadditivePQ, PlantedSubadditive> kind)
        : num_goods_(num_goods), kind_(std::move(kind)) {}

    std::size_t num_goods_ = 0;
    std::variant<XosFamily, Spectrum, SubadditivePQ, PlantedSubadditive> kind_;
};

inline long long evaluate(const ValuationSpec& spec, const GoodSet& s) { return spec.value(s); }

/// Value oracle wrapping a ValuationSpec. Every value() call bumps the query
/// counter by one; counts are exact under serial use and lost-increment-free
/// under concurrent use (relaxed atomic).
class CountingOracle {
public:
    explicit CountingOracle(ValuationSpec spec) : spec_(std::move(spec)) {}

    CountingOracle(const CountingOracle& other)
        : spec_(other.spec_), count_(other.count_.load(std::memory_order_relaxed)) {}

    long long value(const GoodSet& s) const {
        count_.fetch_add(1, std::memory_order_relaxed);
        return spec_.value(s);
    }

    std::uint64_t query_count() const noexcept { return count_.load(std::memory_order_relaxed); }
    void reset() noexcept { count_.store(0, std::memory_order_relaxed); }

    const ValuationSpec& spec() const noexcept { return spec_; }

private:
    ValuationSpec spec_;
    mutable std::atomic<std::uint64_t> count_{0};
};

inline std::uint64_t query_count(const CountingOracle& oracle) { return oracle.query_count(); }

/// Subset X ⊆ S with v(X) = |X| = v(S), found by one descending-index pass
/// that drops every good whose removal preserves the value. Keeps the
/// lowest-indexed goods on ties and issues at most |S| value queries after
/// the initial v(S) query. Only defined for the binary XOS classes; refuses
/// the subadditive families outright.
GoodSet extract_nonwasteful(const CountingOracle& oracle, const GoodSet& s);
GoodSet extract_nonwasteful(const ValuationSpec& spec, const GoodSet& s);

/// Subset of a non-wasteful set X with exactly `target` goods, obtained by
/// removing the highest-indexed goods first. Every subset of a non-wasteful
/// set is non-wasteful, so v(result) = target.
GoodSet shrink_to_size(const CountingOracle& oracle, const GoodSet& x, long long target);
GoodSet shrink_to_size(const ValuationSpec& spec, const GoodSet& x, long long target);

inline constexpr std::size_t kMarginalsCheckLimit = 14;
inline constexpr std::size_t kSubadditiveCheckLimit = 10;
inline constexpr std::size_t kXosP2CheckLimit = 14;

/// Exhaustively verify v(S ∪ {g}) − v(S) ∈ {0,1} for all S and g ∉ S.
bool check_binary_marginals(const ValuationSpec& spec,
                            std::size_t limit = kMarginalsCheckLimit);

/// Exhaustively verify v(S ∪ T) ≤ v(S) + v(T) for all pairs of subsets.
bool check_subadditive(const ValuationSpec& spec, std::size_t limit = kSubadditiveCheckLimit);

/// Exhaustively verify binary marginals plus the witness property: every S
/// admits X ⊆ S with v(X) = |X| = v(S). Together these characterize the
/// binary XOS valuations.
bool check_xos_p2(const ValuationSpec& spec, std::size_t limit = kXosP2CheckLimit);

/// Generic table-driven variants used to test arbitrary set functions given
/// as value-per-bitmask tables of size 2^m.
bool check_binary_marginals_table(std::size_t m, const std::vector<long long>& table);
bool check_subadditive_table(std::size_t m, const std::vector<long long>& table);
bool check_xos_p2_table(std::size_t m, const std::vector<long long>& table);

/// All values of the spec over subsets of {0..m-1}, indexed by bitmask.
std::vector<long long> subset_value_table(const ValuationSpec& spec, std::size_t m);

/// The family of all width-(delta+1) windows, which evaluates identically to
/// the Spectrum valuation it expands.
XosFamily expand_spectrum(std::size_t num_goods, std::size_t delta);

}  // namespace binfair
