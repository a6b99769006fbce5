#pragma once

#include <boost/rational.hpp>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "levelalg/multiindex.hpp"
#include "levelalg/rng.hpp"

namespace levelalg {

using ElementSet = std::vector<bool>;
using Rational = boost::rational<long long>;

// A finite poset whose elements 0..n-1 are listed so that every element comes
// after all elements above it.
class FinitePoset {
public:
    explicit FinitePoset(std::vector<std::vector<std::size_t>> up_covers);
    // Pairs (upper, lower) of covering relations; upper must precede lower.
    static FinitePoset from_covers(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& covers);

    std::size_t size() const { return up_.size(); }
    const std::vector<std::size_t>& up_covers(std::size_t i) const { return up_[i]; }
    const std::vector<std::size_t>& down_covers(std::size_t i) const { return down_[i]; }
    // x is at or above y.
    bool at_or_above(std::size_t x, std::size_t y) const;

private:
    std::vector<std::vector<std::size_t>> up_;
    std::vector<std::vector<std::size_t>> down_;
};

// Product of chains [0, Q_1] x ... x [0, Q_n]; I is above J when I <= J coordinatewise.
// Elements are indexed in ascending lex order, so 0 has index 0 and Q is last.
class GQPoset {
public:
    explicit GQPoset(std::vector<int> bounds);

    const std::vector<int>& bounds() const { return q_; }
    std::size_t size() const { return elems_.size(); }
    const MultiIndex& element(std::size_t k) const { return elems_[k]; }
    std::size_t index_of(const MultiIndex& m) const;
    bool contains(const MultiIndex& m) const;
    // I dominates J: I_k <= J_k for all k.
    bool dominates(const MultiIndex& i, const MultiIndex& j) const;
    const FinitePoset& order() const { return order_; }

    ElementSet make_set(const std::vector<MultiIndex>& items) const;
    std::vector<MultiIndex> members(const ElementSet& s) const;

private:
    std::vector<int> q_;
    std::vector<MultiIndex> elems_;
    std::vector<std::size_t> radix_;
    FinitePoset order_;
};

bool is_topset(const FinitePoset& p, const ElementSet& s);
bool is_bottomset(const FinitePoset& p, const ElementSet& s);
ElementSet up_closure(const FinitePoset& p, const ElementSet& s);
ElementSet down_closure(const FinitePoset& p, const ElementSet& s);
ElementSet complement(const ElementSet& s);
std::size_t cardinality(const ElementSet& s);

enum class TopsetFilter { All, Nonempty, NonemptyProper };

inline constexpr std::size_t kTopsetGuard = std::size_t{1} << 20;

// Every topset, depth-first with inclusion tried first. Throws std::length_error
// once more than `guard` topsets have been produced.
std::vector<ElementSet> enumerate_topsets(const FinitePoset& p, TopsetFilter filter = TopsetFilter::All,
                                          std::size_t guard = kTopsetGuard);
// Streaming variant without a guard; stop by returning false from the visitor.
void for_each_topset(const FinitePoset& p, const std::function<bool(const ElementSet&)>& visit);
// Streaming walk that hands the visitor the integer weight sum and size of each topset.
void for_each_topset_sum(const FinitePoset& p, const std::vector<long long>& weights,
                         const std::function<bool(long long sum, std::size_t count)>& visit);

class OrderPreservingFn {
public:
    explicit OrderPreservingFn(std::vector<Rational> values) : v_(std::move(values)) {}
    std::size_t size() const { return v_.size(); }
    const Rational& operator[](std::size_t k) const { return v_[k]; }
    const std::vector<Rational>& values() const { return v_; }
    Rational total() const;
    // x above y implies f(x) >= f(y).
    bool preserves(const FinitePoset& p) const;
    // f minus its mean.
    OrderPreservingFn centered() const;
    // Common-denominator integer numerators.
    std::vector<long long> scaled(long long* denominator = nullptr) const;

private:
    std::vector<Rational> v_;
};

OrderPreservingFn random_order_preserving(const FinitePoset& p, Stream& s);

struct PropertyVerdict {
    bool holds = true;
    std::optional<ElementSet> witness;  // a topset breaking the inequality
};

// Every topset has nonnegative sum. Requires an order-preserving f with total >= 0.
PropertyVerdict check_tpp(const FinitePoset& p, const OrderPreservingFn& f);
// Every nonempty topset has average at least the global average.
PropertyVerdict check_tap(const FinitePoset& p, const OrderPreservingFn& f);

}  // namespace levelalg
