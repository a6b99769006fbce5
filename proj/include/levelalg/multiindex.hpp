#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace levelalg {

// Exponent vector of a monomial in r variables.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> exponents);
    MultiIndex(std::initializer_list<int> exponents);

    std::size_t size() const { return e_.size(); }
    int operator[](std::size_t k) const { return e_[k]; }
    const std::vector<int>& exponents() const { return e_; }
    int degree() const;

    bool operator==(const MultiIndex&) const = default;

    std::string str() const;

private:
    std::vector<int> e_;
};

struct MultiIndexHash {
    std::size_t operator()(const MultiIndex& m) const noexcept;
};

// Lexicographic comparison. Throws std::invalid_argument on length mismatch.
std::strong_ordering lex_compare(const MultiIndex& a, const MultiIndex& b);
inline bool lex_greater(const MultiIndex& a, const MultiIndex& b) {
    return lex_compare(a, b) == std::strong_ordering::greater;
}

MultiIndex add(const MultiIndex& a, const MultiIndex& b);
// a - b when every coordinate stays nonnegative.
std::optional<MultiIndex> subtract(const MultiIndex& a, const MultiIndex& b);
// Coordinatewise a <= b.
bool divides(const MultiIndex& a, const MultiIndex& b);

// Upper bounds Q_1..Q_n on the first n exponents of degree-j forms in r variables.
class Constraint {
public:
    Constraint(int r, int j, std::vector<int> bounds);
    static Constraint none(int r, int j) { return Constraint(r, j, {}); }

    int num_vars() const { return r_; }
    int socle_degree() const { return j_; }
    const std::vector<int>& bounds() const { return bounds_; }
    std::size_t n() const { return bounds_.size(); }

    bool admits(const MultiIndex& m) const;

    // Bounds left after dropping those equal to j.
    std::vector<int> effective_bounds() const;
    // a_i = Q_i + 1 and the aggregates q, S_n, P_n over all bounds.
    std::vector<long long> shifted() const;
    long long bound_sum() const;
    long long shifted_sum() const;
    long long shifted_product() const;

    bool operator==(const Constraint&) const = default;

private:
    int r_;
    int j_;
    std::vector<int> bounds_;
};

// All degree-d multi-indices in r variables with I_i <= bounds_i, descending lex.
std::vector<MultiIndex> enumerate_constrained(int r, int d, const std::vector<int>& bounds);

enum class CountMethod { Enumerate, ClosedForm };

struct CountResult {
    std::optional<std::uint64_t> value;  // empty when no closed form applies
    std::string rule;
};

CountResult count_constrained(const Constraint& q, int d, CountMethod method);
// Closed form when one applies, enumeration otherwise.
std::uint64_t monomial_count(const Constraint& q, int d);

std::uint64_t binomial(long long n, long long k);

// Position lookup for a fixed list of multi-indices.
class MonomialBasis {
public:
    MonomialBasis() = default;
    explicit MonomialBasis(std::vector<MultiIndex> items);
    MonomialBasis(int r, int d, const std::vector<int>& bounds);

    std::size_t size() const { return items_.size(); }
    const MultiIndex& operator[](std::size_t k) const { return items_[k]; }
    const std::vector<MultiIndex>& items() const { return items_; }
    std::optional<std::size_t> find(const MultiIndex& m) const;

private:
    std::vector<MultiIndex> items_;
    std::unordered_map<MultiIndex, std::size_t, MultiIndexHash> pos_;
};

}  // namespace levelalg
