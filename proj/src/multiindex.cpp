#include "levelalg/multiindex.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace levelalg {

MultiIndex::MultiIndex(std::vector<int> exponents) : e_(std::move(exponents)) {
    for (int x : e_)
        if (x < 0) throw std::invalid_argument("negative exponent in multi-index");
}

MultiIndex::MultiIndex(std::initializer_list<int> exponents)
    : MultiIndex(std::vector<int>(exponents)) {}

int MultiIndex::degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

std::string MultiIndex::str() const {
    std::string s = "(";
    for (std::size_t k = 0; k < e_.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(e_[k]);
    }
    return s + ")";
}

std::size_t MultiIndexHash::operator()(const MultiIndex& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : m.exponents()) {
        h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

std::strong_ordering lex_compare(const MultiIndex& a, const MultiIndex& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("lex_compare: multi-indices of different length");
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] != b[k]) return a[k] <=> b[k];
    return std::strong_ordering::equal;
}

MultiIndex add(const MultiIndex& a, const MultiIndex& b) {
    if (a.size() != b.size()) throw std::invalid_argument("add: length mismatch");
    std::vector<int> e(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) e[k] = a[k] + b[k];
    return MultiIndex(std::move(e));
}

std::optional<MultiIndex> subtract(const MultiIndex& a, const MultiIndex& b) {
    if (a.size() != b.size()) throw std::invalid_argument("subtract: length mismatch");
    std::vector<int> e(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        e[k] = a[k] - b[k];
        if (e[k] < 0) return std::nullopt;
    }
    return MultiIndex(std::move(e));
}

bool divides(const MultiIndex& a, const MultiIndex& b) {
    if (a.size() != b.size()) throw std::invalid_argument("divides: length mismatch");
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k]) return false;
    return true;
}

Constraint::Constraint(int r, int j, std::vector<int> bounds)
    : r_(r), j_(j), bounds_(std::move(bounds)) {
    if (r < 0 || j < 0) throw std::invalid_argument("constraint: r and j must be nonnegative");
    if (bounds_.size() > static_cast<std::size_t>(r))
        throw std::invalid_argument("constraint: more bounds than variables");
    for (int b : bounds_)
        if (b < 0 || b > j) throw std::invalid_argument("constraint: bound outside [0, j]");
}

bool Constraint::admits(const MultiIndex& m) const {
    if (m.size() != static_cast<std::size_t>(r_)) return false;
    for (std::size_t k = 0; k < bounds_.size(); ++k)
        if (m[k] > bounds_[k]) return false;
    return true;
}

std::vector<int> Constraint::effective_bounds() const {
    std::vector<int> out;
    for (int b : bounds_)
        if (b != j_) out.push_back(b);
    return out;
}

std::vector<long long> Constraint::shifted() const {
    std::vector<long long> a;
    for (int b : bounds_) a.push_back(b + 1LL);
    return a;
}

long long Constraint::bound_sum() const {
    return std::accumulate(bounds_.begin(), bounds_.end(), 0LL);
}

long long Constraint::shifted_sum() const { return bound_sum() + static_cast<long long>(n()); }

long long Constraint::shifted_product() const {
    long long p = 1;
    for (int b : bounds_) p *= b + 1LL;
    return p;
}

namespace {

constexpr long long kUnbounded = std::numeric_limits<int>::max();

class Walker {
public:
    Walker(int r, int d, const std::vector<int>& bounds) : r_(r), x_(r, 0), cap_(r, kUnbounded) {
        if (bounds.size() > static_cast<std::size_t>(r))
            throw std::invalid_argument("enumerate: more bounds than variables");
        for (std::size_t k = 0; k < bounds.size(); ++k) cap_[k] = bounds[k];
        tail_cap_.assign(r + 1, 0);
        for (int k = r - 1; k >= 0; --k) tail_cap_[k] = std::min(kUnbounded, tail_cap_[k + 1] + cap_[k]);
        valid_ = d >= 0 && tail_cap_[0] >= d;
        if (valid_) fill(0, d);
    }

    bool valid() const { return valid_; }
    const std::vector<int>& current() const { return x_; }

    bool next() {
        long long tail = r_ > 0 ? x_[r_ - 1] : 0;
        for (int k = r_ - 2; k >= 0; --k) {
            if (x_[k] > 0 && tail_cap_[k + 1] >= tail + 1) {
                --x_[k];
                fill(k + 1, tail + 1);
                return true;
            }
            tail += x_[k];
        }
        return valid_ = false;
    }

private:
    void fill(int from, long long rem) {
        for (int t = from; t < r_; ++t) {
            long long v = std::min(cap_[t], rem);
            x_[t] = static_cast<int>(v);
            rem -= v;
        }
    }

    int r_;
    std::vector<int> x_;
    std::vector<long long> cap_;
    std::vector<long long> tail_cap_;
    bool valid_ = false;
};

std::uint64_t checked(__int128 v) {
    if (v < 0 || v > static_cast<__int128>(std::numeric_limits<std::uint64_t>::max()))
        throw std::overflow_error("monomial count out of range");
    return static_cast<std::uint64_t>(v);
}

}  // namespace

std::vector<MultiIndex> enumerate_constrained(int r, int d, const std::vector<int>& bounds) {
    std::vector<MultiIndex> out;
    if (r == 0) {
        if (d == 0) out.emplace_back();
        return out;
    }
    Walker w(r, d, bounds);
    if (!w.valid()) return out;
    do {
        out.emplace_back(w.current());
    } while (w.next());
    return out;
}

std::uint64_t binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    __int128 acc = 1;
    for (long long t = 1; t <= k; ++t) {
        acc = acc * (n - k + t) / t;
        if (acc > static_cast<__int128>(std::numeric_limits<std::uint64_t>::max()))
            throw std::overflow_error("binomial overflow");
    }
    return static_cast<std::uint64_t>(acc);
}

namespace {

std::uint64_t count_by_walking(int r, int d, const std::vector<int>& bounds) {
    if (d < 0) return 0;
    if (r == 0) return d == 0 ? 1 : 0;
    Walker w(r, d, bounds);
    if (!w.valid()) return 0;
    std::uint64_t c = 0;
    do {
        ++c;
    } while (w.next());
    return c;
}

CountResult closed_form(const Constraint& q, int d) {
    const int r = q.num_vars();
    if (d < 0) return {0, "negative_degree"};
    std::vector<int> eff = q.effective_bounds();
    std::sort(eff.begin(), eff.end());
    const int n = static_cast<int>(eff.size());
    __int128 qs = 0, S = 0, P = 1;
    for (int b : eff) {
        qs += b;
        S += b + 1;
        P *= b + 1;
    }
    if (n == 0) {
        if (r == 0) return {d == 0 ? 1u : 0u, "unconstrained"};
        return {binomial(d + r - 1LL, r - 1LL), "unconstrained"};
    }
    if (qs == 0) {
        const int k = r - n;
        if (k == 0) return {d == 0 ? 1u : 0u, "zero_bounds"};
        return {binomial(d + k - 1LL, k - 1LL), "zero_bounds"};
    }
    if (n == r) {
        if (d > qs) return {0, "r_fold"};
        return {std::nullopt, "none"};
    }
    if (n == r - 1) {
        if (d >= qs) return {checked(P), "r_minus_1_fold"};
        return {std::nullopt, "none"};
    }
    if (n == r - 2) {
        if (r == 3) {
            const long long a = eff[0] + 1LL;
            const __int128 base = static_cast<__int128>(a) * (2LL * d - a + 3) / 2;
            if (d >= a - 2) return {checked(base), "three_vars_once_large"};
            if (d == a - 3) return {checked(base + 1), "three_vars_once_corrected"};
            if (d < a) return {binomial(d + 2LL, 2), "three_vars_once_small"};
        }
        if (r == 4) {
            const long long a1 = eff[0] + 1LL, a2 = eff[1] + 1LL;
            const __int128 base = static_cast<__int128>(a1) * a2 * (2LL * d - a1 - a2 + 4) / 2;
            if (d >= a1 + a2 - 3) return {checked(base), "four_vars_twice_large"};
            if (d == a1 + a2 - 4) return {checked(base + 1), "four_vars_twice_corrected"};
            if (d < std::min(a1, a2)) return {binomial(d + 3LL, 3), "four_vars_twice_small"};
        }
        if (d >= qs) return {checked(P * (2 * static_cast<__int128>(d) - S + r) / 2), "r_minus_2_fold"};
        return {std::nullopt, "none"};
    }
    if (n == r - 3 && d >= qs) {
        const __int128 dd = d;
        if (r == 4) {
            const __int128 a = eff[0] + 1LL;
            const __int128 num = a * (3 * dd * dd + 3 * (4 - a) * dd + a * a - 6 * a + 11);
            return {checked(num / 6), "four_vars_once"};
        }
        if (r == 5) {
            const __int128 a1 = eff[0] + 1LL, a2 = eff[1] + 1LL;
            const __int128 num = a1 * a2 *
                                 (6 * dd * dd + 6 * (5 - a1 - a2) * dd + 2 * (a1 * a1 + a2 * a2) -
                                  15 * (a1 + a2) + 3 * a1 * a2 + 35);
            return {checked(num / 12), "five_vars_twice"};
        }
        // Sum over the box of the bounded coordinates; each term counts the three free ones.
        __int128 total = 0;
        std::vector<int> box(n, 0);
        while (true) {
            long long used = 0;
            for (int x : box) used += x;
            total += binomial(d - used + 2LL, 2);
            int k = 0;
            while (k < n && box[k] == eff[k]) box[k++] = 0;
            if (k == n) break;
            ++box[k];
        }
        return {checked(total), "r_minus_3_fold"};
    }
    return {std::nullopt, "none"};
}

}  // namespace

CountResult count_constrained(const Constraint& q, int d, CountMethod method) {
    if (method == CountMethod::Enumerate) return {count_by_walking(q.num_vars(), d, q.bounds()), "enumerate"};
    return closed_form(q, d);
}

std::uint64_t monomial_count(const Constraint& q, int d) {
    CountResult c = closed_form(q, d);
    if (c.value) return *c.value;
    return count_by_walking(q.num_vars(), d, q.bounds());
}

MonomialBasis::MonomialBasis(std::vector<MultiIndex> items) : items_(std::move(items)) {
    pos_.reserve(items_.size());
    for (std::size_t k = 0; k < items_.size(); ++k) pos_.emplace(items_[k], k);
}

MonomialBasis::MonomialBasis(int r, int d, const std::vector<int>& bounds)
    : MonomialBasis(enumerate_constrained(r, d, bounds)) {}

std::optional<std::size_t> MonomialBasis::find(const MultiIndex& m) const {
    auto it = pos_.find(m);
    if (it == pos_.end()) return std::nullopt;
    return it->second;
}

}  // namespace levelalg
