#include "levelalg/gqposet.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace levelalg {

FinitePoset::FinitePoset(std::vector<std::vector<std::size_t>> up_covers)
    : up_(std::move(up_covers)), down_(up_.size()) {
    for (std::size_t i = 0; i < up_.size(); ++i) {
        for (std::size_t u : up_[i]) {
            if (u >= i) throw std::invalid_argument("poset: an upper cover must precede its lower element");
            down_[u].push_back(i);
        }
    }
}

FinitePoset FinitePoset::from_covers(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
    std::vector<std::vector<std::size_t>> up(n);
    for (auto [u, l] : covers) {
        if (u >= n || l >= n) throw std::invalid_argument("poset: element out of range");
        up[l].push_back(u);
    }
    return FinitePoset(std::move(up));
}

bool FinitePoset::at_or_above(std::size_t x, std::size_t y) const {
    if (x == y) return true;
    if (x > y) return false;
    std::vector<bool> seen(size(), false);
    std::vector<std::size_t> work{y};
    while (!work.empty()) {
        std::size_t k = work.back();
        work.pop_back();
        for (std::size_t u : up_[k]) {
            if (u == x) return true;
            if (u > x && !seen[u]) {
                seen[u] = true;
                work.push_back(u);
            }
        }
    }
    return false;
}

namespace {

std::vector<std::vector<std::size_t>> chain_product_covers(const std::vector<int>& q, std::vector<std::size_t>& radix,
                                                           std::vector<MultiIndex>& elems) {
    const std::size_t n = q.size();
    radix.assign(n, 1);
    std::size_t total = 1;
    for (std::size_t k = n; k-- > 0;) {
        radix[k] = total;
        total *= static_cast<std::size_t>(q[k]) + 1;
    }
    elems.clear();
    elems.reserve(total);
    std::vector<std::vector<std::size_t>> up(total);
    std::vector<int> cur(n, 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
        elems.emplace_back(cur);
        for (std::size_t k = 0; k < n; ++k)
            if (cur[k] > 0) up[idx].push_back(idx - radix[k]);
        for (std::size_t k = n; k-- > 0;) {
            if (cur[k] < q[k]) {
                ++cur[k];
                break;
            }
            cur[k] = 0;
        }
    }
    return up;
}

}  // namespace

GQPoset::GQPoset(std::vector<int> bounds)
    : q_(std::move(bounds)), order_([this] {
          for (int b : q_)
              if (b < 0) throw std::invalid_argument("G_Q: negative bound");
          return chain_product_covers(q_, radix_, elems_);
      }()) {}

bool GQPoset::contains(const MultiIndex& m) const {
    if (m.size() != q_.size()) return false;
    for (std::size_t k = 0; k < q_.size(); ++k)
        if (m[k] > q_[k]) return false;
    return true;
}

std::size_t GQPoset::index_of(const MultiIndex& m) const {
    if (!contains(m)) throw std::out_of_range("G_Q: " + m.str() + " is not an element");
    std::size_t idx = 0;
    for (std::size_t k = 0; k < q_.size(); ++k) idx += radix_[k] * static_cast<std::size_t>(m[k]);
    return idx;
}

bool GQPoset::dominates(const MultiIndex& i, const MultiIndex& j) const {
    if (!contains(i) || !contains(j)) throw std::out_of_range("G_Q: not an element");
    return divides(i, j);
}

ElementSet GQPoset::make_set(const std::vector<MultiIndex>& items) const {
    ElementSet s(size(), false);
    for (const auto& m : items) s[index_of(m)] = true;
    return s;
}

std::vector<MultiIndex> GQPoset::members(const ElementSet& s) const {
    std::vector<MultiIndex> out;
    for (std::size_t k = 0; k < s.size(); ++k)
        if (s[k]) out.push_back(elems_[k]);
    return out;
}

bool is_topset(const FinitePoset& p, const ElementSet& s) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (s[i])
            for (std::size_t u : p.up_covers(i))
                if (!s[u]) return false;
    return true;
}

bool is_bottomset(const FinitePoset& p, const ElementSet& s) { return is_topset(p, complement(s)); }

ElementSet up_closure(const FinitePoset& p, const ElementSet& s) {
    ElementSet out = s;
    for (std::size_t i = p.size(); i-- > 0;)
        if (out[i])
            for (std::size_t u : p.up_covers(i)) out[u] = true;
    return out;
}

ElementSet down_closure(const FinitePoset& p, const ElementSet& s) {
    ElementSet out = s;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (out[i])
            for (std::size_t d : p.down_covers(i)) out[d] = true;
    return out;
}

ElementSet complement(const ElementSet& s) {
    ElementSet c(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) c[k] = !s[k];
    return c;
}

std::size_t cardinality(const ElementSet& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), true)); }

namespace {

// Depth-first walk over topsets. An element may join only when all its upper
// covers have; elements that cannot join are skipped without branching.
template <class Leaf>
struct TopsetWalk {
    const FinitePoset& p;
    Leaf& leaf;
    ElementSet in;
    bool stop = false;

    TopsetWalk(const FinitePoset& poset, Leaf& l) : p(poset), leaf(l), in(poset.size(), false) {}

    bool joinable(std::size_t i) const {
        for (std::size_t u : p.up_covers(i))
            if (!in[u]) return false;
        return true;
    }

    void go(std::size_t i, long long sum, std::size_t count, const std::vector<long long>* w) {
        while (i < p.size() && !joinable(i)) ++i;
        if (i == p.size()) {
            if (!leaf(in, sum, count)) stop = true;
            return;
        }
        in[i] = true;
        go(i + 1, w ? sum + (*w)[i] : sum, count + 1, w);
        in[i] = false;
        if (stop) return;
        go(i + 1, sum, count, w);
    }
};

// Looks for a topset whose weight sum is negative, pruning subtrees whose
// remaining negative weights cannot pull the running sum below zero.
struct NegativeSearch {
    const FinitePoset& p;
    const std::vector<__int128>& w;
    std::vector<__int128> neg_tail;
    ElementSet in;
    bool found = false;

    NegativeSearch(const FinitePoset& poset, const std::vector<__int128>& weights)
        : p(poset), w(weights), neg_tail(poset.size() + 1, 0), in(poset.size(), false) {
        for (std::size_t k = p.size(); k-- > 0;) neg_tail[k] = neg_tail[k + 1] + std::min<__int128>(w[k], 0);
    }

    bool joinable(std::size_t i) const {
        for (std::size_t u : p.up_covers(i))
            if (!in[u]) return false;
        return true;
    }

    void go(std::size_t i, __int128 cur) {
        while (true) {
            if (cur + neg_tail[i] >= 0) return;
            if (i == p.size()) {
                found = true;
                return;
            }
            if (joinable(i)) break;
            ++i;
        }
        in[i] = true;
        go(i + 1, cur + w[i]);
        if (found) return;
        in[i] = false;
        go(i + 1, cur);
    }
};

PropertyVerdict search_negative(const FinitePoset& p, const std::vector<__int128>& w) {
    NegativeSearch s(p, w);
    s.go(0, 0);
    PropertyVerdict v;
    if (s.found) {
        v.holds = false;
        v.witness = s.in;
    }
    return v;
}

void require_valid(const FinitePoset& p, const OrderPreservingFn& f) {
    if (f.size() != p.size()) throw std::invalid_argument("function size does not match poset");
    if (!f.preserves(p)) throw std::invalid_argument("function is not order-preserving");
}

}  // namespace

std::vector<ElementSet> enumerate_topsets(const FinitePoset& p, TopsetFilter filter, std::size_t guard) {
    std::vector<ElementSet> out;
    std::size_t produced = 0;
    auto leaf = [&](const ElementSet& s, long long, std::size_t count) {
        if (++produced > guard) throw std::length_error("topset enumeration exceeds guard");
        if (filter == TopsetFilter::Nonempty && count == 0) return true;
        if (filter == TopsetFilter::NonemptyProper && (count == 0 || count == p.size())) return true;
        out.push_back(s);
        return true;
    };
    TopsetWalk<decltype(leaf)> walk(p, leaf);
    walk.go(0, 0, 0, nullptr);
    return out;
}

void for_each_topset(const FinitePoset& p, const std::function<bool(const ElementSet&)>& visit) {
    auto leaf = [&](const ElementSet& s, long long, std::size_t) { return visit(s); };
    TopsetWalk<decltype(leaf)> walk(p, leaf);
    walk.go(0, 0, 0, nullptr);
}

void for_each_topset_sum(const FinitePoset& p, const std::vector<long long>& weights,
                         const std::function<bool(long long, std::size_t)>& visit) {
    if (weights.size() != p.size()) throw std::invalid_argument("weights size does not match poset");
    auto leaf = [&](const ElementSet&, long long sum, std::size_t count) { return visit(sum, count); };
    TopsetWalk<decltype(leaf)> walk(p, leaf);
    walk.go(0, 0, 0, &weights);
}

Rational OrderPreservingFn::total() const { return std::accumulate(v_.begin(), v_.end(), Rational(0)); }

bool OrderPreservingFn::preserves(const FinitePoset& p) const {
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t u : p.up_covers(i))
            if (v_[u] < v_[i]) return false;
    return true;
}

OrderPreservingFn OrderPreservingFn::centered() const {
    const Rational mean = total() / static_cast<long long>(v_.size());
    std::vector<Rational> out;
    out.reserve(v_.size());
    for (const auto& x : v_) out.push_back(x - mean);
    return OrderPreservingFn(std::move(out));
}

std::vector<long long> OrderPreservingFn::scaled(long long* denominator) const {
    long long l = 1;
    for (const auto& x : v_) {
        l = std::lcm(l, x.denominator());
        if (l > (1LL << 40)) throw std::overflow_error("denominators too large");
    }
    std::vector<long long> out;
    out.reserve(v_.size());
    for (const auto& x : v_) out.push_back(x.numerator() * (l / x.denominator()));
    if (denominator) *denominator = l;
    return out;
}

OrderPreservingFn random_order_preserving(const FinitePoset& p, Stream& s) {
    const std::size_t n = p.size();
    // Each element's value is minus the total weight of everything at or above it.
    std::vector<Rational> w(n);
    const long long den = s.between(1, 3);
    for (std::size_t k = 0; k < n; ++k) w[k] = s.below(3) == 0 ? Rational(0) : Rational(s.between(0, 4), den);
    std::vector<Rational> v(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        ElementSet one(n, false);
        one[i] = true;
        ElementSet up = up_closure(p, one);
        for (std::size_t k = 0; k < n; ++k)
            if (up[k]) v[i] -= w[k];
    }
    // Shift so that the total is zero or slightly positive.
    Rational total = std::accumulate(v.begin(), v.end(), Rational(0));
    Rational shift = -total / static_cast<long long>(n);
    if (s.below(2)) shift += Rational(s.between(0, 3), s.between(1, 4) * static_cast<long long>(n));
    for (auto& x : v) x += shift;
    return OrderPreservingFn(std::move(v));
}

PropertyVerdict check_tpp(const FinitePoset& p, const OrderPreservingFn& f) {
    require_valid(p, f);
    if (f.total() < 0) throw std::invalid_argument("function total is negative");
    std::vector<long long> num = f.scaled();
    std::vector<__int128> w(num.begin(), num.end());
    return search_negative(p, w);
}

PropertyVerdict check_tap(const FinitePoset& p, const OrderPreservingFn& f) {
    require_valid(p, f);
    if (p.size() == 0) return {};
    // avg(T) >= avg(S)  <=>  |S| * sum(T) - |T| * sum(S) >= 0
    std::vector<long long> num = f.scaled();
    __int128 total = 0;
    for (long long x : num) total += x;
    const __int128 n = static_cast<__int128>(p.size());
    std::vector<__int128> w;
    w.reserve(num.size());
    for (long long x : num) w.push_back(n * x - total);
    return search_negative(p, w);
}

}  // namespace levelalg
