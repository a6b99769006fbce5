#include "levelalg/apolarity.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace levelalg {

HomogeneousSubspace::HomogeneousSubspace(Constraint c, PrimeField f)
    : c_(std::move(c)), f_(f), basis_(c_.num_vars(), c_.socle_degree(), c_.bounds()) {
    if (static_cast<std::uint64_t>(c_.socle_degree()) >= f_.p())
        throw std::invalid_argument("prime must exceed the socle degree");
}

void HomogeneousSubspace::add_generator(std::vector<std::uint32_t> coeffs) {
    if (coeffs.size() != basis_.size()) throw std::invalid_argument("generator length does not match the monomial basis");
    for (auto& x : coeffs) x %= f_.p();
    gens_.push_back(std::move(coeffs));
}

void HomogeneousSubspace::add_terms(const std::vector<std::pair<MultiIndex, long long>>& terms) {
    std::vector<std::uint32_t> g(basis_.size(), 0);
    for (const auto& [m, coef] : terms) {
        if (m.size() != static_cast<std::size_t>(num_vars()) || m.degree() != socle_degree())
            throw std::invalid_argument("monomial " + m.str() + " has the wrong shape or degree");
        auto pos = basis_.find(m);
        if (!pos) throw std::invalid_argument("monomial " + m.str() + " violates the constraint");
        g[*pos] = f_.add(g[*pos], f_.reduce(coef));
    }
    gens_.push_back(std::move(g));
}

void HomogeneousSubspace::add_random(std::size_t s, Stream& rng) {
    for (std::size_t k = 0; k < s; ++k) {
        std::vector<std::uint32_t> g(basis_.size());
        for (auto& x : g) x = f_.random(rng);
        gens_.push_back(std::move(g));
    }
}

HomogeneousSubspace HomogeneousSubspace::relaxed(const Constraint& wider) const {
    if (wider.num_vars() != num_vars() || wider.socle_degree() != socle_degree())
        throw std::invalid_argument("relaxed: shape mismatch");
    HomogeneousSubspace out(wider, f_);
    for (const auto& m : basis_.items())
        if (!wider.admits(m)) throw std::invalid_argument("relaxed: constraint is not weaker");
    for (const auto& g : gens_) {
        std::vector<std::uint32_t> h(out.basis_.size(), 0);
        for (std::size_t k = 0; k < g.size(); ++k) h[*out.basis_.find(basis_[k])] = g[k];
        out.gens_.push_back(std::move(h));
    }
    return out;
}

HomogeneousSubspace HomogeneousSubspace::join(const HomogeneousSubspace& a, const HomogeneousSubspace& b) {
    if (a.num_vars() != b.num_vars() || a.socle_degree() != b.socle_degree() || !(a.f_ == b.f_))
        throw std::invalid_argument("join: subspaces live in different spaces");
    const int j = a.socle_degree();
    const std::size_t n = std::max(a.c_.n(), b.c_.n());
    std::vector<int> q(n, j);
    for (std::size_t k = 0; k < n; ++k) {
        const int qa = k < a.c_.n() ? a.c_.bounds()[k] : j;
        const int qb = k < b.c_.n() ? b.c_.bounds()[k] : j;
        q[k] = std::max(qa, qb);
    }
    while (!q.empty() && q.back() == j) q.pop_back();
    Constraint c(a.num_vars(), j, q);
    HomogeneousSubspace out = a.relaxed(c);
    HomogeneousSubspace other = b.relaxed(c);
    for (auto& g : other.gens_) out.gens_.push_back(std::move(g));
    return out;
}

std::uint64_t derivative_coefficient(const MultiIndex& e, const MultiIndex& jj) {
    if (!divides(e, jj)) return 0;
    unsigned __int128 acc = 1;
    for (std::size_t k = 0; k < e.size(); ++k) {
        for (int t = 0; t < e[k]; ++t) {
            acc *= static_cast<unsigned>(jj[k] - t);
            if (acc > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("derivative coefficient overflow");
        }
    }
    return static_cast<std::uint64_t>(acc);
}

namespace {

std::uint32_t derivative_coefficient_mod(const MultiIndex& e, const MultiIndex& jj, const PrimeField& f) {
    std::uint32_t acc = 1;
    for (std::size_t k = 0; k < e.size(); ++k)
        for (int t = 0; t < e[k]; ++t) acc = f.mul(acc, static_cast<std::uint32_t>(jj[k] - t));
    return acc;
}

std::vector<int> no_bounds() { return {}; }

}  // namespace

std::vector<std::uint32_t> apply_derivative(const HomogeneousSubspace& w, std::size_t i, const MultiIndex& e) {
    const int d = w.socle_degree() - e.degree();
    MonomialBasis target(w.num_vars(), d, w.constraint().bounds());
    std::vector<std::uint32_t> out(target.size(), 0);
    if (d < 0) return out;
    const auto& g = w.generator(i);
    for (std::size_t k = 0; k < w.basis().size(); ++k) {
        if (g[k] == 0) continue;
        const MultiIndex& jj = w.basis()[k];
        auto rest = subtract(jj, e);
        if (!rest) continue;
        out[*target.find(*rest)] = w.field().mul(g[k], derivative_coefficient_mod(e, jj, w.field()));
    }
    return out;
}

MatrixLayout derivative_layout(const Constraint& c, std::size_t s, int d, bool cropped) {
    MatrixLayout l;
    const int e = c.socle_degree() - d;
    if (d < 0 || e < 0) return l;
    const std::vector<int> bounds = cropped ? c.bounds() : no_bounds();
    for (auto& m : enumerate_constrained(c.num_vars(), e, bounds))
        for (std::size_t i = 0; i < s; ++i) l.rows.emplace_back(m, i);
    l.cols = enumerate_constrained(c.num_vars(), d, bounds);
    return l;
}

SymbolicMatrix build_symbolic(const Constraint& c, std::size_t s, int d, bool cropped) {
    MatrixLayout l = derivative_layout(c, s, d, cropped);
    MonomialBasis top(c.num_vars(), c.socle_degree(), c.bounds());
    SymbolicMatrix m(l.rows.size(), l.cols.size());
    for (std::size_t a = 0; a < l.rows.size(); ++a) {
        const auto& [e, i] = l.rows[a];
        for (std::size_t b = 0; b < l.cols.size(); ++b) {
            MultiIndex jj = add(e, l.cols[b]);
            auto pos = top.find(jj);
            if (!pos) continue;
            m.at(a, b) = Entry{derivative_coefficient(e, jj), static_cast<std::uint32_t>(i * top.size() + *pos)};
        }
    }
    return m;
}

DenseMatrix build_dense(const HomogeneousSubspace& w, int d, bool cropped) {
    const Constraint& c = w.constraint();
    const std::size_t s = w.num_generators();
    const int e = c.socle_degree() - d;
    if (d < 0 || e < 0) return DenseMatrix(0, 0);
    const std::vector<int> bounds = cropped ? c.bounds() : no_bounds();
    const auto es = enumerate_constrained(c.num_vars(), e, bounds);
    const auto ds = enumerate_constrained(c.num_vars(), d, bounds);
    const PrimeField& f = w.field();
    DenseMatrix m(es.size() * s, ds.size());
    for (std::size_t a = 0; a < es.size(); ++a) {
        for (std::size_t b = 0; b < ds.size(); ++b) {
            MultiIndex jj = add(es[a], ds[b]);
            auto pos = w.basis().find(jj);
            if (!pos) continue;
            const std::uint32_t n = derivative_coefficient_mod(es[a], jj, f);
            for (std::size_t i = 0; i < s; ++i) m(a * s + i, b) = f.mul(n, w.generator(i)[*pos]);
        }
    }
    return m;
}

GQBlockStructure measured_blocks(const Constraint& c, std::size_t s, int d) {
    GQPoset g(c.bounds());
    GQBlockStructure b{c.bounds(), std::vector<std::size_t>(g.size(), 0), std::vector<std::size_t>(g.size(), 0)};
    MatrixLayout l = derivative_layout(c, s, d, true);
    const std::size_t n = c.n();
    for (const auto& [e, i] : l.rows) {
        std::vector<int> key(e.exponents().begin(), e.exponents().begin() + static_cast<std::ptrdiff_t>(n));
        ++b.row_sizes[g.index_of(MultiIndex(key))];
    }
    for (const auto& dd : l.cols) {
        std::vector<int> key(n);
        for (std::size_t k = 0; k < n; ++k) key[k] = c.bounds()[k] - dd[k];
        ++b.col_sizes[g.index_of(MultiIndex(key))];
    }
    return b;
}

namespace {

// Degree-t monomials in k variables.
std::uint64_t free_count(long long t, long long k) {
    if (t < 0) return 0;
    if (k == 0) return t == 0 ? 1 : 0;
    return binomial(t + k - 1, k - 1);
}

}  // namespace

std::pair<std::uint64_t, std::uint64_t> block_size_count(const Constraint& c, int d, std::size_t s, const MultiIndex& i) {
    const long long k = c.num_vars() - static_cast<long long>(c.n());
    const long long e = c.socle_degree() - d;
    const long long p = i.degree();
    const long long q = c.bound_sum();
    return {s * free_count(e - p, k), free_count(d - (q - p), k)};
}

GQBlockStructure standard_blocks(const Constraint& c, std::size_t s, int d) {
    GQPoset g(c.bounds());
    GQBlockStructure b{c.bounds(), {}, {}};
    for (std::size_t k = 0; k < g.size(); ++k) {
        auto [r, cc] = block_size_count(c, d, s, g.element(k));
        b.row_sizes.push_back(r);
        b.col_sizes.push_back(cc);
    }
    return b;
}

bool max_rank_guaranteed(const Constraint& c, int d, std::size_t s) {
    const int e = c.socle_degree() - d;
    if (d < 0 || e < 0) return false;
    return s * monomial_count(c, e) >= monomial_count(c, d);
}

std::size_t hilbert_value(const HomogeneousSubspace& w, int d) {
    if (d < 0 || d > w.socle_degree()) return 0;
    return rank(build_dense(w, d, true), w.field());
}

std::vector<std::size_t> hilbert_vector(const HomogeneousSubspace& w, int lo, int hi) {
    std::vector<std::size_t> h;
    for (int d = lo; d <= hi; ++d) h.push_back(hilbert_value(w, d));
    return h;
}

std::size_t sum_space_dimension(const HomogeneousSubspace& v, const HomogeneousSubspace& w, int d) {
    if (d < 0 || d > v.socle_degree()) return 0;
    HomogeneousSubspace both = HomogeneousSubspace::join(v, w);
    return hilbert_value(both, d);
}

}  // namespace levelalg
