#include "levelalg/lmatrix.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace levelalg {

std::size_t SymbolicMatrix::num_vars() const {
    std::size_t n = 0;
    for (const auto& e : e_)
        if (e.nonzero()) n = std::max<std::size_t>(n, e.var + 1ull);
    return n;
}

SymbolicMatrix SymbolicMatrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    SymbolicMatrix s(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) s.at(i, j) = at(rows[i], cols[j]);
    return s;
}

namespace {

std::map<std::uint32_t, std::vector<std::pair<std::size_t, std::size_t>>> occurrences(const SymbolicMatrix& m) {
    std::map<std::uint32_t, std::vector<std::pair<std::size_t, std::size_t>>> occ;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j).nonzero()) occ[m.at(i, j).var].emplace_back(i, j);
    return occ;
}

// Occurrences arrive sorted by row, then column.
bool strictly_southwest(const std::vector<std::pair<std::size_t, std::size_t>>& occ) {
    for (std::size_t k = 1; k < occ.size(); ++k)
        if (occ[k].first == occ[k - 1].first || occ[k].second >= occ[k - 1].second) return false;
    return true;
}

}  // namespace

bool moves_left(const SymbolicMatrix& m, std::uint32_t var) {
    auto occ = occurrences(m);
    auto it = occ.find(var);
    return it == occ.end() || strictly_southwest(it->second);
}

Classification classify(const SymbolicMatrix& m) {
    Classification c;
    for (const auto& [var, occ] : occurrences(m)) {
        if (!strictly_southwest(occ)) {
            c.is_l = false;
            c.stuck.push_back(var);
        }
    }
    return c;
}

std::size_t GQBlockStructure::total_rows() const { return std::accumulate(row_sizes.begin(), row_sizes.end(), std::size_t{0}); }
std::size_t GQBlockStructure::total_cols() const { return std::accumulate(col_sizes.begin(), col_sizes.end(), std::size_t{0}); }

std::vector<long long> GQBlockStructure::excess() const {
    std::vector<long long> a(row_sizes.size());
    for (std::size_t k = 0; k < a.size(); ++k)
        a[k] = static_cast<long long>(row_sizes[k]) - static_cast<long long>(col_sizes[k]);
    return a;
}

PatternReport verify_gq_pattern(const SymbolicMatrix& m, const GQBlockStructure& s) {
    GQPoset g(s.q);
    if (s.row_sizes.size() != g.size() || s.col_sizes.size() != g.size())
        return {false, "block size vectors do not match |G_Q|"};
    if (s.total_rows() != m.rows() || s.total_cols() != m.cols()) return {false, "block sizes do not sum to matrix shape"};
    std::vector<std::size_t> row_elem, col_elem;
    for (std::size_t k = g.size(); k-- > 0;) row_elem.insert(row_elem.end(), s.row_sizes[k], k);
    for (std::size_t k = 0; k < g.size(); ++k) col_elem.insert(col_elem.end(), s.col_sizes[k], k);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const bool want = g.dominates(g.element(row_elem[i]), g.element(col_elem[j]));
            if (want != m.at(i, j).nonzero()) {
                return {false, "entry (" + std::to_string(i) + "," + std::to_string(j) + ") in block " +
                                   g.element(row_elem[i]).str() + "x" + g.element(col_elem[j]).str() +
                                   (want ? " should be nonzero" : " should be zero")};
            }
        }
    }
    return {};
}

namespace {

FinitePoset drop_element(const FinitePoset& p, std::size_t gone) {
    std::vector<std::vector<std::size_t>> up;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i == gone) continue;
        std::vector<std::size_t> u;
        for (std::size_t x : p.up_covers(i))
            if (x != gone) u.push_back(x > gone ? x - 1 : x);
        up.push_back(std::move(u));
    }
    return FinitePoset(std::move(up));
}

}  // namespace

bool excess_test(const GQBlockStructure& s, ExcessForm form) {
    GQPoset g(s.q);
    std::vector<long long> a = s.excess();
    const long long total = std::accumulate(a.begin(), a.end(), 0LL);
    if (total != 0) throw std::invalid_argument("excess test needs a square block structure");
    const std::size_t n = g.size();
    bool ok = true;
    switch (form) {
        case ExcessForm::ProperTopsets:
            for_each_topset_sum(g.order(), a, [&](long long sum, std::size_t c) {
                if (c > 0 && c < n && sum < 0) ok = false;
                return ok;
            });
            break;
        case ExcessForm::TopsetsWithoutBottom: {
            std::vector<long long> sub(a.begin(), a.end() - 1);
            for_each_topset_sum(drop_element(g.order(), n - 1), sub, [&](long long sum, std::size_t c) {
                if (c > 0 && sum < 0) ok = false;
                return ok;
            });
            break;
        }
        case ExcessForm::ProperBottomsets:
            for_each_topset_sum(g.order(), a, [&](long long sum, std::size_t c) {
                if (c > 0 && c < n && total - sum > 0) ok = false;
                return ok;
            });
            break;
        case ExcessForm::BottomsetsWithoutTop: {
            std::vector<long long> sub(a.begin() + 1, a.end());
            const long long sub_total = total - a[0];
            for_each_topset_sum(drop_element(g.order(), 0), sub, [&](long long sum, std::size_t c) {
                if (c < n - 1 && sub_total - sum > 0) ok = false;
                return ok;
            });
            break;
        }
    }
    return ok;
}

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
        std::size_t h = 0xcbf29ce484222325ull;
        for (auto x : v) h = (h ^ x) * 0x100000001b3ull;
        return h;
    }
};

struct Expansion {
    const SymbolicMatrix& m;
    std::vector<std::size_t> perm;
    std::vector<bool> used;
    std::unordered_map<std::vector<std::uint32_t>, __int128, VecHash> poly;

    explicit Expansion(const SymbolicMatrix& mat) : m(mat), used(mat.cols(), false) {}

    void go(std::size_t row, __int128 coeff) {
        const std::size_t n = m.rows();
        if (row == n) {
            std::size_t inversions = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = i + 1; k < n; ++k)
                    if (perm[i] > perm[k]) ++inversions;
            std::vector<std::uint32_t> mono(n);
            for (std::size_t i = 0; i < n; ++i) mono[i] = m.at(i, perm[i]).var;
            std::sort(mono.begin(), mono.end());
            poly[mono] += inversions % 2 ? -coeff : coeff;
            return;
        }
        for (std::size_t j = 0; j < n; ++j) {
            const Entry& e = m.at(row, j);
            if (used[j] || !e.nonzero()) continue;
            __int128 next = coeff * static_cast<__int128>(e.lambda);
            if (next / static_cast<__int128>(e.lambda) != coeff || next > (static_cast<__int128>(1) << 120))
                throw std::overflow_error("determinant coefficient overflow");
            used[j] = true;
            perm.push_back(j);
            go(row + 1, next);
            perm.pop_back();
            used[j] = false;
        }
    }
};

}  // namespace

DetResult det_exact(const SymbolicMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    if (m.rows() > kExactDetLimit) throw std::invalid_argument("exact determinant limited to 7x7");
    Expansion ex(m);
    ex.go(0, 1);
    DetResult r;
    for (const auto& [mono, c] : ex.poly)
        if (c != 0) ++r.terms;
    r.nonzero = r.terms > 0;
    return r;
}

DenseMatrix evaluate(const SymbolicMatrix& m, const std::vector<std::uint32_t>& point, const PrimeField& f) {
    DenseMatrix d(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Entry& e = m.at(i, j);
            if (!e.nonzero()) continue;
            if (e.var >= point.size()) throw std::out_of_range("evaluation point too short");
            d(i, j) = f.mul(static_cast<std::uint32_t>(e.lambda % f.p()), point[e.var]);
        }
    }
    return d;
}

bool det_nonzero_random(const SymbolicMatrix& m, const PrimeField& f, std::uint64_t seed, int trials) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t nv = m.num_vars();
    for (int t = 0; t < trials; ++t) {
        Stream s(seed, "det-trial-" + std::to_string(t));
        std::vector<std::uint32_t> point(nv);
        for (auto& x : point) x = f.random(s);
        if (rank(evaluate(m, point, f), f) == m.rows()) return true;
    }
    return false;
}

SymbolicMatrix random_gq_lmatrix(const GQBlockStructure& s, Stream& rng) {
    GQPoset g(s.q);
    const std::size_t R = s.total_rows(), C = s.total_cols();
    std::vector<std::size_t> row_elem, col_elem;
    for (std::size_t k = g.size(); k-- > 0;) row_elem.insert(row_elem.end(), s.row_sizes[k], k);
    for (std::size_t k = 0; k < g.size(); ++k) col_elem.insert(col_elem.end(), s.col_sizes[k], k);
    SymbolicMatrix m(R, C);
    std::uint32_t fresh = static_cast<std::uint32_t>(R + C);
    for (std::size_t i = 0; i < R; ++i) {
        for (std::size_t j = 0; j < C; ++j) {
            if (!g.dominates(g.element(row_elem[i]), g.element(col_elem[j]))) continue;
            Entry e;
            e.lambda = 1 + rng.below(4);
            e.var = rng.below(2) ? static_cast<std::uint32_t>(i + j) : fresh++;
            m.at(i, j) = e;
        }
    }
    return m;
}

}  // namespace levelalg
