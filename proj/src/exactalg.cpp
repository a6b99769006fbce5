#include "levelalg/exactalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace levelalg {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p) || p >= (1u << 31)) throw std::invalid_argument("field characteristic must be a prime below 2^31");
}

std::uint32_t PrimeField::reduce(long long x) const {
    long long r = x % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
}

std::uint32_t PrimeField::add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
}

std::uint32_t PrimeField::sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }

std::uint32_t PrimeField::mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    if (a % p_ == 0) throw std::domain_error("inverse of zero");
    long long t = 0, nt = 1, r = p_, nr = a % p_;
    while (nr) {
        long long q = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - q * nt);
        std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    return reduce(t);
}

DenseMatrix DenseMatrix::transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

DenseMatrix DenseMatrix::stack(const DenseMatrix& top, const DenseMatrix& bottom) {
    if (top.cols_ != bottom.cols_) throw std::invalid_argument("stack: column counts differ");
    DenseMatrix s(top.rows_ + bottom.rows_, top.cols_);
    std::copy(top.a_.begin(), top.a_.end(), s.a_.begin());
    std::copy(bottom.a_.begin(), bottom.a_.end(), s.a_.begin() + static_cast<std::ptrdiff_t>(top.a_.size()));
    return s;
}

DenseMatrix sample_matrix(std::size_t rows, std::size_t cols, const PrimeField& f, std::uint64_t seed,
                          std::string_view label) {
    Stream s(seed, label);
    DenseMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = f.random(s);
    return m;
}

namespace {

// Finds a row at or below `from` with a nonzero in column c and moves it to `from`.
bool bring_pivot(DenseMatrix& m, std::size_t from, std::size_t c) {
    for (std::size_t i = from; i < m.rows(); ++i) {
        if (m(i, c) != 0) {
            if (i != from) std::swap_ranges(m.row(i), m.row(i) + m.cols(), m.row(from));
            return true;
        }
    }
    return false;
}

// x mod p for x < 2^32 and p < 2^16, with mu = floor(2^32 / p).
inline std::uint32_t barrett(std::uint64_t x, std::uint64_t p, std::uint64_t mu) {
    std::uint64_t r = x - ((x * mu) >> 32) * p;
    r = r >= p ? r - p : r;
    return static_cast<std::uint32_t>(r >= p ? r - p : r);
}

}  // namespace

std::size_t rank(DenseMatrix m, const PrimeField& f) {
    const std::size_t R = m.rows(), C = m.cols();
    const std::uint64_t p = f.p();
    const bool small = p < (1u << 16);
    const std::uint64_t mu = (std::uint64_t{1} << 32) / p;
    std::size_t rk = 0;
    for (std::size_t c = 0; c < C && rk < R; ++c) {
        if (!bring_pivot(m, rk, c)) continue;
        std::uint32_t* piv = m.row(rk);
        const std::uint32_t inv = f.inv(piv[c]);
        for (std::size_t k = c; k < C; ++k) piv[k] = f.mul(piv[k], inv);
        const std::size_t width = C - c;
        const std::size_t below = R - rk - 1;
#pragma omp parallel for schedule(static) if (below * width > (1u << 16))
        for (std::size_t i = rk + 1; i < R; ++i) {
            std::uint32_t* row = m.row(i);
            const std::uint64_t factor = row[c];
            if (factor == 0) continue;
            const std::uint64_t neg = p - factor;
            if (small) {
                for (std::size_t k = c; k < C; ++k) row[k] = barrett(row[k] + neg * piv[k], p, mu);
            } else {
                for (std::size_t k = c; k < C; ++k) row[k] = static_cast<std::uint32_t>((row[k] + neg * piv[k]) % p);
            }
        }
        ++rk;
    }
    return rk;
}

std::size_t rank_reference(DenseMatrix m, const PrimeField& f) {
    const std::size_t R = m.rows(), C = m.cols();
    const std::uint64_t p = f.p();
    std::size_t rk = 0;
    for (std::size_t c = 0; c < C && rk < R; ++c) {
        if (!bring_pivot(m, rk, c)) continue;
        const std::uint64_t a = m(rk, c);
        for (std::size_t i = rk + 1; i < R; ++i) {
            const std::uint64_t b = m(i, c);
            if (b == 0) continue;
            // row_i <- a * row_i - b * row_pivot
            for (std::size_t k = c; k < C; ++k)
                m(i, k) = static_cast<std::uint32_t>((a * m(i, k) + (p - b) * m(rk, k)) % p);
        }
        ++rk;
    }
    return rk;
}

}  // namespace levelalg
