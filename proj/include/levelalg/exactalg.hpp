#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "levelalg/rng.hpp"

namespace levelalg {

inline constexpr std::uint32_t kDefaultPrime = 32749;

bool is_prime(std::uint64_t n);

class PrimeField {
public:
    explicit PrimeField(std::uint32_t p = kDefaultPrime);

    std::uint32_t p() const { return p_; }
    std::uint32_t reduce(long long x) const;
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t random(Stream& s) const { return static_cast<std::uint32_t>(s.below(p_)); }

    bool operator==(const PrimeField&) const = default;

private:
    std::uint32_t p_;
};

// Row-major matrix over GF(p); entries always lie in [0, p).
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    std::uint32_t operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    std::uint32_t* row(std::size_t i) { return a_.data() + i * cols_; }
    const std::uint32_t* row(std::size_t i) const { return a_.data() + i * cols_; }

    DenseMatrix transpose() const;
    // Vertical concatenation; column counts must agree.
    static DenseMatrix stack(const DenseMatrix& top, const DenseMatrix& bottom);

    bool operator==(const DenseMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint32_t> a_;
};

DenseMatrix sample_matrix(std::size_t rows, std::size_t cols, const PrimeField& f, std::uint64_t seed,
                          std::string_view label);

// Rank by elimination; the matrix is taken by value and destroyed.
// rank() uses OpenMP over rows and a reduction tuned for p < 2^16.
std::size_t rank(DenseMatrix m, const PrimeField& f);
// Serial fraction-free elimination, kept as the reference for rank().
std::size_t rank_reference(DenseMatrix m, const PrimeField& f);

}  // namespace levelalg
