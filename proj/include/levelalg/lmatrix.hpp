#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "levelalg/exactalg.hpp"
#include "levelalg/gqposet.hpp"
#include "levelalg/rng.hpp"

namespace levelalg {

// An entry is zero or lambda * z_var with lambda a positive integer.
struct Entry {
    std::uint64_t lambda = 0;
    std::uint32_t var = 0;
    bool nonzero() const { return lambda != 0; }
    bool operator==(const Entry&) const = default;
};

class SymbolicMatrix {
public:
    SymbolicMatrix() = default;
    SymbolicMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Entry& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Entry& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    // One more than the largest variable id in use.
    std::size_t num_vars() const;

    SymbolicMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
    bool operator==(const SymbolicMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Entry> e_;
};

struct Classification {
    bool is_l = true;
    std::vector<std::uint32_t> stuck;  // variables that do not move left
};

// A variable moves left when a lower occurrence always sits strictly to the left.
bool moves_left(const SymbolicMatrix& m, std::uint32_t var);
Classification classify(const SymbolicMatrix& m);

// Block sizes per element of G_Q, indexed as in GQPoset (ascending lex).
// Block rows run in descending lex order, block columns in ascending lex order.
struct GQBlockStructure {
    std::vector<int> q;
    std::vector<std::size_t> row_sizes;
    std::vector<std::size_t> col_sizes;

    std::size_t total_rows() const;
    std::size_t total_cols() const;
    std::vector<long long> excess() const;
};

struct PatternReport {
    bool ok = true;
    std::string detail;
};

PatternReport verify_gq_pattern(const SymbolicMatrix& m, const GQBlockStructure& s);

enum class ExcessForm {
    ProperTopsets,          // every nonempty proper topset has sum >= 0
    TopsetsWithoutBottom,   // every nonempty topset of G_Q minus Q
    ProperBottomsets,       // every nonempty proper bottomset has sum <= 0
    BottomsetsWithoutTop,   // every nonempty bottomset of G_Q minus 0
};

// Excess test for a square G_Q-pattern L-matrix.
bool excess_test(const GQBlockStructure& s, ExcessForm form = ExcessForm::ProperTopsets);

struct DetResult {
    bool nonzero = false;
    std::size_t terms = 0;
};

inline constexpr std::size_t kExactDetLimit = 7;

// Symbolic expansion over integer polynomials; square matrices up to 7x7.
DetResult det_exact(const SymbolicMatrix& m);
// Nonsingular at some random point in `trials` attempts.
bool det_nonzero_random(const SymbolicMatrix& m, const PrimeField& f, std::uint64_t seed, int trials = 3);

DenseMatrix evaluate(const SymbolicMatrix& m, const std::vector<std::uint32_t>& point, const PrimeField& f);

// Square or rectangular matrix with the G_Q pattern for the given block sizes.
// Variables are either fresh or shared along anti-diagonals, so every variable moves left.
SymbolicMatrix random_gq_lmatrix(const GQBlockStructure& s, Stream& rng);

}  // namespace levelalg
