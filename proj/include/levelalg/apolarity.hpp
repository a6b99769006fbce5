#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "levelalg/exactalg.hpp"
#include "levelalg/lmatrix.hpp"
#include "levelalg/multiindex.hpp"
#include "levelalg/rng.hpp"

namespace levelalg {

// Span of degree-j forms whose monomials all satisfy the constraint.
// Generators are stored densely over the constrained degree-j monomials.
class HomogeneousSubspace {
public:
    HomogeneousSubspace(Constraint c, PrimeField f);

    int num_vars() const { return c_.num_vars(); }
    int socle_degree() const { return c_.socle_degree(); }
    const Constraint& constraint() const { return c_; }
    const PrimeField& field() const { return f_; }
    const MonomialBasis& basis() const { return basis_; }

    std::size_t num_generators() const { return gens_.size(); }
    const std::vector<std::uint32_t>& generator(std::size_t i) const { return gens_[i]; }

    void add_generator(std::vector<std::uint32_t> coeffs);
    // Throws when a monomial has the wrong degree or breaks the constraint.
    void add_terms(const std::vector<std::pair<MultiIndex, long long>>& terms);
    // Appends s generators with uniform coefficients on every admitted monomial.
    void add_random(std::size_t s, Stream& rng);

    // Same generators expressed over a weaker constraint.
    HomogeneousSubspace relaxed(const Constraint& wider) const;
    // Generators of both, over the weakest common constraint.
    static HomogeneousSubspace join(const HomogeneousSubspace& a, const HomogeneousSubspace& b);

private:
    Constraint c_;
    PrimeField f_;
    MonomialBasis basis_;
    std::vector<std::vector<std::uint32_t>> gens_;
};

// prod_k J_k (J_k - 1) ... (J_k - E_k + 1); zero when E does not divide J.
std::uint64_t derivative_coefficient(const MultiIndex& e, const MultiIndex& jj);

// X^E acting on generator i; result indexed by the constrained monomials of degree j - |E|.
std::vector<std::uint32_t> apply_derivative(const HomogeneousSubspace& w, std::size_t i, const MultiIndex& e);

struct MatrixLayout {
    std::vector<std::pair<MultiIndex, std::size_t>> rows;  // (E, generator), E descending then generator
    std::vector<MultiIndex> cols;                          // D descending
};

// Rows X^E f_i over |E| = j - d, columns the degree-d monomials. The cropped form
// keeps only E and D satisfying the constraint.
MatrixLayout derivative_layout(const Constraint& c, std::size_t s, int d, bool cropped);
// Generic generators: z_{iJ} gets the id i * |M_Q(j)| + position of J.
SymbolicMatrix build_symbolic(const Constraint& c, std::size_t s, int d, bool cropped);
DenseMatrix build_dense(const HomogeneousSubspace& w, int d, bool cropped);

// Row block I = (E_1..E_n) and column block I = (Q_1 - D_1, ..., Q_n - D_n).
GQBlockStructure measured_blocks(const Constraint& c, std::size_t s, int d);
// Block sizes r_I, c_I from the counting formula.
std::pair<std::uint64_t, std::uint64_t> block_size_count(const Constraint& c, int d, std::size_t s, const MultiIndex& i);
GQBlockStructure standard_blocks(const Constraint& c, std::size_t s, int d);

// s * m_Q(j - d) >= m_Q(d): the cropped matrix of s generic forms has full column rank.
bool max_rank_guaranteed(const Constraint& c, int d, std::size_t s);

std::size_t hilbert_value(const HomogeneousSubspace& w, int d);
// h(lo..hi); degrees outside [0, j] give 0.
std::vector<std::size_t> hilbert_vector(const HomogeneousSubspace& w, int lo, int hi);
std::size_t sum_space_dimension(const HomogeneousSubspace& v, const HomogeneousSubspace& w, int d);

}  // namespace levelalg
