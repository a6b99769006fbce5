#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "levelalg/apolarity.hpp"

namespace levelalg {

enum class FamilyKind { F1, F2, G1, G2, G3, H1 };

std::string family_name(FamilyKind k);
std::optional<FamilyKind> parse_family(const std::string& name);

struct FamilyParams {
    FamilyKind kind = FamilyKind::F1;
    long long a = 0, b = 0, c = 0;
    long long i = 0;
    long long s = 0;
};

// Quantities fixed by the family and its parameters.
struct FamilyShape {
    int r = 0;
    int j = 0;
    std::vector<int> p_bounds;  // support of the s sampled forms
    std::vector<int> q_bounds;  // support of the u extra forms
    int u = 0;
    long long delta = 0;        // a, ab or abc
    bool double_drop = false;
    int i_f = 0;

    Constraint p() const { return Constraint(r, j, p_bounds); }
    Constraint q() const { return Constraint(r, j, q_bounds); }
};

// Largest m with C(m+1, 2) < n.
long long triangular_floor(long long n);
bool is_triangular(long long n);
// Smallest i satisfying the F2 lower bound, in exact integer arithmetic.
long long f2_min_i(long long a);

// Violated constraints; empty when the parameters are valid.
std::vector<std::string> validate(const FamilyParams& p);
// Shape of the family; throws std::invalid_argument when the shape parameters are unusable.
FamilyShape family_shape(const FamilyParams& p);

// ceil(m_P(i_f) / m_P(j - i_f)); ignores s.
long long min_sufficient_s(const FamilyParams& p);
// The per-family closed form of the same bound, where one is known.
std::optional<long long> closed_form_s(const FamilyParams& p);

std::uint64_t predicted_e_part(const FamilyParams& p, int d);
std::uint64_t predicted_f_part(const FamilyParams& p, int d);
// Throws std::out_of_range outside [i, i_f].
std::uint64_t predicted_h(const FamilyParams& p, int d);

std::uint64_t expected_type(const FamilyParams& p);

HomogeneousSubspace construct(const FamilyParams& p, std::uint64_t seed, const PrimeField& f = PrimeField());

struct DropAttempt {
    std::uint64_t seed = 0;
    std::vector<std::size_t> measured;
};

struct DropReport {
    std::vector<int> degrees;
    std::vector<std::size_t> measured;
    std::vector<std::uint64_t> predicted;
    std::vector<long long> delta_e;  // h_E(d+1) - h_E(d)
    std::vector<long long> delta_f;  // h_F(d+1) - h_F(d)
    std::vector<DropAttempt> attempts;
    std::string verdict;             // single_drop, double_drop or mismatch
};

std::string drop_shape(const std::vector<std::size_t>& h, bool double_drop);

// Up to `attempts` seeds; the first is `seed`, later ones derive from it.
DropReport verify_drop(const FamilyParams& p, std::uint64_t seed, int attempts = 3, const PrimeField& f = PrimeField());
std::uint64_t attempt_seed(std::uint64_t seed, int attempt);

std::size_t compute_type(const FamilyParams& p, std::uint64_t seed, const PrimeField& f = PrimeField());

// Special constructions from the known five-variable Gorenstein example.
enum class BernsteinVariant { T1 = 1, T2, T3, T4 };
HomogeneousSubspace bernstein(BernsteinVariant v, std::uint64_t seed, const PrimeField& f = PrimeField());
extern const std::vector<std::size_t> kBernsteinH;

// Adds k variables. Separate: each x_{r+t}^j becomes a new generator.
// Otherwise all of them are added to the first generator.
HomogeneousSubspace extend_codim(const HomogeneousSubspace& w, int k, bool separate = true);

}  // namespace levelalg
