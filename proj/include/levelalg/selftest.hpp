#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "levelalg/exactalg.hpp"
#include "levelalg/lmatrix.hpp"
#include "levelalg/rng.hpp"

namespace levelalg {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::size_t cases = 0;
    std::string detail;
};

// Random bounds with |G_Q| <= max_size.
std::vector<int> random_bounds(Stream& s, std::size_t max_size);
// Random square block structure of total size in [1, max_n] over G_Q.
GQBlockStructure random_square_blocks(const std::vector<int>& q, Stream& s, std::size_t max_n);

// Quick versions of the property checks: topset property, excess test against the
// exact determinant, closed-form counts, cropped against uncropped rank.
std::vector<CheckResult> run_selftest(std::uint64_t seed, const PrimeField& f = PrimeField());

}  // namespace levelalg
