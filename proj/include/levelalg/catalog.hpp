#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "levelalg/families.hpp"

namespace levelalg {

enum class CatalogStatus { UnimodalForced, Unknown, ExistsNonunimodal };
std::string status_name(CatalogStatus s);

// How to build a non-unimodal level algebra of a given codimension and type.
struct Recipe {
    enum class Kind { Family, Bernstein, Extension } kind = Kind::Family;
    FamilyParams family;
    BernsteinVariant bernstein = BernsteinVariant::T1;
    std::shared_ptr<const Recipe> base;  // for extensions
    int added_variables = 0;
    bool separate = true;                // new monomials as new generators, or summed into one

    int codim() const;
    int type() const;
    int socle_degree() const;
};

struct CatalogEntry {
    CatalogStatus status = CatalogStatus::Unknown;
    std::optional<Recipe> recipe;
    std::vector<Recipe> alternates;
    std::optional<int> smallest_known_socle_degree;
};

CatalogEntry existence_catalog(int r, int t);
HomogeneousSubspace realize(const Recipe& rec, std::uint64_t seed, const PrimeField& f = PrimeField());

}  // namespace levelalg
