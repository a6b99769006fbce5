#pragma once

#include <cstdint>
#include <json.hpp>
#include <string>

#include "levelalg/catalog.hpp"
#include "levelalg/families.hpp"
#include "levelalg/gqposet.hpp"
#include "levelalg/lmatrix.hpp"

namespace levelalg {

using json = nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";

json to_json(const MultiIndex& m);
MultiIndex multiindex_from_json(const json& j);

json to_json(const Constraint& c);
Constraint constraint_from_json(const json& j);

// Members in ascending lex order.
json topset_json(const GQPoset& g, const ElementSet& s);

json to_json(const SymbolicMatrix& m);
// Accepts a bare grid or {"entries": grid}; cells are 0 or [lambda, var] with var an integer or a name.
SymbolicMatrix matrix_from_json(const json& j);

// {"r", "j", "constraint"?, "generators": [...]}; each generator is a dense coefficient
// list over the constrained monomials (descending lex) or a list of {"monomial", "coeff"}.
HomogeneousSubspace subspace_from_json(const json& j, const PrimeField& f);
json to_json(const HomogeneousSubspace& w);

FamilyParams family_from_json(const json& j);
json to_json(const FamilyParams& p);
json to_json(const DropReport& r);
json to_json(const Recipe& r);
json to_json(const CatalogEntry& c);

}  // namespace levelalg
