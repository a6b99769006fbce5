#include "levelalg/catalog.hpp"

#include <stdexcept>

namespace levelalg {

std::string status_name(CatalogStatus s) {
    switch (s) {
        case CatalogStatus::UnimodalForced: return "unimodal_forced";
        case CatalogStatus::Unknown: return "unknown";
        case CatalogStatus::ExistsNonunimodal: return "exists_nonunimodal";
    }
    return "?";
}

int Recipe::codim() const {
    switch (kind) {
        case Kind::Family: return family_shape(family).r;
        case Kind::Bernstein: return 5;
        case Kind::Extension: return base->codim() + added_variables;
    }
    return 0;
}

int Recipe::type() const {
    switch (kind) {
        case Kind::Family: return static_cast<int>(expected_type(family));
        case Kind::Bernstein: return static_cast<int>(bernstein);
        case Kind::Extension: return base->type() + (separate ? added_variables : 0);
    }
    return 0;
}

int Recipe::socle_degree() const {
    switch (kind) {
        case Kind::Family: return family_shape(family).j;
        case Kind::Bernstein: return 16;
        case Kind::Extension: return base->socle_degree();
    }
    return 0;
}

namespace {

Recipe family_recipe(FamilyParams p) {
    Recipe r;
    r.kind = Recipe::Kind::Family;
    r.family = p;
    return r;
}

Recipe bernstein_recipe(int t) {
    Recipe r;
    r.kind = Recipe::Kind::Bernstein;
    r.bernstein = static_cast<BernsteinVariant>(t);
    return r;
}

Recipe extension(Recipe base, int k, bool separate) {
    if (k == 0) return base;
    Recipe r;
    r.kind = Recipe::Kind::Extension;
    r.base = std::make_shared<const Recipe>(std::move(base));
    r.added_variables = k;
    r.separate = separate;
    return r;
}

// Smallest parameter in the constructive range that passes validation with s = t - 1.
template <class Make>
Recipe first_valid(long long from, Make make) {
    for (long long k = from;; ++k) {
        FamilyParams p = make(k);
        if (validate(p).empty()) return family_recipe(p);
    }
}

Recipe codim3(int t) {
    return first_valid(21, [t](long long a) {
        // keep s = t - 1 within m_P(3a) = a(5a+3)/2
        if (a * (5 * a + 3) / 2 < t) return FamilyParams{FamilyKind::F1, a, 0, 0, 2 * a, -1};
        return FamilyParams{FamilyKind::F1, a, 0, 0, 2 * a, t - 1};
    });
}

Recipe codim4(int t) {
    return first_valid(4, [t](long long a) { return FamilyParams{FamilyKind::G1, a, a, 0, a * a + 1, t - 1}; });
}

Recipe codim5(int t) {
    if (t <= 2) return bernstein_recipe(t);
    return first_valid(3, [t](long long a) { return FamilyParams{FamilyKind::H1, a, a, a, a * a * a, t - 1}; });
}

}  // namespace

CatalogEntry existence_catalog(int r, int t) {
    if (r < 1 || t < 1) throw std::invalid_argument("catalog needs r >= 1 and t >= 1");
    CatalogEntry c;
    if (r <= 2 || (r == 3 && t == 1)) {
        c.status = CatalogStatus::UnimodalForced;
        return c;
    }
    if ((r == 3 && t <= 4) || (r == 4 && t <= 2)) {
        c.status = CatalogStatus::Unknown;
        return c;
    }
    c.status = CatalogStatus::ExistsNonunimodal;
    if (r == 3) {
        c.recipe = codim3(t);
        if (t == 5) c.smallest_known_socle_degree = 63;
    } else if (r == 4) {
        c.recipe = codim4(t);
        FamilyParams small{FamilyKind::G1, 3, 4, 0, 13, t - 1};
        if (validate(small).empty()) c.alternates.push_back(family_recipe(small));
        if (t == 3) c.smallest_known_socle_degree = 25;
    } else if (r == 5) {
        c.recipe = codim5(t);
        if (t == 3 || t == 4) c.alternates.push_back(bernstein_recipe(t));
        FamilyParams small{FamilyKind::H1, 2, 2, 3, 12, t - 1};
        if (t >= 3 && validate(small).empty()) c.alternates.push_back(family_recipe(small));
        if (t == 3) c.smallest_known_socle_degree = 16;
    } else {
        const int extra = r - 5;
        if (t - 1 >= extra) {
            c.recipe = extension(codim5(t - extra), extra, true);
        } else {
            // Type 1 in codimension r - (t - 1), then one new generator per remaining variable.
            Recipe one = extension(bernstein_recipe(1), extra - (t - 1), false);
            c.recipe = extension(one, t - 1, true);
        }
    }
    return c;
}

HomogeneousSubspace realize(const Recipe& rec, std::uint64_t seed, const PrimeField& f) {
    switch (rec.kind) {
        case Recipe::Kind::Family: return construct(rec.family, seed, f);
        case Recipe::Kind::Bernstein: return bernstein(rec.bernstein, seed, f);
        case Recipe::Kind::Extension: return extend_codim(realize(*rec.base, seed, f), rec.added_variables, rec.separate);
    }
    throw std::logic_error("unknown recipe kind");
}

}  // namespace levelalg
