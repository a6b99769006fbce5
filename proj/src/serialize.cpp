#include "levelalg/serialize.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace levelalg {

json to_json(const MultiIndex& m) { return json(m.exponents()); }

MultiIndex multiindex_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("multi-index must be an array of integers");
    std::vector<int> e;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw std::invalid_argument("multi-index entries must be integers");
        e.push_back(x.get<int>());
    }
    return MultiIndex(std::move(e));
}

json to_json(const Constraint& c) { return {{"bounds", c.bounds()}, {"r", c.num_vars()}, {"j", c.socle_degree()}}; }

Constraint constraint_from_json(const json& j) {
    return Constraint(j.at("r").get<int>(), j.at("j").get<int>(), j.value("bounds", std::vector<int>{}));
}

json topset_json(const GQPoset& g, const ElementSet& s) {
    json out = json::array();
    for (const auto& m : g.members(s)) out.push_back(to_json(m));
    return out;
}

json to_json(const SymbolicMatrix& m) {
    json grid = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) {
            const Entry& e = m.at(i, k);
            if (e.nonzero())
                row.push_back(json::array({e.lambda, e.var}));
            else
                row.push_back(0);
        }
        grid.push_back(row);
    }
    return {{"entries", grid}};
}

SymbolicMatrix matrix_from_json(const json& j) {
    const json& grid = j.is_object() ? j.at("entries") : j;
    if (!grid.is_array()) throw std::invalid_argument("matrix must be a grid");
    const std::size_t rows = grid.size();
    const std::size_t cols = rows ? grid[0].size() : 0;
    SymbolicMatrix m(rows, cols);
    std::map<std::string, std::uint32_t> names;
    std::uint32_t next_name = 1u << 30;
    for (std::size_t i = 0; i < rows; ++i) {
        if (!grid[i].is_array() || grid[i].size() != cols) throw std::invalid_argument("matrix rows must have equal length");
        for (std::size_t k = 0; k < cols; ++k) {
            const json& cell = grid[i][k];
            if (cell.is_number_integer() && cell.get<long long>() == 0) continue;
            if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number_integer())
                throw std::invalid_argument("matrix cells must be 0 or [lambda, var]");
            const long long lambda = cell[0].get<long long>();
            if (lambda <= 0) throw std::invalid_argument("lambda must be a positive integer");
            Entry e;
            e.lambda = static_cast<std::uint64_t>(lambda);
            if (cell[1].is_number_integer()) {
                const long long v = cell[1].get<long long>();
                if (v < 0 || v >= (1LL << 30)) throw std::invalid_argument("variable id out of range");
                e.var = static_cast<std::uint32_t>(v);
            } else if (cell[1].is_string()) {
                auto [it, fresh] = names.emplace(cell[1].get<std::string>(), next_name);
                if (fresh) ++next_name;
                e.var = it->second;
            } else {
                throw std::invalid_argument("variable must be an integer or a name");
            }
            m.at(i, k) = e;
        }
    }
    return m;
}

HomogeneousSubspace subspace_from_json(const json& j, const PrimeField& f) {
    const int r = j.at("r").get<int>();
    const int deg = j.at("j").get<int>();
    Constraint c = j.contains("constraint") ? constraint_from_json(j.at("constraint")) : Constraint::none(r, deg);
    if (c.num_vars() != r || c.socle_degree() != deg) throw std::invalid_argument("constraint disagrees with r or j");
    HomogeneousSubspace w(c, f);
    for (const auto& g : j.at("generators")) {
        if (!g.is_array()) throw std::invalid_argument("generator must be an array");
        const bool sparse = !g.empty() && g[0].is_object();
        if (sparse) {
            std::vector<std::pair<MultiIndex, long long>> terms;
            for (const auto& t : g) terms.emplace_back(multiindex_from_json(t.at("monomial")), t.at("coeff").get<long long>());
            w.add_terms(terms);
        } else {
            std::vector<std::uint32_t> coeffs;
            for (const auto& x : g) coeffs.push_back(f.reduce(x.get<long long>()));
            w.add_generator(std::move(coeffs));
        }
    }
    return w;
}

json to_json(const HomogeneousSubspace& w) {
    json gens = json::array();
    for (std::size_t g = 0; g < w.num_generators(); ++g) {
        json terms = json::array();
        for (std::size_t t = 0; t < w.basis().size(); ++t)
            if (w.generator(g)[t]) terms.push_back({{"coeff", w.generator(g)[t]}, {"monomial", to_json(w.basis()[t])}});
        gens.push_back(terms);
    }
    return {{"constraint", to_json(w.constraint())}, {"generators", gens}, {"j", w.socle_degree()}, {"r", w.num_vars()}};
}

FamilyParams family_from_json(const json& j) {
    auto kind = parse_family(j.at("family").get<std::string>());
    if (!kind) throw std::invalid_argument("unknown family " + j.at("family").dump());
    FamilyParams p;
    p.kind = *kind;
    p.a = j.at("a").get<long long>();
    const bool needs_b = *kind != FamilyKind::F1 && *kind != FamilyKind::F2;
    if (needs_b) p.b = j.at("b").get<long long>();
    if (*kind == FamilyKind::H1) p.c = j.at("c").get<long long>();
    p.i = j.at("i").get<long long>();
    p.s = j.at("s").get<long long>();
    return p;
}

json to_json(const FamilyParams& p) {
    json j = {{"family", family_name(p.kind)}, {"a", p.a}, {"i", p.i}, {"s", p.s}};
    if (p.kind != FamilyKind::F1 && p.kind != FamilyKind::F2) j["b"] = p.b;
    if (p.kind == FamilyKind::H1) j["c"] = p.c;
    return j;
}

json to_json(const DropReport& r) {
    json attempts = json::array();
    for (const auto& a : r.attempts) attempts.push_back({{"measured", a.measured}, {"seed", a.seed}});
    return {{"attempts", attempts}, {"degrees", r.degrees}, {"delta_e", r.delta_e}, {"delta_f", r.delta_f},
            {"measured", r.measured}, {"predicted", r.predicted}, {"verdict", r.verdict}};
}

json to_json(const Recipe& r) {
    json j = {{"codim", r.codim()}, {"socle_degree", r.socle_degree()}, {"type", r.type()}};
    switch (r.kind) {
        case Recipe::Kind::Family:
            j["construction"] = "family";
            j["params"] = to_json(r.family);
            break;
        case Recipe::Kind::Bernstein:
            j["construction"] = "bernstein_t" + std::to_string(static_cast<int>(r.bernstein));
            break;
        case Recipe::Kind::Extension:
            j["construction"] = r.separate ? "extend_codim" : "extend_codim_summed";
            j["added_variables"] = r.added_variables;
            j["base"] = to_json(*r.base);
            break;
    }
    return j;
}

json to_json(const CatalogEntry& c) {
    json j = {{"status", status_name(c.status)}};
    if (c.recipe) j["recipe"] = to_json(*c.recipe);
    if (!c.alternates.empty()) {
        json alts = json::array();
        for (const auto& a : c.alternates) alts.push_back(to_json(a));
        j["alternates"] = alts;
    }
    if (c.smallest_known_socle_degree) j["smallest_known_socle_degree"] = *c.smallest_known_socle_degree;
    return j;
}

}  // namespace levelalg
