#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "levelalg/apolarity.hpp"
#include "levelalg/catalog.hpp"
#include "levelalg/families.hpp"
#include "levelalg/gqposet.hpp"
#include "levelalg/lmatrix.hpp"
#include "levelalg/selftest.hpp"
#include "levelalg/serialize.hpp"

using namespace levelalg;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kVerdictFail = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::uint64_t seed = 1;
    std::uint32_t prime = kDefaultPrime;
    int retries = 3;
    std::string format = "json";
};

json load_json(const std::string& arg) {
    std::string text;
    if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
        text = arg;
    } else {
        std::ifstream in(arg);
        if (!in) throw UsageError("cannot read " + arg);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("malformed JSON: ") + e.what());
    }
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("not an integer list: " + s);
        }
    }
    return out;
}

std::pair<int, int> parse_range(const std::string& s, int j) {
    if (s.empty()) return {0, j};
    auto dots = s.find("..");
    if (dots == std::string::npos) throw UsageError("range must look like a..b");
    auto lo = parse_int_list(s.substr(0, dots)), hi = parse_int_list(s.substr(dots + 2));
    if (lo.size() != 1 || hi.size() != 1 || lo[0] > hi[0]) throw UsageError("bad range " + s);
    return {lo[0], hi[0]};
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(s));
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw UsageError("not a rational: " + s);
    }
}

void stamp(json& j, const Config& c) {
    j["prime"] = c.prime;
    j["seed"] = c.seed;
    j["version"] = kVersion;
}

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void emit(const json& report, const Config& c, const std::string& table_key = "") {
    if (c.format == "json") {
        std::cout << report.dump() << "\n";
    } else if (c.format == "pretty") {
        for (const auto& [k, v] : report.items()) std::cout << k << ": " << (v.is_structured() ? v.dump(2) : scalar_text(v)) << "\n";
    } else {
        // csv: a table keyed by degree when there is one, else key,value lines
        if (!table_key.empty() && report.contains(table_key)) {
            const json& t = report.at(table_key);
            std::vector<std::string> cols;
            for (const auto& [k, v] : t.items()) cols.push_back(k);
            for (std::size_t k = 0; k < cols.size(); ++k) std::cout << (k ? "," : "") << cols[k];
            std::cout << "\n";
            const std::size_t rows = cols.empty() ? 0 : t.at(cols[0]).size();
            for (std::size_t r = 0; r < rows; ++r) {
                for (std::size_t k = 0; k < cols.size(); ++k) std::cout << (k ? "," : "") << scalar_text(t.at(cols[k])[r]);
                std::cout << "\n";
            }
        } else {
            std::cout << "key,value\n";
            for (const auto& [k, v] : report.items()) std::cout << k << "," << (v.is_structured() ? v.dump() : scalar_text(v)) << "\n";
        }
    }
}

int cmd_hilbert(const Config& c, const std::string& input, const std::string& range) {
    PrimeField f(c.prime);
    HomogeneousSubspace w = subspace_from_json(load_json(input), f);
    auto [lo, hi] = parse_range(range, w.socle_degree());
    std::vector<int> degrees;
    for (int d = lo; d <= hi; ++d) degrees.push_back(d);
    json rep = {{"r", w.num_vars()}, {"j", w.socle_degree()}, {"h", hilbert_vector(w, lo, hi)}, {"degrees", degrees}};
    stamp(rep, c);
    json table = {{"d", degrees}, {"h", rep["h"]}};
    rep["table"] = table;
    if (c.format == "json") rep.erase("table");
    emit(rep, c, "table");
    return kOk;
}

json shape_json(const FamilyParams& p) {
    FamilyShape s = family_shape(p);
    return {{"r", s.r}, {"j", s.j}, {"P", s.p_bounds}, {"Q", s.q_bounds}, {"u", s.u}, {"delta", s.delta},
            {"drop", s.double_drop ? "double" : "single"}, {"i_f", s.i_f}};
}

int cmd_family(Config c, const std::string& action, const std::string& input) {
    json inst = load_json(input);
    if (inst.contains("seed")) c.seed = inst.at("seed").get<std::uint64_t>();
    FamilyParams p;
    try {
        p = family_from_json(inst);
    } catch (const json::exception& e) {
        throw UsageError(std::string("bad family instance: ") + e.what());
    }
    PrimeField f(c.prime);
    json rep = {{"instance", to_json(p)}};
    stamp(rep, c);
    if (action == "validate") {
        auto v = validate(p);
        rep["valid"] = v.empty();
        rep["violations"] = v;
        try {
            rep["shape"] = shape_json(p);
            rep["min_sufficient_s"] = min_sufficient_s(p);
            rep["type"] = expected_type(p);
        } catch (const std::exception&) {
        }
        emit(rep, c);
        return v.empty() ? kOk : kVerdictFail;
    }
    auto v = validate(p);
    if (!v.empty()) throw UsageError("invalid parameters: " + v.front());
    FamilyShape s = family_shape(p);
    if (static_cast<std::uint64_t>(s.j) >= f.p()) throw UsageError("prime must exceed j");
    if (action == "predict") {
        std::vector<int> deg;
        std::vector<std::uint64_t> h;
        for (int d = static_cast<int>(p.i); d <= s.i_f; ++d) {
            deg.push_back(d);
            h.push_back(predicted_h(p, d));
        }
        rep["degrees"] = deg;
        rep["predicted"] = h;
        rep["shape"] = shape_json(p);
        emit(rep, c, "");
        return kOk;
    }
    if (action == "verify") {
        DropReport d = verify_drop(p, c.seed, c.retries, f);
        rep["report"] = to_json(d);
        rep["table"] = {{"d", d.degrees}, {"measured", d.measured}, {"predicted", d.predicted}};
        if (c.format == "json") rep.erase("table");
        emit(rep, c, "table");
        return d.verdict == "mismatch" || d.verdict == "no_drop" ? kVerdictFail : kOk;
    }
    if (action == "type") {
        const std::size_t t = compute_type(p, c.seed, f);
        rep["type"] = t;
        rep["expected"] = expected_type(p);
        emit(rep, c);
        return t == expected_type(p) ? kOk : kVerdictFail;
    }
    throw UsageError("unknown family action " + action);
}

int cmd_catalog(const Config& c, int r, int t) {
    if (r < 1 || t < 1) throw UsageError("codim and type must be positive");
    json rep = to_json(existence_catalog(r, t));
    stamp(rep, c);
    emit(rep, c);
    return kOk;
}

int cmd_poset(const Config& c, const std::string& action, const std::string& qtext, const std::string& phi,
              int trials, const std::string& filter) {
    GQPoset g(parse_int_list(qtext));
    json rep = {{"q", g.bounds()}, {"size", g.size()}};
    stamp(rep, c);
    if (action == "topsets") {
        TopsetFilter tf = TopsetFilter::All;
        if (filter == "nonempty") tf = TopsetFilter::Nonempty;
        else if (filter == "proper") tf = TopsetFilter::NonemptyProper;
        else if (filter != "all") throw UsageError("filter must be all, nonempty or proper");
        json list = json::array();
        try {
            for (const auto& s : enumerate_topsets(g.order(), tf)) list.push_back(topset_json(g, s));
        } catch (const std::length_error& e) {
            throw UsageError(e.what());
        }
        rep["topsets"] = list;
        rep["count"] = list.size();
        emit(rep, c);
        return kOk;
    }
    if (action != "tpp") throw UsageError("unknown poset action " + action);
    std::vector<OrderPreservingFn> fns;
    if (phi == "random") {
        Stream s(c.seed, "phi");
        for (int k = 0; k < trials; ++k) fns.push_back(random_order_preserving(g.order(), s));
    } else {
        std::vector<Rational> vals;
        std::stringstream ss(phi);
        std::string item;
        while (std::getline(ss, item, ',')) vals.push_back(parse_rational(item));
        if (vals.size() != g.size()) throw UsageError("phi needs one value per element of G_Q");
        OrderPreservingFn fn(vals);
        if (!fn.preserves(g.order())) throw UsageError("phi is not order-preserving");
        if (fn.total() < 0) throw UsageError("phi has negative total");
        fns.push_back(fn);
    }
    int held = 0;
    bool agree = true;
    json witness;
    for (const auto& fn : fns) {
        PropertyVerdict v = check_tpp(g.order(), fn);
        if (v.holds) ++held;
        else if (witness.is_null()) witness = topset_json(g, *v.witness);
        agree = agree && check_tap(g.order(), fn).holds == check_tpp(g.order(), fn.centered()).holds;
    }
    const bool pass = held == static_cast<int>(fns.size()) && agree;
    rep["trials"] = fns.size();
    rep["tpp_held"] = held;
    rep["tap_matches_shifted_tpp"] = agree;
    rep["verdict"] = pass ? "pass" : "fail";
    if (!witness.is_null()) rep["witness"] = witness;
    emit(rep, c);
    return pass ? kOk : kVerdictFail;
}

int cmd_lmatrix(const Config& c, const std::string& input) {
    json j = load_json(input);
    SymbolicMatrix m = matrix_from_json(j);
    Classification cl = classify(m);
    json rep = {{"rows", m.rows()}, {"cols", m.cols()}, {"is_l_matrix", cl.is_l}, {"stuck_variables", cl.stuck}};
    stamp(rep, c);
    bool ok = cl.is_l;
    if (j.is_object() && j.contains("q")) {
        GQBlockStructure b{j.at("q").get<std::vector<int>>(), j.at("row_sizes").get<std::vector<std::size_t>>(),
                           j.at("col_sizes").get<std::vector<std::size_t>>()};
        PatternReport pr = verify_gq_pattern(m, b);
        rep["gq_pattern"] = pr.ok;
        if (!pr.ok) rep["pattern_detail"] = pr.detail;
        ok = ok && pr.ok;
        if (pr.ok && m.rows() == m.cols()) rep["excess_test_nonsingular"] = excess_test(b);
    }
    if (m.rows() == m.cols() && m.rows() > 0) {
        if (m.rows() <= kExactDetLimit) {
            DetResult d = det_exact(m);
            rep["det_nonzero"] = d.nonzero;
            rep["det_terms"] = d.terms;
            rep["det_method"] = "exact";
        } else {
            rep["det_nonzero"] = det_nonzero_random(m, PrimeField(c.prime), c.seed);
            rep["det_method"] = "random_evaluation";
        }
    }
    emit(rep, c);
    return ok ? kOk : kVerdictFail;
}

int cmd_selftest(const Config& c) {
    auto results = run_selftest(c.seed, PrimeField(c.prime));
    json checks = json::array();
    bool all = true;
    for (const auto& r : results) {
        checks.push_back({{"name", r.name}, {"pass", r.pass}, {"cases", r.cases}, {"detail", r.detail}});
        all = all && r.pass;
    }
    json rep = {{"checks", checks}, {"verdict", all ? "pass" : "fail"}};
    stamp(rep, c);
    emit(rep, c);
    return all ? kOk : kVerdictFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hilbert functions of graded Artinian level algebras via inverse systems"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    if (const char* env = std::getenv("APOLARITY_PRIME")) {
        try {
            cfg.prime = static_cast<std::uint32_t>(std::stoul(env));
        } catch (const std::exception&) {
            std::cerr << "error: APOLARITY_PRIME is not a number\n";
            return kUsage;
        }
    }
    app.add_option("--seed", cfg.seed, "master seed");
    app.add_option("--prime", cfg.prime, "field characteristic");
    app.add_option("--retries", cfg.retries, "attempts per drop verification")->check(CLI::NonNegativeNumber);
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv", "pretty"}));

    std::string input, range, action, qtext, phi = "random", filter = "all";
    int codim = 0, type = 0, trials = 100;

    auto* hil = app.add_subcommand("hilbert", "Hilbert function of a subspace");
    hil->add_option("subspace", input, "subspace JSON file or inline JSON")->required();
    hil->add_option("--range", range, "degrees a..b");

    auto* fam = app.add_subcommand("family", "family instances");
    fam->add_option("action", action, "validate|predict|verify|type")
        ->required()
        ->check(CLI::IsMember({"validate", "predict", "verify", "type"}));
    fam->add_option("instance", input, "instance JSON file or inline JSON")->required();

    auto* cat = app.add_subcommand("catalog", "existence of non-unimodal level algebras");
    cat->add_option("--codim", codim)->required();
    cat->add_option("--type", type)->required();

    auto* pos = app.add_subcommand("poset", "topsets of G_Q");
    pos->add_option("action", action, "tpp|topsets")->required()->check(CLI::IsMember({"tpp", "topsets"}));
    pos->add_option("--q", qtext, "bounds Q1,Q2,...")->required();
    pos->add_option("--phi", phi, "'random' or comma-separated values in ascending lex order");
    pos->add_option("--trials", trials)->check(CLI::PositiveNumber);
    pos->add_option("--filter", filter, "all|nonempty|proper");

    auto* lm = app.add_subcommand("lmatrix", "symbolic matrix checks");
    lm->add_option("action", action)->required()->check(CLI::IsMember({"check"}));
    lm->add_option("matrix", input, "matrix JSON file or inline JSON")->required();

    auto* st = app.add_subcommand("selftest", "run the property checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (!is_prime(cfg.prime)) throw UsageError("--prime must be prime");
        if (hil->parsed()) return cmd_hilbert(cfg, input, range);
        if (fam->parsed()) return cmd_family(cfg, action, input);
        if (cat->parsed()) return cmd_catalog(cfg, codim, type);
        if (pos->parsed()) return cmd_poset(cfg, action, qtext, phi, trials, filter);
        if (lm->parsed()) return cmd_lmatrix(cfg, input);
        if (st->parsed()) return cmd_selftest(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
