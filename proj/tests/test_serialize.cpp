#include <doctest.h>

#include <stdexcept>

#include "levelalg/serialize.hpp"

using namespace levelalg;

TEST_SUITE("serialize") {
    TEST_CASE("multi-indices and constraints round-trip") {
        MultiIndex m{3, 0, 2};
        CHECK(multiindex_from_json(to_json(m)) == m);
        CHECK_THROWS_AS(multiindex_from_json(json::parse(R"([1, "x"])")), std::invalid_argument);
        Constraint c(4, 9, {2, 3});
        CHECK(constraint_from_json(to_json(c)) == c);
        CHECK(constraint_from_json(json::parse(R"({"r":3,"j":5})")) == Constraint::none(3, 5));
    }

    TEST_CASE("matrices round-trip and accept named variables") {
        SymbolicMatrix m(2, 2);
        m.at(0, 1) = Entry{2, 7};
        m.at(1, 0) = Entry{1, 7};
        CHECK(matrix_from_json(to_json(m)) == m);
        CHECK(matrix_from_json(to_json(m).at("entries")) == m);
        SymbolicMatrix named = matrix_from_json(json::parse(R"([[0, [1, "a"]], [[3, "a"], [1, "b"]]])"));
        CHECK(named.at(0, 1).var == named.at(1, 0).var);
        CHECK(named.at(1, 1).var != named.at(1, 0).var);
        CHECK(named.at(1, 0).lambda == 3);
        CHECK_THROWS_AS(matrix_from_json(json::parse(R"([[0, 1]])")), std::invalid_argument);
        CHECK_THROWS_AS(matrix_from_json(json::parse(R"([[0], [0, 0]])")), std::invalid_argument);
        CHECK_THROWS_AS(matrix_from_json(json::parse(R"([[[0, 1]]])")), std::invalid_argument);
    }

    TEST_CASE("subspaces in dense and sparse form") {
        PrimeField f;
        json sparse = json::parse(R"({"r":2,"j":2,"generators":[[{"monomial":[1,1],"coeff":1}]]})");
        HomogeneousSubspace w = subspace_from_json(sparse, f);
        CHECK(w.num_generators() == 1);
        CHECK(hilbert_vector(w, 0, 2) == std::vector<std::size_t>{1, 2, 1});
        // dense coefficients follow the descending order x^2, xy, y^2
        json dense = json::parse(R"({"r":2,"j":2,"generators":[[0,1,0]]})");
        CHECK(subspace_from_json(dense, f).generator(0) == w.generator(0));
        HomogeneousSubspace back = subspace_from_json(to_json(w), f);
        CHECK(back.generator(0) == w.generator(0));
        CHECK(back.constraint() == w.constraint());
        json neg = json::parse(R"({"r":1,"j":1,"generators":[[-1]]})");
        CHECK(subspace_from_json(neg, f).generator(0)[0] == f.p() - 1);
        json bad = json::parse(R"({"r":2,"j":2,"constraint":{"r":2,"j":2,"bounds":[0]},"generators":[[{"monomial":[1,1],"coeff":1}]]})");
        CHECK_THROWS_AS(subspace_from_json(bad, f), std::invalid_argument);
        json mismatch = json::parse(R"({"r":2,"j":3,"constraint":{"r":2,"j":2},"generators":[]})");
        CHECK_THROWS_AS(subspace_from_json(mismatch, f), std::invalid_argument);
    }

    TEST_CASE("family instances round-trip") {
        for (const char* text : {R"({"family":"F1","a":21,"i":42,"s":4})", R"({"family":"G3","a":4,"b":4,"i":8,"s":7})",
                                 R"({"family":"H1","a":2,"b":2,"c":3,"i":12,"s":2})"}) {
            FamilyParams p = family_from_json(json::parse(text));
            CHECK(to_json(p) == json::parse(text));
        }
        CHECK_THROWS(family_from_json(json::parse(R"({"family":"X1","a":1,"i":1,"s":1})")));
        CHECK_THROWS(family_from_json(json::parse(R"({"family":"G1","a":3,"i":13,"s":2})")));
    }

    TEST_CASE("serialization has sorted keys and is repeatable") {
        FamilyParams g3{FamilyKind::G3, 4, 4, 0, 8, 7};
        DropReport r = verify_drop(g3, 9);
        const std::string a = to_json(r).dump();
        CHECK(a == to_json(verify_drop(g3, 9)).dump());
        CHECK(a.find("\"attempts\"") < a.find("\"degrees\""));
        CHECK(a.find("\"seed\":9") != std::string::npos);
        CHECK(a.find('.') == std::string::npos);
    }

    TEST_CASE("every attempt seed is reported") {
        DropReport r;
        r.attempts = {{5, {1, 2}}, {attempt_seed(5, 1), {1, 3}}};
        r.verdict = "mismatch";
        json j = to_json(r);
        REQUIRE(j.at("attempts").size() == 2);
        CHECK(j["attempts"][0]["seed"] == 5);
        CHECK(j["attempts"][1]["seed"] == attempt_seed(5, 1));
    }

    TEST_CASE("catalog entries") {
        json unknown = to_json(existence_catalog(3, 4));
        CHECK(unknown == json::parse(R"({"status":"unknown"})"));
        json five = to_json(existence_catalog(3, 5));
        CHECK(five["status"] == "exists_nonunimodal");
        CHECK(five["recipe"]["params"] == json::parse(R"({"family":"F1","a":21,"i":42,"s":4})"));
        CHECK(five["smallest_known_socle_degree"] == 63);
        json seven = to_json(existence_catalog(7, 1));
        CHECK(seven["recipe"]["construction"] == "extend_codim_summed");
        CHECK(seven["recipe"]["codim"] == 7);
        CHECK(seven["recipe"]["base"]["construction"] == "bernstein_t1");
    }

    TEST_CASE("topsets list members in ascending order") {
        GQPoset g({1, 1});
        ElementSet s = g.make_set({MultiIndex{1, 0}, MultiIndex{0, 0}});
        CHECK(topset_json(g, s) == json::parse("[[0,0],[1,0]]"));
    }
}
