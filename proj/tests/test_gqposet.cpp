#include <doctest.h>

#include <stdexcept>

#include <set>

#include "levelalg/gqposet.hpp"

using namespace levelalg;

namespace {

// All subsets of G_Q that are up-closed, found without the walk.
std::set<std::vector<bool>> brute_topsets(const GQPoset& g) {
    std::set<std::vector<bool>> out;
    const std::size_t n = g.size();
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        std::vector<bool> s(n);
        for (std::size_t k = 0; k < n; ++k) s[k] = (mask >> k) & 1;
        bool closed = true;
        for (std::size_t x = 0; x < n && closed; ++x)
            for (std::size_t y = 0; y < n && closed; ++y)
                if (s[y] && !s[x] && g.dominates(g.element(x), g.element(y))) closed = false;
        if (closed) out.insert(s);
    }
    return out;
}

}  // namespace

TEST_SUITE("gqposet") {
    TEST_CASE("elements of G_(1,1) and its proper topsets") {
        GQPoset g({1, 1});
        REQUIRE(g.size() == 4);
        CHECK(g.element(0) == MultiIndex{0, 0});
        CHECK(g.element(3) == MultiIndex{1, 1});
        CHECK(g.dominates(MultiIndex{0, 1}, MultiIndex{1, 1}));
        CHECK_FALSE(g.dominates(MultiIndex{0, 1}, MultiIndex{1, 0}));
        auto ts = enumerate_topsets(g.order(), TopsetFilter::NonemptyProper);
        std::set<std::vector<std::vector<int>>> got;
        for (const auto& t : ts) {
            std::vector<std::vector<int>> m;
            for (const auto& x : g.members(t)) m.push_back(x.exponents());
            got.insert(m);
        }
        std::set<std::vector<std::vector<int>>> want{{{0, 0}}, {{0, 0}, {0, 1}}, {{0, 0}, {1, 0}}, {{0, 0}, {0, 1}, {1, 0}}};
        CHECK(got == want);
    }

    TEST_CASE("enumeration matches the brute-force oracle") {
        for (auto q : std::vector<std::vector<int>>{{}, {0}, {3}, {1, 1}, {2, 1}, {1, 1, 1}, {2, 3}, {1, 1, 2}, {1, 1, 1, 1}, {4, 2}}) {
            GQPoset g(q);
            auto list = enumerate_topsets(g.order());
            std::set<std::vector<bool>> got(list.begin(), list.end());
            CHECK(got.size() == list.size());
            CHECK(got == brute_topsets(g));
            for (const auto& t : list) CHECK(is_topset(g.order(), t));
        }
    }

    TEST_CASE("known topset counts") {
        CHECK(enumerate_topsets(GQPoset({1, 1, 1}).order()).size() == 20);
        CHECK(enumerate_topsets(GQPoset({2, 2, 2}).order()).size() == 980);
        CHECK(enumerate_topsets(GQPoset({1, 1, 1, 1}).order()).size() == 168);
    }

    TEST_CASE("guard stops runaway enumeration") {
        CHECK_THROWS_AS(enumerate_topsets(GQPoset({1, 1, 1, 1}).order(), TopsetFilter::All, 100), std::length_error);
    }

    TEST_CASE("closures and complements") {
        GQPoset g({2, 2});
        ElementSet s = g.make_set({MultiIndex{1, 2}});
        ElementSet up = up_closure(g.order(), s);
        CHECK(cardinality(up) == 6);
        CHECK(is_topset(g.order(), up));
        CHECK(is_bottomset(g.order(), complement(up)));
        ElementSet down = down_closure(g.order(), g.make_set({MultiIndex{1, 1}}));
        CHECK(g.members(down) == std::vector<MultiIndex>{{1, 1}, {1, 2}, {2, 1}, {2, 2}});
        CHECK(is_bottomset(g.order(), down));
        CHECK_FALSE(is_topset(g.order(), down));
    }

    TEST_CASE("antichain with an unbalanced function fails the topset property") {
        FinitePoset p = FinitePoset::from_covers(2, {});
        OrderPreservingFn phi({Rational(3), Rational(-1)});
        PropertyVerdict v = check_tpp(p, phi);
        CHECK_FALSE(v.holds);
        REQUIRE(v.witness.has_value());
        CHECK(*v.witness == ElementSet{false, true});
    }

    TEST_CASE("order-preserving functions on G_Q have the topset property") {
        Stream s(3, "phi");
        for (auto q : std::vector<std::vector<int>>{{1, 1}, {3}, {2, 2}, {1, 1, 1}, {1, 2, 3}}) {
            GQPoset g(q);
            for (int rep = 0; rep < 30; ++rep) {
                OrderPreservingFn phi = random_order_preserving(g.order(), s);
                REQUIRE(phi.preserves(g.order()));
                REQUIRE(phi.total() >= 0);
                CHECK(check_tpp(g.order(), phi).holds);
                CHECK(check_tap(g.order(), phi).holds == check_tpp(g.order(), phi.centered()).holds);
                // exhaustive restatement over the materialized list
                for (const auto& t : enumerate_topsets(g.order())) {
                    Rational sum = 0;
                    for (std::size_t k = 0; k < t.size(); ++k)
                        if (t[k]) sum += phi[k];
                    CHECK(sum >= 0);
                }
            }
        }
    }

    TEST_CASE("average property agrees with a rational brute force") {
        Stream s(11, "tap");
        GQPoset g({1, 2});
        for (int rep = 0; rep < 50; ++rep) {
            OrderPreservingFn phi = random_order_preserving(g.order(), s);
            // perturb to break order-preservation half the time and skip those
            const Rational mean = phi.total() / static_cast<long long>(g.size());
            bool want = true;
            for (const auto& t : enumerate_topsets(g.order(), TopsetFilter::Nonempty)) {
                Rational sum = 0;
                for (std::size_t k = 0; k < t.size(); ++k)
                    if (t[k]) sum += phi[k];
                if (sum / static_cast<long long>(cardinality(t)) < mean) want = false;
            }
            CHECK(check_tap(g.order(), phi).holds == want);
        }
    }

    TEST_CASE("average property fails on the antichain whenever values differ") {
        FinitePoset p = FinitePoset::from_covers(3, {});
        CHECK_FALSE(check_tap(p, OrderPreservingFn({Rational(1), Rational(2), Rational(6)})).holds);
        CHECK(check_tap(p, OrderPreservingFn({Rational(2), Rational(2), Rational(2)})).holds);
    }

    TEST_CASE("invalid inputs are rejected") {
        GQPoset g({1});
        CHECK_THROWS_AS(check_tpp(g.order(), OrderPreservingFn({Rational(-1), Rational(1)})), std::invalid_argument);
        CHECK_THROWS_AS(check_tpp(g.order(), OrderPreservingFn({Rational(0), Rational(-1)})), std::invalid_argument);
        CHECK_THROWS_AS(GQPoset({-1}), std::invalid_argument);
        CHECK_THROWS_AS(g.index_of(MultiIndex{2}), std::out_of_range);
    }
}
