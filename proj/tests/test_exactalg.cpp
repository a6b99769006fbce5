#include <doctest.h>

#include <stdexcept>

#include "levelalg/exactalg.hpp"
#include "levelalg/rng.hpp"

using namespace levelalg;

namespace {

DenseMatrix product(const DenseMatrix& a, const DenseMatrix& b, const PrimeField& f) {
    DenseMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = f.add(c(i, j), f.mul(a(i, k), b(k, j)));
    return c;
}

// Rank of a 3x3 matrix over GF(3) from its minors.
std::size_t rank_by_minors(const DenseMatrix& m, const PrimeField& f) {
    long long det = 0;
    const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    for (int p = 0; p < 6; ++p) {
        long long t = (p < 3 ? 1 : -1);
        for (int i = 0; i < 3; ++i) t *= m(i, perms[p][i]);
        det += t;
    }
    if (f.reduce(det)) return 3;
    for (int r0 = 0; r0 < 3; ++r0)
        for (int r1 = r0 + 1; r1 < 3; ++r1)
            for (int c0 = 0; c0 < 3; ++c0)
                for (int c1 = c0 + 1; c1 < 3; ++c1)
                    if (f.reduce(static_cast<long long>(m(r0, c0)) * m(r1, c1) - static_cast<long long>(m(r0, c1)) * m(r1, c0)))
                        return 2;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (m(i, j)) return 1;
    return 0;
}

}  // namespace

TEST_SUITE("exactalg") {
    TEST_CASE("primality and field construction") {
        CHECK(is_prime(32749));
        CHECK_FALSE(is_prime(32751));
        CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
        PrimeField f;
        CHECK(f.p() == 32749);
        for (std::uint32_t a = 1; a < 2000; a += 7) CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK(f.reduce(-1) == 32748);
        CHECK_THROWS_AS(f.inv(0), std::domain_error);
    }

    TEST_CASE("every 3x3 matrix over GF(3) has the rank its minors say") {
        PrimeField f(3);
        for (int code = 0; code < 19683; ++code) {
            DenseMatrix m(3, 3);
            int c = code;
            for (int k = 0; k < 9; ++k, c /= 3) m(k / 3, k % 3) = static_cast<std::uint32_t>(c % 3);
            const std::size_t want = rank_by_minors(m, f);
            REQUIRE(rank(m, f) == want);
            REQUIRE(rank_reference(m, f) == want);
        }
    }

    TEST_CASE("products of random factors have the inner dimension as rank") {
        PrimeField f;
        for (std::size_t k : {1u, 3u, 10u, 40u}) {
            DenseMatrix a = sample_matrix(60, k, f, k, "left");
            DenseMatrix b = sample_matrix(k, 50, f, k, "right");
            DenseMatrix m = product(a, b, f);
            CHECK(rank(m, f) == k);
            CHECK(rank_reference(m, f) == k);
        }
    }

    TEST_CASE("parallel kernel agrees with the reference on assorted shapes and primes") {
        for (std::uint32_t p : {2u, 3u, 101u, 32749u, 65521u, 2147483647u}) {
            PrimeField f(p);
            Stream s(p, "shapes");
            for (int rep = 0; rep < 20; ++rep) {
                const std::size_t r = s.between(0, 40), c = s.between(0, 40);
                DenseMatrix m = sample_matrix(r, c, f, s.next(), "m");
                // knock out some rows to force deficiency
                for (std::size_t i = 0; i < r; ++i)
                    if (s.below(4) == 0)
                        for (std::size_t j = 0; j < c; ++j) m(i, j) = 0;
                CHECK(rank(m, f) == rank_reference(m, f));
            }
        }
    }

    TEST_CASE("identity, zero, transpose, stack") {
        PrimeField f;
        DenseMatrix id(5, 5);
        for (int i = 0; i < 5; ++i) id(i, i) = 1;
        CHECK(rank(id, f) == 5);
        CHECK(rank(DenseMatrix(4, 7), f) == 0);
        DenseMatrix m = sample_matrix(3, 8, f, 1, "t");
        CHECK(m.transpose().transpose() == m);
        CHECK(rank(m.transpose(), f) == rank(m, f));
        DenseMatrix st = DenseMatrix::stack(m, m);
        CHECK(st.rows() == 6);
        CHECK(rank(st, f) == rank(m, f));
        CHECK_THROWS_AS(DenseMatrix::stack(m, id), std::invalid_argument);
    }

    TEST_CASE("streams are pinned and label-separated") {
        Stream a(1, "x"), b(1, "x"), c(1, "y");
        const auto x = a.next();
        CHECK(x == b.next());
        CHECK(x != c.next());
        // frozen first outputs of the (seed 0, label "") stream
        Stream z(0, "");
        CHECK(z.next() == 0xc3817c016ba4ff30ull);
        CHECK(z.next() == 0x100cdaacc0bc9316ull);
        Stream u(42, "u");
        for (int k = 0; k < 1000; ++k) {
            auto v = u.below(7);
            CHECK(v < 7);
        }
        CHECK(sample_matrix(4, 4, PrimeField(), 9, "m") == sample_matrix(4, 4, PrimeField(), 9, "m"));
    }
}
