#include <doctest.h>

#include <random>

#include "signedpinv/linalg.hpp"
#include "signedpinv/signed_graph.hpp"
#include "test_support.hpp"

using namespace signedpinv;
using testsupport::int_matrix;
using testsupport::load_fixture;

namespace {

RatMatrix random_int_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<long> entry(-4, 4);
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = entry(rng);
    return m;
}

}  // namespace

TEST_SUITE_BEGIN("linalg");

TEST_CASE("rank of fixture incidence matrices") {
    // Connected signed graphs drop exactly one rank degree when every cycle
    // sign is positive and none otherwise.
    CHECK(rank(testsupport::tree_incidence_expected()) == 6);
    CHECK(rank(testsupport::gamma1_incidence_expected()) == 9);
    CHECK(rank(RatMatrix(3, 3)) == 0);
    CHECK(rank(RatMatrix::identity(4)) == 4);
    CHECK(rank(int_matrix({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("determinant basics") {
    CHECK(det(RatMatrix::identity(4)) == Rational(1));
    CHECK(det(int_matrix({{2, 1}, {1, 1}})) == Rational(1));
    CHECK(det(int_matrix({{1, 2}, {2, 4}})) == Rational(0));
    CHECK(det(int_matrix({{0, 1}, {1, 0}})) == Rational(-1));
    CHECK(det(RatMatrix(0, 0)) == Rational(1));
    CHECK_THROWS_AS(det(RatMatrix(2, 3)), std::invalid_argument);
    // Duplicated column.
    CHECK(det(int_matrix({{3, 3, 1}, {5, 5, 2}, {7, 7, 9}})) == Rational(0));
}

TEST_CASE("determinant of the unicyclic fixture incidence matrix") {
    const Rational d = det(testsupport::gamma1_incidence_expected());
    CHECK(d.abs() == Rational(2));
}

TEST_CASE("determinant matches cofactor expansion on random matrices") {
    std::mt19937_64 rng(7001);
    for (int trial = 0; trial < 50; ++trial) {
        const RatMatrix m = random_int_matrix(rng, 3, 3);
        const Rational expected = m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
                                  m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
                                  m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
        CHECK(det(m) == expected);
    }
}

TEST_CASE("inverse") {
    const RatMatrix m = int_matrix({{2, 1}, {1, 1}});
    CHECK(inverse(m) * m == RatMatrix::identity(2));
    CHECK(m * inverse(m) == RatMatrix::identity(2));
    CHECK_THROWS_AS(inverse(int_matrix({{1, 2}, {2, 4}})), std::invalid_argument);
    CHECK_THROWS_AS(inverse(RatMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("rank factorization recomposes and has tight shapes") {
    SUBCASE("worked example") {
        const RatMatrix m = int_matrix({{1, 1}, {1, 1}});
        const auto [f, g] = rank_factorization(m);
        CHECK(f == int_matrix({{1}, {1}}));
        CHECK(g == int_matrix({{1, 1}}));
    }
    SUBCASE("random matrices") {
        std::mt19937_64 rng(7002);
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t rows = 1 + trial % 5, cols = 1 + (trial / 2) % 6;
            const RatMatrix m = random_int_matrix(rng, rows, cols);
            const auto [f, g] = rank_factorization(m);
            const std::size_t r = rank(m);
            CHECK(f.cols() == r);
            CHECK(g.rows() == r);
            CHECK(f * g == m);
            CHECK(rank(f) == r);
            CHECK(rank(g) == r);
        }
    }
}

TEST_CASE("pinv_oracle worked examples") {
    // Column vector (1, -1): pseudoinverse is half its transpose.
    const RatMatrix col = int_matrix({{1}, {-1}});
    RatMatrix expected(1, 2);
    expected.at(0, 0) = Rational(1, 2);
    expected.at(0, 1) = Rational(-1, 2);
    CHECK(pinv_oracle(col) == expected);

    // The zero matrix maps to the transposed zero matrix.
    const RatMatrix zero(2, 3);
    const RatMatrix zp = pinv_oracle(zero);
    CHECK(zp.rows() == 3);
    CHECK(zp.cols() == 2);
    CHECK(zp.is_zero());

    // Empty matrix: the n = 1 incidence shape.
    const RatMatrix empty(1, 0);
    const RatMatrix ep = pinv_oracle(empty);
    CHECK(ep.rows() == 0);
    CHECK(ep.cols() == 1);

    CHECK(pinv_oracle(RatMatrix::identity(3)) == RatMatrix::identity(3));
}

TEST_CASE("pinv_oracle reproduces the frozen tree pseudoinverse") {
    CHECK(pinv_oracle(testsupport::tree_incidence_expected()) == testsupport::tree_pinv_expected());
}

TEST_CASE("pinv_oracle inverts the unicyclic fixture incidence matrix") {
    const RatMatrix n = testsupport::gamma1_incidence_expected();
    const RatMatrix x = pinv_oracle(n);
    CHECK(x == testsupport::gamma1_inverse_expected());
    CHECK(n * x == RatMatrix::identity(9));
    CHECK(x * n == RatMatrix::identity(9));
}

TEST_CASE("pinv_oracle satisfies all four conditions on random matrices") {
    std::mt19937_64 rng(7003);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + trial % 5, cols = 1 + (trial / 3) % 5;
        const RatMatrix m = random_int_matrix(rng, rows, cols);
        const RatMatrix x = pinv_oracle(m);
        const auto checks = penrose_verify(m, x);
        CHECK(checks[0]);
        CHECK(checks[1]);
        CHECK(checks[2]);
        CHECK(checks[3]);
        // The pseudoinverse is an involution.
        CHECK(pinv_oracle(x) == m);
        CHECK(rank(x) == rank(m));
    }
}

TEST_CASE("penrose_verify flags a near miss") {
    const RatMatrix a = RatMatrix::identity(2);
    RatMatrix x = RatMatrix::identity(2);
    x.at(0, 0) = Rational(1, 2);
    const auto checks = penrose_verify(a, x);
    CHECK(!checks[0]);
    CHECK(!checks[1]);
    CHECK(checks[2]);
    CHECK(checks[3]);
    CHECK_THROWS_AS(penrose_verify(a, RatMatrix(3, 2)), std::invalid_argument);

    // Asymmetric products: x solves axa = a but is not the pseudoinverse.
    const RatMatrix b = int_matrix({{1, 0}, {0, 0}});
    const RatMatrix y = int_matrix({{1, 0}, {1, 0}});
    const auto partial = penrose_verify(b, y);
    CHECK(partial[0]);
    CHECK(!partial[3]);
}

TEST_SUITE_END();
