#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "nullcell/matrix.hpp"
#include "nullcell/subspace.hpp"

using namespace nullcell;

TEST_CASE("prime field scalars") {
    CHECK(is_prime(2));
    CHECK(is_prime(46337));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK(fp_inv(2, 5) == 3);
    for (u32 p : {2u, 3u, 5u, 7u})
        for (u32 a = 1; a < p; ++a) CHECK(fp_mul(a, fp_inv(a, p), p) == 1);

    Fp a{2, 5}, b{4, 5};
    CHECK((a + b) == Fp{1, 5});
    CHECK((a - b) == Fp{3, 5});
    CHECK((a * b) == Fp{3, 5});
    CHECK((a * a.inv()) == Fp{1, 5});
    CHECK((-a) == Fp{3, 5});
}

TEST_CASE("row reduce: identity, zero, dependent rows") {
    Mat id3 = Mat::identity(3, 5);
    auto rr = row_reduce(id3);
    CHECK(rr.rref == id3);
    CHECK(rr.pivots == std::vector<std::size_t>{0, 1, 2});
    CHECK(rr.rank == 3);

    Mat z(2, 4, 3);
    auto rz = row_reduce(z);
    CHECK(rz.rref == z);
    CHECK(rz.pivots.empty());
    CHECK(rz.rank == 0);

    // second row is twice the first
    Mat m = Mat::from_rows(2, 2, 5, {1, 2, 2, 4});
    auto rm = row_reduce(m);
    CHECK(rm.rank == 1);
    CHECK(rm.rref == Mat::from_rows(2, 2, 5, {1, 2, 0, 0}));
}

TEST_CASE("row reduce is idempotent") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        u32 p = trial % 2 ? 3 : 5;
        Mat m(4, 5, p);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 5; ++j) m(i, j) = static_cast<u32>(rng() % p);
        auto once = row_reduce(m);
        auto twice = row_reduce(once.rref);
        CHECK(once.rref == twice.rref);
        CHECK(once.pivots == twice.pivots);
    }
}

TEST_CASE("kernel basis") {
    CHECK(kernel_mat(Mat::identity(4, 3)).cols() == 0);
    CHECK(kernel_mat(Mat(2, 3, 2)).cols() == 3);

    Mat m = Mat::from_rows(2, 3, 2, {1, 1, 0, 0, 0, 1});
    Mat k = kernel_mat(m);
    REQUIRE(k.cols() == 1);
    CHECK(k.col(0) == std::vector<u32>{1, 1, 0});
}

TEST_CASE("rank-nullity exhaustively over GF(2) up to 3x3") {
    for (std::size_t rows = 0; rows <= 3; ++rows)
        for (std::size_t cols = 0; cols <= 3; ++cols) {
            std::size_t cells = rows * cols;
            for (u64 mask = 0; mask < (u64(1) << cells); ++mask) {
                Mat m(rows, cols, 2);
                for (std::size_t b = 0; b < cells; ++b)
                    if (mask >> b & 1) m(b / cols, b % cols) = 1;
                auto rr = row_reduce(m);
                Mat k = kernel_mat(m);
                REQUIRE(rr.rank + k.cols() == cols);
                CHECK((m * k).is_zero());
            }
        }
}

TEST_CASE("solve") {
    Mat id = Mat::identity(3, 7);
    Mat b = Mat::from_rows(3, 1, 7, {2, 5, 6});
    auto x = solve(id, b);
    REQUIRE(x);
    CHECK(*x == b);

    CHECK_FALSE(solve(Mat(2, 2, 3), Mat::from_rows(2, 1, 3, {1, 0})));

    auto y = solve(Mat::from_rows(1, 1, 5, {2}), Mat::from_rows(1, 1, 5, {3}));
    REQUIRE(y);
    CHECK((*y)(0, 0) == 4);

    CHECK_THROWS_AS(solve(Mat(2, 2, 3), Mat(3, 1, 3)), std::logic_error);
}

TEST_CASE("solve result satisfies a*x=b; absence means rank grows") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        u32 p = 3;
        Mat a(3, 4, p), b(3, 2, p);
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 4; ++j) a(i, j) = static_cast<u32>(rng() % p);
            for (std::size_t j = 0; j < 2; ++j) b(i, j) = static_cast<u32>(rng() % p);
        }
        auto x = solve(a, b);
        if (x)
            CHECK(a * *x == b);
        else
            CHECK(rank_of(Mat::hcat(a, b)) > rank_of(a));
    }
}

TEST_CASE("subspace canonical form") {
    // two spanning sets of the same plane produce identical representations
    Mat g1 = Mat::from_rows(3, 2, 5, {1, 0, 0, 1, 0, 0});
    Mat g2 = Mat::from_rows(3, 3, 5, {2, 1, 3, 3, 1, 4, 0, 0, 0});
    CHECK(Subspace::span(g1) == Subspace::span(g2));
    CHECK(Subspace::span(g1).dim() == 2);
}

TEST_CASE("subspace intersection") {
    Mat u = Mat::identity(2, 2);
    Mat diag = Mat::from_rows(2, 1, 2, {1, 1});
    auto inter = intersect(Subspace::span(u), Subspace::span(diag));
    CHECK(inter == Subspace::span(diag));

    // complementary coordinate planes in GF(3)^3 meet trivially
    Mat xy = Mat::from_rows(3, 2, 3, {1, 0, 0, 1, 0, 0});
    Mat z = Mat::from_rows(3, 1, 3, {0, 0, 1});
    CHECK(intersect(Subspace::span(xy), Subspace::span(z)).is_zero());

    auto s = Subspace::span(xy);
    CHECK(intersect(s, s) == s);
}

TEST_CASE("intersection dimension formula on random subspaces") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        u32 p = trial % 2 ? 2 : 3;
        auto rand_space = [&](std::size_t gens) {
            Mat g(4, gens, p);
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < gens; ++j) g(i, j) = static_cast<u32>(rng() % p);
            return Subspace::span(g);
        };
        auto u = rand_space(2), v = rand_space(3);
        CHECK(intersect(u, v).dim() + sum(u, v).dim() == u.dim() + v.dim());
    }
}

TEST_CASE("quotient coordinates") {
    auto full = Subspace::full(3, 2);
    auto qc_zero = quotient_coords(3, Subspace(3, 2));
    CHECK(qc_zero.proj == Mat::identity(3, 2));

    auto qc_full = quotient_coords(3, full);
    CHECK(qc_full.proj.rows() == 0);

    Mat diag = Mat::from_rows(2, 1, 2, {1, 1});
    auto w = Subspace::span(diag);
    auto qc = quotient_coords(2, w);
    CHECK(qc.proj.rows() == 1);
    CHECK(qc.proj.apply({1, 1}) == std::vector<u32>{0});
    CHECK(qc.proj * qc.section == Mat::identity(1, 2));
}

TEST_CASE("quotient projection kernel is exactly w") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 40; ++trial) {
        u32 p = 3;
        Mat g(4, 2, p);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 2; ++j) g(i, j) = static_cast<u32>(rng() % p);
        auto w = Subspace::span(g);
        auto qc = quotient_coords(4, w);
        CHECK(kernel_subspace(qc.proj) == w);
        CHECK(qc.proj * qc.section == Mat::identity(4 - w.dim(), p));
    }
}

TEST_CASE("echelon sieve membership and growth") {
    EchelonSieve s(3, 2);
    CHECK(s.insert({1, 1, 0}));
    CHECK_FALSE(s.insert({1, 1, 0}));
    CHECK(s.insert({0, 0, 1}));
    CHECK(s.contains({1, 1, 1}));
    CHECK_FALSE(s.contains({1, 0, 0}));
    CHECK(s.dim() == 2);
}

TEST_CASE("modulus bound is enforced") {
    CHECK_NOTHROW(check_modulus(46337));
    CHECK_THROWS_AS(check_modulus(2097143), input_error);  // prime but above the cap
    CHECK_THROWS_AS(check_modulus(6), input_error);
}
