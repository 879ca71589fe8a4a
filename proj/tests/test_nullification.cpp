#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "nullcell/nullification.hpp"

using namespace nullcell;

namespace {

std::vector<std::size_t> pad(std::vector<std::size_t> v, std::size_t len) {
    v.resize(len, 0);
    return v;
}

struct S3Setup {
    AlgebraPtr alg;
    std::shared_ptr<const SimpleList> simples;
    TorsionTheory by_k;
    Module e_k, e_w;

    S3Setup()
        : alg(fixtures::group_algebra_s3_gf3()),
          simples(std::make_shared<const SimpleList>(simple_modules(alg, 0))),
          by_k(make_torsion_theory(simples, {0})),
          e_k(simples->hulls[0]),
          e_w(simples->hulls[1]) {}
};

}  // namespace

TEST_CASE("flagship: nullification of E_k over F3[S3]") {
    S3Setup s;
    const std::size_t n = 8;
    auto r = nullify_radical_route(s.by_k, s.e_k, n);

    SECTION("every term is a copy of E_w") {
        for (std::size_t i = 0; i <= n; ++i) CHECK(r.complex.terms[i].dim == 3);
    }

    SECTION("cell table (1, 0, 1, 1, ...)") {
        auto want = pad({1, 0}, n + 1);
        for (std::size_t i = 2; i <= n; ++i) want[i] = 1;
        CHECK(r.cell_dims == want);
    }

    SECTION("nullification cohomology (2, 1, 1, ...)") {
        std::vector<std::size_t> want(n + 1, 1);
        want[0] = 2;
        CHECK(r.cohomology_dims == want);
    }

    SECTION("differential factors through the sign simple from degree 1 on") {
        for (std::size_t i = 1; i <= n; ++i) CHECK(r.complex.diffs[i].rank() == 1);
    }

    SECTION("unit map has the right kernel: t(E_k)") {
        CHECK(kernel_subspace(r.complex.unit.mat).dim() == 1);
    }
}

TEST_CASE("flagship: cell table of the regular module") {
    S3Setup s;
    auto cell = cell_cohomology(s.by_k, regular_module(s.alg), 20);
    std::vector<std::size_t> want(21, 1);
    want[0] = 1;
    want[1] = 0;
    CHECK(cell == want);
}

TEST_CASE("both routes agree degreewise") {
    S3Setup s;
    const std::size_t n = 10;
    for (const auto& m : {regular_module(s.alg), s.e_k, s.e_w,
                          radical(s.e_k, s.simples->reps).as_module}) {
        auto i_route = nullify_radical_route(s.by_k, m, n);
        auto j_route = nullify_quotients_route(s.by_k, m, n);
        for (std::size_t d = 0; d <= n; ++d)
            CHECK(i_route.complex.terms[d].dim == j_route.complex.terms[d].dim);
        CHECK(i_route.cohomology_dims == j_route.cohomology_dims);
    }
}

TEST_CASE("degree-0 cohomology equals the module of quotients, three ways") {
    S3Setup s;
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 8; ++trial) {
        Module m = corpus::random_subquotient(s.alg, rng, 6);
        auto i_route = nullify_radical_route(s.by_k, m, 4);
        auto j_route = nullify_quotients_route(s.by_k, m, 4);
        auto mf = module_of_quotients(s.by_k, m);
        CHECK(i_route.cohomology_dims[0] == mf.mf.dim);
        CHECK(j_route.cohomology_dims[0] == mf.mf.dim);
    }
}

TEST_CASE("long-exact-sequence identity: H^n(null) = dim t(M^(n+1))") {
    S3Setup s;
    std::mt19937_64 rng(37);
    const std::size_t n = 8;
    for (int trial = 0; trial < 8; ++trial) {
        Module m = corpus::random_subquotient(s.alg, rng, 6);
        auto r = nullify_radical_route(s.by_k, m, n);
        for (std::size_t d = 1; d + 1 <= n; ++d)
            CHECK(r.cohomology_dims[d] == r.cell_dims[d + 1]);
    }
}

TEST_CASE("degenerate theories") {
    S3Setup s;
    auto all = make_torsion_theory(s.simples, {0, 1});
    auto none = make_torsion_theory(s.simples, {});
    const std::size_t n = 6;

    SECTION("everything torsion: null vanishes, cell is M in degree 0") {
        for (const auto& m : {regular_module(s.alg), s.e_k}) {
            auto r = nullify_radical_route(all, m, n);
            for (const auto& term : r.complex.terms) CHECK(term.dim == 0);
            auto want = pad({m.dim}, n + 1);
            CHECK(r.cell_dims == want);
            CHECK(r.cohomology_dims == pad({}, n + 1));
            auto j = nullify_quotients_route(all, m, n);
            for (const auto& term : j.complex.terms) CHECK(term.dim == 0);
        }
    }

    SECTION("nothing torsion: minimal injective resolution") {
        auto b = radical(s.e_k, s.simples->reps).as_module;  // non-injective
        for (const auto& m : {regular_module(s.alg), b}) {
            auto r = nullify_radical_route(none, m, n);
            CHECK(r.cell_dims == pad({}, n + 1));
            auto want = pad({m.dim}, n + 1);
            CHECK(r.cohomology_dims == want);
            // first term is the hull of m itself
            CHECK(r.complex.terms[0].dim == injective_hull(m, *s.simples).module.dim);
            // exactness in positive degrees
            for (std::size_t d = 1; d <= n; ++d) CHECK(r.cohomology_dims[d] == 0);
        }
    }
}

TEST_CASE("torsion modules are their own cellular approximation") {
    S3Setup s;
    auto k2 = direct_sum(s.simples->reps[0], s.simples->reps[0]);
    auto r = nullify_radical_route(s.by_k, k2, 5);
    CHECK(r.cell_dims == pad({2}, 6));
    CHECK(r.cohomology_dims == pad({}, 6));
}

TEST_CASE("additivity over direct sums") {
    S3Setup s;
    const std::size_t n = 6;
    auto m1 = s.e_k;
    auto m2 = radical(s.e_k, s.simples->reps).as_module;
    auto r1 = nullify_radical_route(s.by_k, m1, n);
    auto r2 = nullify_radical_route(s.by_k, m2, n);
    auto rsum = nullify_radical_route(s.by_k, direct_sum(m1, m2), n);
    for (std::size_t d = 0; d <= n; ++d) {
        CHECK(rsum.cell_dims[d] == r1.cell_dims[d] + r2.cell_dims[d]);
        CHECK(rsum.cohomology_dims[d] == r1.cohomology_dims[d] + r2.cohomology_dims[d]);
        CHECK(rsum.complex.terms[d].dim == r1.complex.terms[d].dim + r2.complex.terms[d].dim);
    }
}

TEST_CASE("upper-triangular example: construction terminates at degree 0") {
    auto ut = fixtures::upper_triangular_2x2_gf2();
    auto simples = std::make_shared<const SimpleList>(simple_modules(ut, 0));
    auto by_sa = make_torsion_theory(simples, {1});  // S_a torsion
    auto p_sb = simples->covers[0];
    auto r = nullify_radical_route(by_sa, p_sb, 6);
    CHECK(r.cell_dims == pad({1}, 7));
    CHECK(r.cohomology_dims == pad({1}, 7));
    CHECK(r.complex.terms[0].dim == 1);
    CHECK(r.complex.terms[1].dim == 0);
}

TEST_CASE("cohomology of explicit complexes") {
    S3Setup s;

    SECTION("the flagship complex has cohomology modules (2, 1, 1, ...)") {
        auto r = nullify_radical_route(s.by_k, s.e_k, 5);
        auto h = complex_cohomology(r.complex);
        CHECK(h[0].first == 2);
        for (std::size_t d = 1; d <= 5; ++d) {
            CHECK(h[d].first == 1);
            // and the subquotient is the trivial simple
            CHECK(meataxe::simples_isomorphic(h[d].second, s.simples->reps[0]));
        }
    }

    SECTION("synthetic exact complex has zero cohomology") {
        NullComplex c;
        c.max_degree = 1;
        c.terms = {s.e_w, s.e_w, Module::zero(s.alg)};
        c.diffs.push_back(identity_map(s.e_w));
        c.diffs.push_back(ModuleMap{s.e_w, Module::zero(s.alg), Mat(0, 3, 3)});
        auto h = complex_cohomology(c);
        CHECK(h[0].first == 0);
        CHECK(h[1].first == 0);
    }

    SECTION("synthetic zero differentials: cohomology equals the terms") {
        NullComplex c;
        c.max_degree = 1;
        c.terms = {s.e_w, s.e_w, s.e_w};
        c.diffs.push_back(ModuleMap{s.e_w, s.e_w, Mat(3, 3, 3)});
        c.diffs.push_back(ModuleMap{s.e_w, s.e_w, Mat(3, 3, 3)});
        auto h = complex_cohomology(c);
        CHECK(h[0].first == 3);
        CHECK(h[1].first == 3);
    }
}

TEST_CASE("periodicity detection") {
    S3Setup s;

    SECTION("terminating construction reports (first zero stage, 1)") {
        auto r = nullify_radical_route(s.by_k, s.e_w, 6);
        auto per = detect_periodicity(s.by_k, r, 0);
        REQUIRE(per);
        CHECK(*per == std::make_pair(std::size_t(1), std::size_t(1)));
    }

    SECTION("flagship E_k stabilizes to the B stage: (2, 1)") {
        auto r = nullify_radical_route(s.by_k, s.e_k, 8);
        auto per = detect_periodicity(s.by_k, r, 0);
        REQUIRE(per);
        CHECK(*per == std::make_pair(std::size_t(2), std::size_t(1)));
    }

    SECTION("injective resolution of B is 4-periodic, and short windows stay silent") {
        auto none = make_torsion_theory(s.simples, {});
        auto b = radical(s.e_k, s.simples->reps).as_module;
        auto r = nullify_radical_route(none, b, 10);
        auto per = detect_periodicity(none, r, 0);
        REQUIRE(per);
        CHECK(*per == std::make_pair(std::size_t(0), std::size_t(4)));

        auto short_run = nullify_radical_route(none, b, 3);
        CHECK_FALSE(detect_periodicity(none, short_run, 0));
    }
}

TEST_CASE("quotients route on a torsion-free injective stops after degree 0") {
    S3Setup s;
    auto r = nullify_quotients_route(s.by_k, s.e_w, 5);
    CHECK(r.complex.terms[0].dim == 3);
    for (std::size_t d = 1; d <= 5; ++d) CHECK(r.complex.terms[d].dim == 0);
    CHECK(r.cohomology_dims == pad({3}, 6));
}

TEST_CASE("cohomology subquotients are valid modules") {
    S3Setup s;
    auto r = nullify_radical_route(s.by_k, regular_module(s.alg), 5);
    for (auto& [dim, h] : complex_cohomology(r.complex)) {
        CHECK_NOTHROW(validate_module(h));
        CHECK(h.dim == dim);
    }
}

TEST_CASE("periodicity detection works on the quotients route too") {
    S3Setup s;
    auto j = nullify_quotients_route(s.by_k, s.e_k, 8);
    auto per = detect_periodicity(s.by_k, j, 0);
    REQUIRE(per);
    CHECK(per->second == 1);
}
