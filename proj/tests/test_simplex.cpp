#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kanspec/simplex.hpp"
#include "test_support.hpp"

using namespace kanspec;

static long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

TEST_CASE("generators and composition") {
    // s^0 d^0 = id on [0]
    CHECK(compose(simplex_face(0, 0), simplex_degeneracy(0, 0)) == simplex_identity(0));
    // d^2 : [1]->[2] then s^1 : [2]->[1] = id on [1]
    CHECK(compose(simplex_face(1, 2), simplex_degeneracy(1, 1)) == simplex_identity(1));
    // d^1 : [1]->[2] then d^0 : [2]->[3] has table (1,3)
    SimplexMap f = compose(simplex_face(1, 1), simplex_face(2, 0));
    CHECK(f.values == std::vector<int>{1, 3});
    // oracle: pointwise composition of value tables
    SimplexMap d1 = simplex_face(1, 1), d0 = simplex_face(2, 0);
    for (int i = 0; i <= 1; ++i) CHECK(f.values[i] == d0.values[d1.values[i]]);
}

TEST_CASE("compose is associative (exhaustive, objects <= 3-ish)") {
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int c = 0; c <= 2; ++c)
                for (int d = 0; d <= 2; ++d)
                    for (const auto& f : all_simplex_maps(a, b))
                        for (const auto& g : all_simplex_maps(b, c))
                            for (const auto& h : all_simplex_maps(c, d))
                                CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
}

TEST_CASE("compose is associative on random triples with objects <= 5") {
    std::mt19937_64 rng(testing::seed_from_env() + 5);
    std::uniform_int_distribution<int> dn(0, 5);
    for (int t = 0; t < 100000; ++t) {
        int a = dn(rng), b = dn(rng), c = dn(rng), d = dn(rng);
        auto pick = [&](int n, int m) {
            auto maps = all_simplex_maps(n, m);
            return maps[std::uniform_int_distribution<size_t>(0, maps.size() - 1)(rng)];
        };
        SimplexMap f = pick(a, b), g = pick(b, c), h = pick(c, d);
        CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    }
}

TEST_CASE("normal form examples") {
    CHECK(normal_form(simplex_identity(2)) == SimplexNormalForm{{}, {}, 2});

    SimplexMap f{2, 1, {0, 0, 1}};
    auto nf = normal_form(f);
    CHECK(nf.faces.empty());
    CHECK(nf.degens == std::vector<int>{0});
    auto hits = testing::word_search_oracle(f, 2);
    REQUIRE(hits.size() == 1);
    CHECK(hits[0] == nf);

    SimplexMap g{1, 2, {0, 2}};
    auto ng = normal_form(g);
    CHECK(ng.faces == std::vector<int>{1});
    CHECK(ng.degens.empty());
    auto ghits = testing::word_search_oracle(g, 2);
    REQUIRE(ghits.size() == 1);
    CHECK(ghits[0] == ng);
}

TEST_CASE("normal form round trips exhaustively for src,tgt <= 4") {
    for (int n = 0; n <= 4; ++n)
        for (int m = 0; m <= 4; ++m)
            for (const auto& f : all_simplex_maps(n, m)) {
                auto nf = normal_form(f);
                CHECK(from_normal_form(nf) == f);
                CHECK(nf.tgt() == m);
            }
}

TEST_CASE("hom set sizes match the closed count") {
    for (int n = 0; n <= 5; ++n)
        for (int m = 0; m <= 5; ++m)
            CHECK(static_cast<long long>(all_simplex_maps(n, m).size()) == binom(n + m + 1, n + 1));
}

TEST_CASE("kan K on objects and generators") {
    CHECK(kan_K(0) == 1);
    CHECK(kan_K(simplex_face(0, 0)) == simplex_face(1, 0));
    CHECK(kan_K(simplex_face(0, 0)).values == std::vector<int>{1, 2});
    for (int n = 0; n <= 3; ++n) {
        CHECK(kan_K(simplex_identity(n)) == simplex_identity(n + 1));
        for (int i = 0; i <= n + 1; ++i) CHECK(kan_K(simplex_face(n, i)) == simplex_face(n + 1, i));
        for (int j = 0; j <= n; ++j) CHECK(kan_K(simplex_degeneracy(n, j)) == simplex_degeneracy(n + 1, j));
    }
}

TEST_CASE("decalage components") {
    CHECK(decalage_alpha(2) == simplex_face(2, 3));
    CHECK(decalage_alpha(2).values == std::vector<int>{0, 1, 2});
    CHECK(decalage_beta(2) == SimplexMap{0, 3, {3}});

    // naturality of alpha at d^0 : [0] -> [1]
    SimplexMap d0 = simplex_face(0, 0);
    CHECK(compose(d0, decalage_alpha(1)) == compose(decalage_alpha(0), kan_K(d0)));
}

TEST_CASE("naturality of alpha and beta, exhaustive src,tgt <= 4") {
    for (int n = 0; n <= 4; ++n)
        for (int m = 0; m <= 4; ++m)
            for (const auto& f : all_simplex_maps(n, m)) {
                CHECK(compose(f, decalage_alpha(m)) == compose(decalage_alpha(n), kan_K(f)));
                // beta naturality: K(f) o beta_[n] = beta_[m]
                CHECK(compose(decalage_beta(n), kan_K(f)) == decalage_beta(m));
            }
}

TEST_CASE("functoriality of K") {
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int c = 0; c <= 3; ++c)
                for (const auto& f : all_simplex_maps(a, b))
                    for (const auto& g : all_simplex_maps(b, c))
                        CHECK(kan_K(compose(f, g)) == compose(kan_K(f), kan_K(g)));
}
