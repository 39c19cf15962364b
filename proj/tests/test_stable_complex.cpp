#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "kanspec/stable_complex.hpp"

using namespace kanspec;

static long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

TEST_CASE("stable cells: counts, levels, bounds") {
    for (long long z : {-2LL, 0LL, 3LL}) {
        StableComplex Z0 = stable_cell(z, 0);
        CHECK(validate(Z0));
        CHECK(Z0.cells.size() == 2);
        CHECK(Z0.count_at_level(z) == 1);
        CHECK(Z0.count_at_level(z - 1) == 1);

        for (int n = 0; n <= 3; ++n) {
            StableComplex Z = stable_cell(z, n);
            CHECK(validate(Z));
            CHECK(Z.cells.size() == (1u << (n + 1)));
            for (int j = 0; j <= n + 1; ++j) CHECK(Z.count_at_level(z - j) == binom(n + 1, j));
            // the top cell has bound exactly n
            for (size_t c = 0; c < Z.cells.size(); ++c)
                if (Z.cells[c].level == z) CHECK(Z.bound(static_cast<int>(c)) == n);
        }
    }
}

TEST_CASE("spheres: counts and the z-sphere") {
    StableComplex S = sphere(-1, 0);
    CHECK(validate(S));
    CHECK(S.cells.size() == 1);
    CHECK(S.effective_bound(0) == -1);

    for (long long z : {-1LL, 2LL})
        for (int n = 0; n <= 3; ++n) {
            StableComplex Sp = sphere(z, n);
            CHECK(validate(Sp));
            CHECK(Sp.cells.size() == (1u << (n + 1)) - 1);
        }
}

TEST_CASE("quotient epi S^1[1] -> S^2[0] exists") {
    StableComplex A = sphere(2, 1);
    StableComplex B = sphere(2, 0);
    auto maps = hom_stable(A, B);
    bool found_epi = false;
    for (const auto& m : maps) {
        std::set<int> image;
        for (const StablePair& p : m)
            if (p.cell >= 0 && p.word.empty()) image.insert(p.cell);
        if (image.size() == B.cells.size()) found_epi = true;
    }
    CHECK(found_epi);
}

TEST_CASE("loc sph membership: spheres yes, stable cells no") {
    for (long long z = -2; z <= 2; ++z)
        for (int n = 0; n <= 3; ++n) {
            CHECK(is_loc_sph(sphere(z, n)));
            CHECK_FALSE(is_loc_sph(stable_cell(z, n)));
        }
}

TEST_CASE("coreflection removes the offending cells and is idempotent") {
    for (long long z : {-1LL, 0LL, 2LL}) {
        StableComplex Z = stable_cell(z, 0);
        StableComplex C = loc_sph_coreflect(Z);
        CHECK(is_loc_sph(C));
        CHECK(C.cells.size() == 1);  // the level z-1 face cell survives as a sphere
        CHECK(C.cells[0].level == z - 1);
        CHECK(isomorphic(loc_sph_coreflect(C), C));
        CHECK(isomorphic(C, sphere(z - 1, 0)));

        StableComplex S = sphere(z, 2);
        CHECK(isomorphic(loc_sph_coreflect(S), S));
    }
}

TEST_CASE("brown horns and boundaries are strict inclusions") {
    StableComplex SC = stable_cell(0, 1);

    StableArrow bd = brown_boundary(0, 0);
    CHECK(bd.src.cells.size() == 1);
    CHECK(bd.src.cells[0].level == -1);

    StableArrow horn = brown_horn(0, 1, 0);
    // the horn omits the face d^0 but keeps d^1 and the shared bottom cell
    CHECK(horn.src.cells.size() == 2);
    StableArrow bd1 = brown_boundary(0, 1);
    CHECK(bd1.src.cells.size() == 3);
    CHECK(horn.src.cells.size() < bd1.src.cells.size());
    CHECK(bd1.src.cells.size() < SC.cells.size());

    std::string why;
    CHECK_MESSAGE(validate_arrow(horn, &why), why);
    CHECK_MESSAGE(validate_arrow(bd1, &why), why);

    // mono: distinct cells, trivial words
    std::set<int> hit;
    for (const StablePair& p : horn.assign) {
        CHECK(p.word.empty());
        CHECK(hit.insert(p.cell).second);
    }
}

TEST_CASE("spherical horns/boundaries factor through the sphere") {
    std::string why;
    StableArrow b0 = spherical_boundary(1, 0);
    CHECK(b0.src.cells.empty());  // the boundary collapses into the sphere
    CHECK(b0.tgt.cells.size() == 1);
    CHECK_MESSAGE(validate_arrow(b0, &why), why);

    for (long long z = -2; z <= 2; ++z)
        for (int n = 0; n <= 2; ++n)
            for (int i = 0; i <= n; ++i) {
                StableArrow h = spherical_horn(z, n, i);
                CHECK_MESSAGE(validate_arrow(h, &why), why);
                CHECK(h.tgt.cells.size() == (1u << (n + 1)) - 1);
                size_t expect = n == 0 ? 0 : (1u << (n + 1)) - 3;
                CHECK(h.src.cells.size() == expect);
                // factorization is stable under refactoring
                StableArrow again = spherical_horn(z, n, i);
                CHECK(isomorphic(h.src, again.src));
            }
}

TEST_CASE("emit_regulus counts") {
    auto lb = emit_regulus(RegulusKind::BrownHorn, 0, 0, 1);
    CHECK(lb.size() == 3);  // i=0 at n=0; i=0,1 at n=1
    auto sb = emit_regulus(RegulusKind::SphericalBoundary, 0, 0, 0);
    CHECK(sb.size() == 1);
    auto sh = emit_regulus(RegulusKind::SphericalHorn, -1, 1, 2);
    CHECK(sh.size() == 3 * (1 + 2 + 3));
    std::set<std::string> names;
    for (const auto& a : sh) CHECK(names.insert(a.name).second);
}

TEST_CASE("hom enumeration and lifting") {
    StableComplex S = sphere(0, 0);
    auto endo = hom_stable(S, S);
    CHECK(endo.size() == 2);  // identity and constant basepoint
    bool has_id = false;
    for (const auto& m : endo)
        if (m.size() == 1 && m[0].cell == 0 && m[0].word.empty()) has_id = true;
    CHECK(has_id);

    // every X has RLP against an identity inclusion
    StableComplex X = sphere(1, 1);
    StableArrow idinc = subcomplex_inclusion(X, {0, 1, 2}, "id");
    CHECK(has_rlp(X, idinc));
    CHECK(is_orthogonal(X, idinc));
}

TEST_CASE("lifting reports carry the fillers themselves") {
    StableComplex X = sphere(1, 1);
    StableArrow idinc = subcomplex_inclusion(X, {0, 1, 2}, "id");
    LiftReport rep = lifting_report(X, idinc);
    REQUIRE(rep.fillers.size() == rep.filler_counts.size());
    for (size_t m = 0; m < rep.fillers.size(); ++m) {
        CHECK(static_cast<int>(rep.fillers[m].size()) == rep.filler_counts[m]);
        for (const auto& assign : rep.fillers[m]) {
            StableArrow g{X, X, assign, "filler"};
            std::string why;
            CHECK_MESSAGE(validate_arrow(g, &why), why);
        }
    }

    // a horn instance: fillers against the spherical horn of the 1-sphere
    StableArrow horn = spherical_horn(1, 1, 0);
    LiftReport hr = lifting_report(horn.tgt, horn);
    for (size_t m = 0; m < hr.fillers.size(); ++m)
        CHECK(static_cast<int>(hr.fillers[m].size()) == hr.filler_counts[m]);
}

TEST_CASE("level-shift equivariance") {
    for (long long z : {-2LL, 0LL, 1LL})
        for (int n = 0; n <= 2; ++n) {
            StableComplex a = stable_cell(z + 1, n);
            StableComplex b = level_shift(stable_cell(z, n), 1);
            CHECK(isomorphic(a, b));
            CHECK(isomorphic(sphere(z + 1, n), level_shift(sphere(z, n), 1)));
        }
}

TEST_CASE("validator rejects broken stable identities") {
    StableComplex Z = stable_cell(0, 2);
    // redirect d_0 of the top cell onto the d_1 face cell
    REQUIRE(Z.cells[0].name == "top");
    REQUIRE(Z.cells[2].name == "d1");
    Z.cells[0].faces[0] = StablePair{{}, 2, Z.cells[0].level - 1};
    CHECK_FALSE(validate(Z));
}
