#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "kanspec/theta.hpp"
#include "test_support.hpp"

using namespace kanspec;

TEST_CASE("gamma composition") {
    GammaMorphism id2 = gamma_identity(2);
    GammaMorphism phi = make_gamma(1, 2, {{1, 2}});
    CHECK(gamma_compose(phi, id2) == phi);
    CHECK(gamma_compose(gamma_identity(1), phi) == phi);

    GammaMorphism sigma = make_gamma(2, 3, {{1}, {3}});
    GammaMorphism comp = gamma_compose(phi, sigma);
    CHECK(comp.parts == std::vector<std::vector<int>>{{1, 3}});

    CHECK_THROWS(make_gamma(2, 2, {{1, 2}, {2}}));
}

TEST_CASE("gamma associativity, exhaustive small") {
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int c = 0; c <= 2; ++c)
                for (int d = 0; d <= 2; ++d)
                    for (const auto& f : all_gamma_maps(a, b))
                        for (const auto& g : all_gamma_maps(b, c))
                            for (const auto& h : all_gamma_maps(c, d))
                                CHECK(gamma_compose(gamma_compose(f, g), h) ==
                                      gamma_compose(f, gamma_compose(g, h)));
}

TEST_CASE("the functor from the simplex category") {
    for (int n = 0; n <= 3; ++n) CHECK(simplex_to_gamma(simplex_identity(n)) == gamma_identity(n));

    GammaMorphism s0 = simplex_to_gamma(simplex_degeneracy(0, 0));
    CHECK(s0.parts == std::vector<std::vector<int>>{{}});

    GammaMorphism f = simplex_to_gamma(SimplexMap{1, 2, {0, 2}});
    CHECK(f.parts == std::vector<std::vector<int>>{{1, 2}});

    // functoriality, exhaustive for maps between [n], n <= 3
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int c = 0; c <= 3; ++c)
                for (const auto& u : all_simplex_maps(a, b))
                    for (const auto& v : all_simplex_maps(b, c))
                        CHECK(simplex_to_gamma(compose(u, v)) ==
                              gamma_compose(simplex_to_gamma(u), simplex_to_gamma(v)));
}

TEST_CASE("reedy degree") {
    CHECK(reedy_degree(theta_leaf()) == 0);
    CHECK(reedy_degree(theta_node({theta_node({theta_leaf()})})) == 2);  // [1];([1])
    CHECK(reedy_degree(theta_node({theta_node({theta_leaf()}), theta_leaf()})) == 3);  // [2];([1],[0])
    CHECK(reedy_degree(delta_cell(4)) == 4);
    CHECK(reedy_degree(globe_cell(3)) == 3);
}

TEST_CASE("tree enumeration counts are Catalan-like") {
    for (int d = 0; d <= 5; ++d) {
        int exact = 0;
        for (const ThetaCell& T : cells_up_to_degree(d))
            if (reedy_degree(T) == d) ++exact;
        static const int catalan[] = {1, 1, 2, 5, 14, 42};
        CHECK(exact == catalan[d]);
    }
    // depth-truncated enumeration excludes deep trees
    for (const ThetaCell& T : cells_up_to_degree(3, 1)) CHECK(tree_depth(T) <= 1);
}

TEST_CASE("wreath composition: identities, bases, associativity") {
    std::mt19937_64 rng(testing::seed_from_env());
    auto trees = cells_up_to_degree(4, 2);
    std::vector<ThetaCell> pool;
    for (const ThetaCell& T : trees)
        if (T.arity() <= 3) pool.push_back(T);

    std::uniform_int_distribution<size_t> dt(0, pool.size() - 1);
    int done = 0;
    while (done < 200) {
        const ThetaCell& A = pool[dt(rng)];
        const ThetaCell& B = pool[dt(rng)];
        const ThetaCell& C = pool[dt(rng)];
        const ThetaCell& D = pool[dt(rng)];
        const auto& fs = theta_hom(A, B);
        const auto& gs = theta_hom(B, C);
        const auto& hs = theta_hom(C, D);
        if (fs.empty() || gs.empty() || hs.empty()) continue;
        const ThetaMorphism& f = fs[std::uniform_int_distribution<size_t>(0, fs.size() - 1)(rng)];
        const ThetaMorphism& g = gs[std::uniform_int_distribution<size_t>(0, gs.size() - 1)(rng)];
        const ThetaMorphism& h = hs[std::uniform_int_distribution<size_t>(0, hs.size() - 1)(rng)];

        CHECK(wreath_compose(theta_identity(B), f) == f);
        CHECK(wreath_compose(f, theta_identity(A)) == f);
        ThetaMorphism lhs = wreath_compose(h, wreath_compose(g, f));
        ThetaMorphism rhs = wreath_compose(wreath_compose(h, g), f);
        CHECK(lhs == rhs);
        CHECK(lhs.base == compose(compose(f.base, g.base), h.base));
        ++done;
    }
}

TEST_CASE("classification") {
    ThetaCell g1 = delta_cell(1);

    ClassifyResult id = classify(theta_identity(g1));
    CHECK(id.iso);
    CHECK(id.cls == ThetaClass::Plus);

    // [0] -> [1];([0]) with base d^1 is plus
    ThetaMorphism d1;
    d1.src = theta_leaf();
    d1.tgt = g1;
    d1.base = SimplexMap{0, 1, {0}};
    ClassifyResult cd1 = classify(d1);
    CHECK(cd1.cls == ThetaClass::Plus);
    CHECK_FALSE(cd1.iso);

    // [1];([0]) -> [0] with base s^0 is minus
    ThetaMorphism s0;
    s0.src = g1;
    s0.tgt = theta_leaf();
    s0.base = SimplexMap{1, 0, {0, 0}};
    s0.comps = {{}};
    std::string why;
    REQUIRE_MESSAGE(validate_theta(s0, &why), why);
    ClassifyResult cs0 = classify(s0);
    CHECK(cs0.cls == ThetaClass::Minus);
    CHECK_FALSE(cs0.iso);
}

TEST_CASE("hyperfaces and inner faces") {
    // the 1-arrow has two endpoints, both outer
    auto hf1 = hyperfaces(delta_cell(1));
    CHECK(hf1.size() == 2);
    for (const ThetaMorphism& f : hf1) {
        CHECK(reedy_degree(f.src) == 0);
        CHECK_FALSE(is_inner(f));
    }

    // [2];([0],[0]) has an inner d^1-type face
    auto hf2 = hyperfaces(delta_cell(2));
    int inner = 0;
    for (const ThetaMorphism& f : hf2) {
        CHECK(reedy_degree(f.src) == reedy_degree(delta_cell(2)) - 1);
        if (is_inner(f)) {
            ++inner;
            CHECK(f.base.values == std::vector<int>{0, 2});
        }
    }
    CHECK(inner == 1);
}

TEST_CASE("horns and spines of the 2-simplex cell") {
    ThetaCell T = delta_cell(2);
    auto hf = hyperfaces(T);
    const ThetaMorphism* inner = nullptr;
    for (const ThetaMorphism& f : hf)
        if (is_inner(f)) inner = &f;
    REQUIRE(inner);

    ThetaSubfunctor H = horn(T, *inner, reedy_degree(T));
    CHECK(H.count_nondegenerate(delta_cell(1)) == 2);
    CHECK(H.count_nondegenerate(theta_leaf()) == 3);
    CHECK(H.count(theta_leaf()) == 3);

    ThetaSubfunctor V = spine(T, reedy_degree(T));
    CHECK(V.count_nondegenerate(delta_cell(1)) == 2);
    CHECK(V.count_nondegenerate(theta_leaf()) == 3);
    // the horn contains the spine strictly at the edge sort
    CHECK(H.count(delta_cell(1)) >= V.count(delta_cell(1)));
}

TEST_CASE("hyperface intersection inside [1];([1]) is two points") {
    ThetaCell T = theta_node({delta_cell(1)});
    auto hf = hyperfaces(T);
    // find the two faces of the shape [1];d^i : [1];([0]) -> [1];([1])
    std::vector<const ThetaMorphism*> picked;
    for (const ThetaMorphism& f : hf)
        if (f.src == delta_cell(1) && f.base == simplex_identity(1)) picked.push_back(&f);
    REQUIRE(picked.size() == 2);

    ThetaSubfunctor a = image_union(T, {*picked[0]}, reedy_degree(T));
    ThetaSubfunctor b = image_union(T, {*picked[1]}, reedy_degree(T));
    ThetaSubfunctor meet = intersect(a, b);
    CHECK(meet.count(theta_leaf()) == 2);
    CHECK(meet.count_nondegenerate(theta_leaf()) == 2);
    // nothing above the point sort
    for (const ThetaCell& R : meet.sorts)
        if (!(R == theta_leaf())) CHECK(meet.count_nondegenerate(R) == 0);
}

TEST_CASE("reedy degree is strictly monotone along the classes (degree <= 3)") {
    auto trees = cells_up_to_degree(3);
    for (const ThetaCell& S : trees)
        for (const ThetaCell& T : trees)
            for (const ThetaMorphism& f : theta_hom(S, T)) {
                ClassifyResult c = classify(f);
                if (c.iso) continue;
                if (c.cls == ThetaClass::Plus) CHECK(reedy_degree(S) < reedy_degree(T));
                if (c.cls == ThetaClass::Minus) CHECK(reedy_degree(S) > reedy_degree(T));
            }
}

TEST_CASE("every morphism factors minus-then-plus, essentially uniquely (degree <= 4)") {
    auto trees = cells_up_to_degree(4);
    for (const ThetaCell& S : trees)
        for (const ThetaCell& T : trees)
            for (const ThetaMorphism& f : theta_hom(S, T)) {
                auto fact = pm_factorizations(f);
                CHECK(fact.size() >= 1);
                // gauntness: the middle object is unique, and so is the pair
                std::set<std::string> mids;
                for (const auto& [e, m] : fact) mids.insert(encode(e.tgt));
                CHECK(mids.size() == 1);
                CHECK(fact.size() == 1);
            }
}

TEST_CASE("pasting diagrams and the shift") {
    CHECK(pasting_diagram_of(theta_node({theta_leaf()})) == PastingDiagram{{1}});
    CHECK(pasting_diagram_of(theta_node({theta_node({theta_leaf()}), theta_leaf()})) == PastingDiagram{{2, 0, 1}});
    CHECK(pasting_diagram_of(delta_cell(3)) == PastingDiagram{{1, 0, 1, 0, 1}});
    CHECK(pasting_diagram_of(globe_cell(2)) == PastingDiagram{{2}});
    CHECK(is_valid(pasting_diagram_of(delta_cell(3))));

    CHECK(shift_S(PastingDiagram{{1, 0, 1}}) == PastingDiagram{{2, 1, 2}});
    CHECK(shift_S(3LL) == 4);
    // Z-indexed pasting diagrams admit negative dimensions
    CHECK(is_valid(PastingDiagram{{-1, -2, 0}}));
}

TEST_CASE("nerves satisfy the Segal condition") {
    FiniteCategory term = terminal_category();
    TruncSSet nt = nerve_of_category(term, 4);
    CHECK(validate_trunc(nt));
    for (int n = 0; n <= 4; ++n) CHECK(nt.size[static_cast<size_t>(n)] == 1);
    CHECK(segal_check(nt, 4));

    FiniteCategory arrow = arrow_category();
    TruncSSet na = nerve_of_category(arrow, 4);
    CHECK(validate_trunc(na));
    CHECK(na.size[1] == 3);
    CHECK(na.size[2] == 4);  // composable 2-strings, by enumeration
    CHECK(segal_check(na, 4));

    FiniteCategory chain = chain_category(2);
    TruncSSet nc = nerve_of_category(chain, 4);
    CHECK(validate_trunc(nc));
    CHECK(segal_check(nc, 4));
}

TEST_CASE("orthogonality against spines and inner horns") {
    std::vector<TruncInclusion> spines, horns;
    for (int n = 2; n <= 4; ++n) spines.push_back(spine_inclusion(n, 4));
    for (int n = 2; n <= 3; ++n)
        for (int k = 1; k < n; ++k) horns.push_back(horn_inclusion(n, k, 4));

    for (const FiniteCategory& C : {terminal_category(), arrow_category(), chain_category(2), iso_category()}) {
        TruncSSet N = nerve_of_category(C, 4);
        OrthReport rs = orthogonal_to(N, spines);
        CHECK(rs.orthogonal);
        OrthReport rh = orthogonal_to(N, horns);
        CHECK(rh.orthogonal);
    }
}

TEST_CASE("a doubled filler breaks the Segal condition and orthogonality") {
    FiniteCategory arrow = arrow_category();
    TruncSSet N = nerve_of_category(arrow, 4);
    TruncSSet bad = duplicate_top_cell(N, 0);
    CHECK(validate_trunc(bad));
    CHECK_FALSE(segal_check(bad, 4));
    std::vector<TruncInclusion> spines{spine_inclusion(4, 4)};
    OrthReport r = orthogonal_to(bad, spines);
    CHECK_FALSE(r.orthogonal);
}
