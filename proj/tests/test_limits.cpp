#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kanspec/limits_lab.hpp"
#include "test_support.hpp"

using namespace kanspec;

namespace {

// close a generator assignment (per non-identity arrow) into a full diagram
CatDiagram make_diagram(const FiniteCategory& J, std::vector<FiniteCategory> values,
                        const std::map<int, FiniteFunctor>& gens) {
    CatDiagram X;
    X.J = J;
    X.value = std::move(values);
    X.arrow.resize(static_cast<size_t>(J.n_arr()));
    std::vector<bool> have(static_cast<size_t>(J.n_arr()), false);
    for (int j = 0; j < J.n_obj; ++j) {
        X.arrow[static_cast<size_t>(J.ident[static_cast<size_t>(j)])] = identity_functor(X.value[static_cast<size_t>(j)]);
        have[static_cast<size_t>(J.ident[static_cast<size_t>(j)])] = true;
    }
    for (auto& [f, F] : gens) {
        X.arrow[static_cast<size_t>(f)] = F;
        have[static_cast<size_t>(f)] = true;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int f = 0; f < J.n_arr(); ++f)
            for (int g = 0; g < J.n_arr(); ++g) {
                if (J.tgt(f) != J.src(g) || !have[static_cast<size_t>(f)] || !have[static_cast<size_t>(g)]) continue;
                int fg = J.compose(f, g);
                if (have[static_cast<size_t>(fg)]) continue;
                X.arrow[static_cast<size_t>(fg)] = compose_functors(X.arrow[static_cast<size_t>(f)], X.arrow[static_cast<size_t>(g)]);
                have[static_cast<size_t>(fg)] = true;
                changed = true;
            }
    }
    std::string why;
    REQUIRE_MESSAGE(validate_cat_diagram(X, &why), why);
    return X;
}

CatDiagram constant_diagram(const FiniteCategory& J, const FiniteCategory& C) {
    CatDiagram X;
    X.J = J;
    for (int j = 0; j < J.n_obj; ++j) X.value.push_back(C);
    for (int f = 0; f < J.n_arr(); ++f) X.arrow.push_back(identity_functor(C));
    return X;
}

// the parallel-pair counterexample: X(0) = terminal, X(1) = the walking iso
CatDiagram counterexample_diagram() {
    FiniteCategory J = parallel_pair_category();
    FiniteCategory pt = terminal_category();
    FiniteCategory I = iso_category();
    FiniteFunctor s, t;
    s.obj = {0};
    s.arr = {I.ident[0]};
    t.obj = {1};
    t.arr = {I.ident[1]};
    std::map<int, FiniteFunctor> gens{{2, s}, {3, t}};  // arrows s=2, t=3 by construction
    return make_diagram(J, {pt, I}, gens);
}

}  // namespace

TEST_CASE("strict and oplax limits of simple diagrams") {
    // constant terminal diagram over a chain: both limits are terminal
    FiniteCategory J = chain_category(2);
    CatDiagram X = constant_diagram(J, terminal_category());
    StrictLimitResult S = strict_limit(X);
    CHECK(S.cat.n_obj == 1);
    CHECK(S.cat.n_arr() == 1);
    OplaxLimitResult O = oplax_limit_explicit(X);
    CHECK(O.cat.n_obj == 1);
    CHECK(O.cat.n_arr() == 1);
    CHECK(validate(S.cat));
    CHECK(validate(O.cat));
}

TEST_CASE("oplax limit over a single arrow counts comma-style objects") {
    // J = 0 -> 1, X_0 = X_1 = the walking arrow; objects are triples
    // (x_0, x_1, x_1 -> F x_0)
    FiniteCategory J = arrow_category();
    FiniteCategory A = arrow_category();
    std::map<int, FiniteFunctor> gens;
    gens[J.hom(0, 1)[0]] = identity_functor(A);
    CatDiagram X = make_diagram(J, {A, A}, gens);
    OplaxLimitResult O = oplax_limit_explicit(X);
    int expect = 0;
    for (int a = 0; a < A.n_obj; ++a)
        for (int b = 0; b < A.n_obj; ++b) expect += static_cast<int>(A.hom(b, a).size());
    CHECK(O.cat.n_obj == expect);
    CHECK(validate(O.cat));
}

TEST_CASE("oplax weight: slices with opposite orientation") {
    FiniteCategory J1 = terminal_category();
    OplaxWeightResult W1 = oplax_weight(J1);
    CHECK(W1.W.value[0].n_obj == 1);

    FiniteCategory J = arrow_category();
    OplaxWeightResult W = oplax_weight(J);
    CHECK(W.W.value[0].n_obj == 1);   // only id_0 maps into 0
    CHECK(W.W.value[1].n_obj == 2);   // id_1 and the arrow
    std::string why;
    REQUIRE_MESSAGE(validate_cat_diagram(W.W, &why), why);

    for (const FiniteCategory& shape : {chain_category(2), parallel_pair_category()}) {
        OplaxWeightResult WW = oplax_weight(shape);
        REQUIRE_MESSAGE(validate_cat_diagram(WW.W, &why), why);
        for (int j = 0; j < shape.n_obj; ++j) {
            int arrows_into = 0;
            for (int f = 0; f < shape.n_arr(); ++f)
                if (shape.tgt(f) == j) ++arrows_into;
            CHECK(WW.W.value[static_cast<size_t>(j)].n_obj == arrows_into);
        }
    }
}

TEST_CASE("weighted limit with the terminal weight is the strict limit") {
    std::vector<CatDiagram> corpus;
    corpus.push_back(constant_diagram(chain_category(1), arrow_category()));
    corpus.push_back(constant_diagram(parallel_pair_category(), preorder_category(3, {{0, 1}, {1, 2}})));
    {
        FiniteCategory J = arrow_category();
        FiniteCategory A = preorder_category(2, {{0, 1}});
        FiniteFunctor F;  // collapse to the top
        F.obj = {1, 1};
        F.arr = {A.ident[1], A.ident[1], A.ident[1]};
        std::map<int, FiniteFunctor> gens{{J.hom(0, 1)[0], F}};
        corpus.push_back(make_diagram(J, {A, A}, gens));
    }
    for (const CatDiagram& X : corpus) {
        WeightedLimitResult WL = weighted_limit(terminal_weight(X.J), X);
        StrictLimitResult S = strict_limit(X);
        CHECK(validate(WL.cat));
        CHECK(categories_isomorphic(WL.cat, S.cat));
    }
}

TEST_CASE("the oplax weight computes the explicit oplax limit") {
    std::vector<CatDiagram> corpus;
    corpus.push_back(constant_diagram(terminal_category(), arrow_category()));
    corpus.push_back(constant_diagram(arrow_category(), arrow_category()));
    corpus.push_back(constant_diagram(chain_category(2), preorder_category(2, {{0, 1}})));
    {
        FiniteCategory J = arrow_category();
        FiniteCategory A = preorder_category(3, {{0, 1}, {0, 2}});
        FiniteFunctor F;
        F.obj = {0, 0, 0};
        F.arr.assign(static_cast<size_t>(A.n_arr()), A.ident[0]);
        std::map<int, FiniteFunctor> gens{{J.hom(0, 1)[0], F}};
        corpus.push_back(make_diagram(J, {A, A}, gens));
    }
    corpus.push_back(counterexample_diagram());
    for (const CatDiagram& X : corpus) {
        OplaxWeightResult W = oplax_weight(X.J);
        WeightedLimitResult WL = weighted_limit(W.W, X);
        OplaxLimitResult O = oplax_limit_explicit(X);
        CHECK(validate(WL.cat));
        CHECK(validate(O.cat));
        CHECK_MESSAGE(categories_isomorphic(WL.cat, O.cat), "objects: ", WL.cat.n_obj, " vs ", O.cat.n_obj);
    }
}

TEST_CASE("the fibrancy counterexample") {
    CatDiagram X = counterexample_diagram();

    StrictLimitResult S = strict_limit(X);
    CHECK(S.cat.n_obj == 0);

    WeightedLimitResult WL = weighted_limit(X, X);  // self-weighted
    CHECK(WL.cat.n_obj == 1);
    CHECK(WL.cat.n_arr() == 1);

    SpectrReport rep = check_spectrification_hypotheses(X, X);
    CHECK(rep.inverse_shape);
    CHECK_FALSE(rep.fibrant);
    CHECK(rep.colimits_exist);
    CHECK(rep.preserved);
    CHECK(rep.weights_final);
    bool flagged = false;
    for (const std::string& n : rep.notes)
        if (n.find("iso-fibration") != std::string::npos) flagged = true;
    CHECK(flagged);
}

TEST_CASE("constant diagrams with finite colimits pass all hypotheses") {
    FiniteCategory J = chain_category(2);
    FiniteCategory lattice = preorder_category(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    CatDiagram X = constant_diagram(J, lattice);
    OplaxWeightResult W = oplax_weight(J);
    SpectrReport rep = check_spectrification_hypotheses(W.W, X);
    for (const std::string& n : rep.notes) MESSAGE(n);
    CHECK(rep.all());
}

TEST_CASE("non-final weight arrows are flagged") {
    FiniteCategory J = arrow_category();
    // weight with W_0 the point, W_1 two disconnected points
    CatDiagram W;
    W.J = J;
    W.value = {terminal_category(), discrete_category(2)};
    FiniteFunctor incl;
    incl.obj = {0};
    incl.arr = {0};
    W.arrow.resize(static_cast<size_t>(J.n_arr()));
    W.arrow[static_cast<size_t>(J.ident[0])] = identity_functor(W.value[0]);
    W.arrow[static_cast<size_t>(J.ident[1])] = identity_functor(W.value[1]);
    W.arrow[static_cast<size_t>(J.hom(0, 1)[0])] = incl;
    std::string why;
    REQUIRE_MESSAGE(validate_cat_diagram(W, &why), why);

    CatDiagram X = constant_diagram(J, preorder_category(2, {{0, 1}}));
    SpectrReport rep = check_spectrification_hypotheses(W, X);
    CHECK_FALSE(rep.weights_final);
}

TEST_CASE("spectrification adjoint on passing diagrams") {
    std::vector<CatDiagram> corpus;
    corpus.push_back(constant_diagram(chain_category(1), preorder_category(2, {{0, 1}})));
    corpus.push_back(constant_diagram(chain_category(2), preorder_category(2, {{0, 1}})));
    {
        FiniteCategory J = chain_category(1);
        FiniteCategory A = preorder_category(2, {{0, 1}});
        FiniteFunctor F;  // collapse to the top element (join-preserving)
        F.obj = {1, 1};
        F.arr = {A.ident[1], A.ident[1], A.ident[1]};
        std::map<int, FiniteFunctor> gens{{J.hom(0, 1)[0], F}};
        corpus.push_back(make_diagram(J, {A, A}, gens));
    }
    for (const CatDiagram& X : corpus) {
        OplaxWeightResult W = oplax_weight(X.J);
        SpectrReport rep = check_spectrification_hypotheses(W.W, X);
        for (const std::string& n : rep.notes) MESSAGE(n);
        REQUIRE(rep.all());
        SpectrificationResult sp = spectrification_adjoint(W.W, X);
        CHECK_MESSAGE(sp.ok, sp.detail);
    }
}

TEST_CASE("the category-isomorphism checker never equates different sizes") {
    CHECK_FALSE(categories_isomorphic(terminal_category(), arrow_category()));
    CHECK_FALSE(categories_isomorphic(arrow_category(), iso_category()));
    CHECK_FALSE(categories_isomorphic(discrete_category(2), arrow_category()));
    CHECK(categories_isomorphic(chain_category(1), arrow_category()));
    // parallel pair and iso category share counts but differ structurally
    CHECK_FALSE(categories_isomorphic(parallel_pair_category(), iso_category()));
}

TEST_CASE("comma limits: identity over the terminal category") {
    FiniteCategory pt = terminal_category();
    FiniteFunctor idf = identity_functor(pt);
    CommaCategory K = slice_comma(pt, pt, idf);
    CHECK(K.cat.n_obj == 1);
    DiagramInCat D{terminal_category(), {0}, {K.cat.ident[0]}};
    CommaLimitReport rep = comma_limit_check(pt, pt, idf, D);
    CHECK(rep.ok);
}

TEST_CASE("comma limits: products over the identity of a lattice") {
    FiniteCategory L = preorder_category(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    FiniteFunctor idf = identity_functor(L);
    CommaCategory K = slice_comma(L, L, idf);

    // a discrete 2-diagram on two comma objects
    for (int o1 = 0; o1 < K.cat.n_obj; ++o1)
        for (int o2 = 0; o2 < K.cat.n_obj; ++o2) {
            FiniteCategory I = discrete_category(2);
            DiagramInCat D{I, {o1, o2}, {K.cat.ident[static_cast<size_t>(o1)], K.cat.ident[static_cast<size_t>(o2)]}};
            CommaLimitReport rep = comma_limit_check(L, L, idf, D);
            CHECK_MESSAGE(rep.ok, rep.detail);
        }
}

TEST_CASE("comma limits: equalizer-ish shape over a right adjoint of lattices") {
    FiniteCategory B = chain_category(2);  // 0 <= 1 <= 2
    FiniteCategory C = chain_category(1);  // 0 <= 1
    FiniteFunctor R;                        // min(x, 1): a right adjoint
    R.obj = {0, 1, 1};
    R.arr.resize(static_cast<size_t>(B.n_arr()));
    for (int f = 0; f < B.n_arr(); ++f) {
        int s = R.obj[static_cast<size_t>(B.src(f))];
        int t = R.obj[static_cast<size_t>(B.tgt(f))];
        R.arr[static_cast<size_t>(f)] = C.hom(s, t)[0];
    }
    std::string why;
    REQUIRE_MESSAGE(validate_functor(B, C, R, &why), why);

    CommaCategory K = slice_comma(C, B, R);
    // arrow-shaped diagrams
    int checked = 0;
    for (int e = 0; e < K.cat.n_arr() && checked < 10; ++e) {
        FiniteCategory I = arrow_category();
        DiagramInCat D{I, {K.cat.src(e), K.cat.tgt(e)}, {}};
        D.arr.resize(static_cast<size_t>(I.n_arr()));
        D.arr[static_cast<size_t>(I.ident[0])] = K.cat.ident[static_cast<size_t>(K.cat.src(e))];
        D.arr[static_cast<size_t>(I.ident[1])] = K.cat.ident[static_cast<size_t>(K.cat.tgt(e))];
        D.arr[static_cast<size_t>(I.hom(0, 1)[0])] = e;
        CommaLimitReport rep = comma_limit_check(C, B, R, D);
        CHECK_MESSAGE(rep.ok, rep.detail);
        ++checked;
    }
    CHECK(checked > 0);
}
