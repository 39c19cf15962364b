#include "kanspec/fincat.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace kanspec {

std::vector<int> FiniteCategory::hom(int a, int b) const {
    std::vector<int> out;
    for (int f = 0; f < n_arr(); ++f)
        if (src(f) == a && tgt(f) == b) out.push_back(f);
    return out;
}

bool FiniteCategory::is_iso_arrow(int f) const {
    for (int g : hom(tgt(f), src(f)))
        if (compose(f, g) == ident[static_cast<size_t>(src(f))] && compose(g, f) == ident[static_cast<size_t>(tgt(f))])
            return true;
    return false;
}

bool validate(const FiniteCategory& C, std::string* why) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    if (C.n_obj < 0) return fail("negative object count");
    if (static_cast<int>(C.ident.size()) != C.n_obj) return fail("identity table size");
    if (C.comp_table.size() != C.arrows.size()) return fail("composition table size");
    for (const auto& row : C.comp_table)
        if (row.size() != C.arrows.size()) return fail("composition table row size");
    for (const auto& a : C.arrows)
        if (a.src < 0 || a.src >= C.n_obj || a.tgt < 0 || a.tgt >= C.n_obj) return fail("arrow endpoint out of range");
    for (int x = 0; x < C.n_obj; ++x) {
        int i = C.ident[static_cast<size_t>(x)];
        if (i < 0 || i >= C.n_arr() || C.src(i) != x || C.tgt(i) != x) return fail("bad identity");
    }
    for (int f = 0; f < C.n_arr(); ++f)
        for (int g = 0; g < C.n_arr(); ++g) {
            int c = C.compose(f, g);
            if (C.tgt(f) != C.src(g)) {
                if (c != -1) return fail("composite defined for non-composable pair");
                continue;
            }
            if (c < 0 || c >= C.n_arr()) return fail("missing composite");
            if (C.src(c) != C.src(f) || C.tgt(c) != C.tgt(g)) return fail("composite endpoints wrong");
        }
    for (int f = 0; f < C.n_arr(); ++f) {
        if (C.compose(C.ident[static_cast<size_t>(C.src(f))], f) != f) return fail("left identity law");
        if (C.compose(f, C.ident[static_cast<size_t>(C.tgt(f))]) != f) return fail("right identity law");
    }
    for (int f = 0; f < C.n_arr(); ++f)
        for (int g = 0; g < C.n_arr(); ++g) {
            if (C.tgt(f) != C.src(g)) continue;
            for (int h = 0; h < C.n_arr(); ++h) {
                if (C.tgt(g) != C.src(h)) continue;
                if (C.compose(C.compose(f, g), h) != C.compose(f, C.compose(g, h))) return fail("associativity");
            }
        }
    return true;
}

void check_validated(const FiniteCategory& C, const char* where) {
    std::string why;
    if (!validate(C, &why)) throw std::invalid_argument(std::string(where) + ": " + why);
}

namespace {

FiniteCategory finish_category(int n_obj, std::vector<FiniteCategory::Arrow> arrows,
                               std::function<int(int, int)> comp) {
    FiniteCategory C;
    C.n_obj = n_obj;
    C.arrows = std::move(arrows);
    C.ident.resize(static_cast<size_t>(n_obj), -1);
    for (int f = 0; f < C.n_arr(); ++f)
        if (C.arrows[static_cast<size_t>(f)].name == "id" + std::to_string(C.src(f)) && C.src(f) == C.tgt(f))
            C.ident[static_cast<size_t>(C.src(f))] = f;
    C.comp_table.assign(C.arrows.size(), std::vector<int>(C.arrows.size(), -1));
    for (int f = 0; f < C.n_arr(); ++f)
        for (int g = 0; g < C.n_arr(); ++g)
            if (C.tgt(f) == C.src(g)) C.comp_table[static_cast<size_t>(g)][static_cast<size_t>(f)] = comp(f, g);
    return C;
}

}  // namespace

FiniteCategory discrete_category(int n) {
    std::vector<FiniteCategory::Arrow> arrows;
    for (int i = 0; i < n; ++i) arrows.push_back({i, i, "id" + std::to_string(i)});
    return finish_category(n, arrows, [](int f, int g) {
        (void)g;
        return f;
    });
}

FiniteCategory terminal_category() { return discrete_category(1); }

FiniteCategory arrow_category() {
    return preorder_category(2, {{0, 1}});
}

FiniteCategory iso_category() {
    std::vector<FiniteCategory::Arrow> arrows = {{0, 0, "id0"}, {1, 1, "id1"}, {0, 1, "u"}, {1, 0, "v"}};
    return finish_category(2, arrows, [&](int f, int g) {
        // composition in the contractible groupoid is determined by endpoints
        int s = arrows[static_cast<size_t>(f)].src;
        int t = arrows[static_cast<size_t>(g)].tgt;
        if (s == 0 && t == 0) return 0;
        if (s == 1 && t == 1) return 1;
        if (s == 0 && t == 1) return 2;
        return 3;
    });
}

FiniteCategory parallel_pair_category() {
    std::vector<FiniteCategory::Arrow> arrows = {{0, 0, "id0"}, {1, 1, "id1"}, {0, 1, "s"}, {0, 1, "t"}};
    return finish_category(2, arrows, [&](int f, int g) {
        if (arrows[static_cast<size_t>(f)].src == arrows[static_cast<size_t>(f)].tgt) return g;
        return f;
    });
}

FiniteCategory chain_category(int n) {
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < n; ++i) rel.push_back({i, i + 1});
    return preorder_category(n + 1, rel);
}

FiniteCategory preorder_category(int n, const std::vector<std::pair<int, int>>& relations) {
    std::vector<std::vector<bool>> le(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
    for (int i = 0; i < n; ++i) le[static_cast<size_t>(i)][static_cast<size_t>(i)] = true;
    for (auto [a, b] : relations) le[static_cast<size_t>(a)][static_cast<size_t>(b)] = true;
    for (bool changed = true; changed;) {
        changed = false;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (le[static_cast<size_t>(a)][static_cast<size_t>(b)] &&
                        le[static_cast<size_t>(b)][static_cast<size_t>(c)] &&
                        !le[static_cast<size_t>(a)][static_cast<size_t>(c)]) {
                        le[static_cast<size_t>(a)][static_cast<size_t>(c)] = true;
                        changed = true;
                    }
    }
    std::vector<FiniteCategory::Arrow> arrows;
    std::map<std::pair<int, int>, int> idx;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (le[static_cast<size_t>(a)][static_cast<size_t>(b)]) {
                idx[{a, b}] = static_cast<int>(arrows.size());
                arrows.push_back({a, b, a == b ? "id" + std::to_string(a) : "le" + std::to_string(a) + std::to_string(b)});
            }
    return finish_category(n, arrows, [&, idx](int f, int g) {
        return idx.at({arrows[static_cast<size_t>(f)].src, arrows[static_cast<size_t>(g)].tgt});
    });
}

bool validate_functor(const FiniteCategory& C, const FiniteCategory& D, const FiniteFunctor& F, std::string* why) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    if (static_cast<int>(F.obj.size()) != C.n_obj || static_cast<int>(F.arr.size()) != C.n_arr())
        return fail("functor table sizes");
    for (int x : F.obj)
        if (x < 0 || x >= D.n_obj) return fail("object image out of range");
    for (int f = 0; f < C.n_arr(); ++f) {
        int g = F.arr[static_cast<size_t>(f)];
        if (g < 0 || g >= D.n_arr()) return fail("arrow image out of range");
        if (D.src(g) != F.obj[static_cast<size_t>(C.src(f))] || D.tgt(g) != F.obj[static_cast<size_t>(C.tgt(f))])
            return fail("arrow image endpoints");
    }
    for (int x = 0; x < C.n_obj; ++x)
        if (F.arr[static_cast<size_t>(C.ident[static_cast<size_t>(x)])] !=
            D.ident[static_cast<size_t>(F.obj[static_cast<size_t>(x)])])
            return fail("identities not preserved");
    for (int f = 0; f < C.n_arr(); ++f)
        for (int g = 0; g < C.n_arr(); ++g) {
            if (C.tgt(f) != C.src(g)) continue;
            if (F.arr[static_cast<size_t>(C.compose(f, g))] !=
                D.compose(F.arr[static_cast<size_t>(f)], F.arr[static_cast<size_t>(g)]))
                return fail("composition not preserved");
        }
    return true;
}

FiniteFunctor identity_functor(const FiniteCategory& C) {
    FiniteFunctor F;
    F.obj.resize(static_cast<size_t>(C.n_obj));
    std::iota(F.obj.begin(), F.obj.end(), 0);
    F.arr.resize(static_cast<size_t>(C.n_arr()));
    std::iota(F.arr.begin(), F.arr.end(), 0);
    return F;
}

FiniteFunctor compose_functors(const FiniteFunctor& F, const FiniteFunctor& G) {
    FiniteFunctor H;
    for (int x : F.obj) H.obj.push_back(G.obj[static_cast<size_t>(x)]);
    for (int f : F.arr) H.arr.push_back(G.arr[static_cast<size_t>(f)]);
    return H;
}

bool validate_nat(const FiniteCategory& C, const FiniteCategory& D, const FiniteFunctor& F, const FiniteFunctor& G,
                  const FiniteNatTrans& t, std::string* why) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    if (static_cast<int>(t.comp.size()) != C.n_obj) return fail("component count");
    for (int x = 0; x < C.n_obj; ++x) {
        int a = t.comp[static_cast<size_t>(x)];
        if (a < 0 || a >= D.n_arr()) return fail("component out of range");
        if (D.src(a) != F.obj[static_cast<size_t>(x)] || D.tgt(a) != G.obj[static_cast<size_t>(x)])
            return fail("component endpoints");
    }
    for (int f = 0; f < C.n_arr(); ++f) {
        int x = C.src(f), y = C.tgt(f);
        int lhs = D.compose(F.arr[static_cast<size_t>(f)], t.comp[static_cast<size_t>(y)]);
        int rhs = D.compose(t.comp[static_cast<size_t>(x)], G.arr[static_cast<size_t>(f)]);
        if (lhs != rhs) return fail("naturality square");
    }
    return true;
}

std::vector<FiniteFunctor> all_functors(const FiniteCategory& C, const FiniteCategory& D) {
    std::vector<FiniteFunctor> out;
    FiniteFunctor F;
    F.obj.assign(static_cast<size_t>(C.n_obj), 0);
    F.arr.assign(static_cast<size_t>(C.n_arr()), -1);

    std::function<void(int)> arrows_rec = [&](int f) {
        if (f == C.n_arr()) {
            std::string why;
            if (validate_functor(C, D, F, &why)) out.push_back(F);
            return;
        }
        if (C.src(f) == C.tgt(f) && C.ident[static_cast<size_t>(C.src(f))] == f) {
            F.arr[static_cast<size_t>(f)] = D.ident[static_cast<size_t>(F.obj[static_cast<size_t>(C.src(f))])];
            arrows_rec(f + 1);
            F.arr[static_cast<size_t>(f)] = -1;
            return;
        }
        for (int g : D.hom(F.obj[static_cast<size_t>(C.src(f))], F.obj[static_cast<size_t>(C.tgt(f))])) {
            F.arr[static_cast<size_t>(f)] = g;
            arrows_rec(f + 1);
        }
        F.arr[static_cast<size_t>(f)] = -1;
    };
    std::function<void(int)> obj_rec = [&](int x) {
        if (x == C.n_obj) {
            arrows_rec(0);
            return;
        }
        for (int y = 0; y < D.n_obj; ++y) {
            F.obj[static_cast<size_t>(x)] = y;
            obj_rec(x + 1);
        }
    };
    if (C.n_obj == 0) return {FiniteFunctor{}};
    obj_rec(0);
    return out;
}

std::vector<FiniteNatTrans> all_nat_trans(const FiniteCategory& C, const FiniteCategory& D, const FiniteFunctor& F,
                                          const FiniteFunctor& G) {
    std::vector<FiniteNatTrans> out;
    FiniteNatTrans t;
    t.comp.assign(static_cast<size_t>(C.n_obj), -1);
    std::function<void(int)> rec = [&](int x) {
        if (x == C.n_obj) {
            std::string why;
            if (validate_nat(C, D, F, G, t, &why)) out.push_back(t);
            return;
        }
        for (int a : D.hom(F.obj[static_cast<size_t>(x)], G.obj[static_cast<size_t>(x)])) {
            t.comp[static_cast<size_t>(x)] = a;
            rec(x + 1);
        }
        t.comp[static_cast<size_t>(x)] = -1;
    };
    rec(0);
    return out;
}

int FunctorCategory::find_object(const FiniteFunctor& F) const {
    for (size_t i = 0; i < objs.size(); ++i)
        if (objs[i].obj == F.obj && objs[i].arr == F.arr) return static_cast<int>(i);
    return -1;
}

FunctorCategory functor_category(const FiniteCategory& C, const FiniteCategory& D) {
    FunctorCategory FC;
    FC.objs = all_functors(C, D);
    std::vector<FiniteCategory::Arrow> arrows;
    std::map<std::tuple<int, int, std::vector<int>>, int> idx;
    for (size_t i = 0; i < FC.objs.size(); ++i)
        for (size_t j = 0; j < FC.objs.size(); ++j)
            for (const FiniteNatTrans& t : all_nat_trans(C, D, FC.objs[i], FC.objs[j])) {
                idx[{static_cast<int>(i), static_cast<int>(j), t.comp}] = static_cast<int>(arrows.size());
                FC.arrs.push_back({static_cast<int>(i), static_cast<int>(j), t});
                std::string nm = (i == j && [&] {
                                     for (int x = 0; x < C.n_obj; ++x)
                                         if (t.comp[static_cast<size_t>(x)] !=
                                             D.ident[static_cast<size_t>(FC.objs[i].obj[static_cast<size_t>(x)])])
                                             return false;
                                     return true;
                                 }())
                                    ? "id" + std::to_string(i)
                                    : "n" + std::to_string(arrows.size());
                arrows.push_back({static_cast<int>(i), static_cast<int>(j), nm});
            }
    FC.cat.n_obj = static_cast<int>(FC.objs.size());
    FC.cat.arrows = arrows;
    FC.cat.ident.assign(FC.objs.size(), -1);
    for (size_t a = 0; a < arrows.size(); ++a)
        if (arrows[a].name == "id" + std::to_string(arrows[a].src) && arrows[a].src == arrows[a].tgt)
            FC.cat.ident[static_cast<size_t>(arrows[a].src)] = static_cast<int>(a);
    FC.cat.comp_table.assign(arrows.size(), std::vector<int>(arrows.size(), -1));
    for (size_t f = 0; f < arrows.size(); ++f)
        for (size_t g = 0; g < arrows.size(); ++g) {
            if (arrows[f].tgt != arrows[g].src) continue;
            FiniteNatTrans c;
            for (int x = 0; x < C.n_obj; ++x)
                c.comp.push_back(D.compose(FC.arrs[f].nat.comp[static_cast<size_t>(x)],
                                           FC.arrs[g].nat.comp[static_cast<size_t>(x)]));
            FC.cat.comp_table[g][f] = idx.at({arrows[f].src, arrows[g].tgt, c.comp});
        }
    return FC;
}

bool validate_diagram(const FiniteCategory& C, const DiagramInCat& D, std::string* why) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    if (static_cast<int>(D.obj.size()) != D.I.n_obj || static_cast<int>(D.arr.size()) != D.I.n_arr())
        return fail("diagram table sizes");
    FiniteFunctor F{D.obj, D.arr};
    std::string inner;
    if (!validate_functor(D.I, C, F, &inner)) return fail(inner);
    return true;
}

std::vector<Cone> all_cones(const FiniteCategory& C, const DiagramInCat& D) {
    std::vector<Cone> out;
    for (int apex = 0; apex < C.n_obj; ++apex) {
        Cone cone;
        cone.apex = apex;
        cone.legs.assign(static_cast<size_t>(D.I.n_obj), -1);
        std::function<void(int)> rec = [&](int i) {
            if (i == D.I.n_obj) {
                for (int f = 0; f < D.I.n_arr(); ++f) {
                    int a = D.I.src(f), b = D.I.tgt(f);
                    if (C.compose(cone.legs[static_cast<size_t>(a)], D.arr[static_cast<size_t>(f)]) !=
                        cone.legs[static_cast<size_t>(b)])
                        return;
                }
                out.push_back(cone);
                return;
            }
            for (int leg : C.hom(apex, D.obj[static_cast<size_t>(i)])) {
                cone.legs[static_cast<size_t>(i)] = leg;
                rec(i + 1);
            }
            cone.legs[static_cast<size_t>(i)] = -1;
        };
        rec(0);
    }
    return out;
}

std::vector<Cone> all_cocones(const FiniteCategory& C, const DiagramInCat& D) {
    std::vector<Cone> out;
    for (int apex = 0; apex < C.n_obj; ++apex) {
        Cone cone;
        cone.apex = apex;
        cone.legs.assign(static_cast<size_t>(D.I.n_obj), -1);
        std::function<void(int)> rec = [&](int i) {
            if (i == D.I.n_obj) {
                for (int f = 0; f < D.I.n_arr(); ++f) {
                    int a = D.I.src(f), b = D.I.tgt(f);
                    if (C.compose(D.arr[static_cast<size_t>(f)], cone.legs[static_cast<size_t>(b)]) !=
                        cone.legs[static_cast<size_t>(a)])
                        return;
                }
                out.push_back(cone);
                return;
            }
            for (int leg : C.hom(D.obj[static_cast<size_t>(i)], apex)) {
                cone.legs[static_cast<size_t>(i)] = leg;
                rec(i + 1);
            }
            cone.legs[static_cast<size_t>(i)] = -1;
        };
        rec(0);
    }
    return out;
}

namespace {

// number of cone morphisms from a to b (arrows apex_a -> apex_b commuting
// with all legs); direction flips for cocones
int cone_morphisms(const FiniteCategory& C, const Cone& a, const Cone& b, bool cocone) {
    int count = 0;
    if (!cocone) {
        for (int f : C.hom(a.apex, b.apex)) {
            bool ok = true;
            for (size_t i = 0; i < a.legs.size() && ok; ++i)
                ok = C.compose(f, b.legs[i]) == a.legs[i];
            if (ok) ++count;
        }
    } else {
        for (int f : C.hom(a.apex, b.apex)) {
            bool ok = true;
            for (size_t i = 0; i < a.legs.size() && ok; ++i)
                ok = C.compose(a.legs[i], f) == b.legs[i];
            if (ok) ++count;
        }
    }
    return count;
}

}  // namespace

std::optional<Cone> limit_of(const FiniteCategory& C, const DiagramInCat& D) {
    auto cones = all_cones(C, D);
    for (const Cone& c : cones) {
        bool terminal = true;
        for (const Cone& o : cones)
            if (cone_morphisms(C, o, c, false) != 1) {
                terminal = false;
                break;
            }
        if (terminal) return c;
    }
    return std::nullopt;
}

std::optional<Cone> colimit_of(const FiniteCategory& C, const DiagramInCat& D) {
    auto cones = all_cocones(C, D);
    for (const Cone& c : cones) {
        bool initial = true;
        for (const Cone& o : cones)
            if (cone_morphisms(C, c, o, true) != 1) {
                initial = false;
                break;
            }
        if (initial) return c;
    }
    return std::nullopt;
}

bool is_initial_object(const FiniteCategory& C, int x) {
    for (int y = 0; y < C.n_obj; ++y)
        if (C.hom(x, y).size() != 1) return false;
    return true;
}

bool is_terminal_object(const FiniteCategory& C, int x) {
    for (int y = 0; y < C.n_obj; ++y)
        if (C.hom(y, x).size() != 1) return false;
    return true;
}

bool is_connected(const FiniteCategory& C) {
    if (C.n_obj == 0) return false;
    std::vector<bool> seen(static_cast<size_t>(C.n_obj), false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int f = 0; f < C.n_arr(); ++f) {
            int other = -1;
            if (C.src(f) == x) other = C.tgt(f);
            if (C.tgt(f) == x) other = C.src(f);
            if (other >= 0 && !seen[static_cast<size_t>(other)]) {
                seen[static_cast<size_t>(other)] = true;
                stack.push_back(other);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool categories_isomorphic(const FiniteCategory& A, const FiniteCategory& B) {
    if (A.n_obj != B.n_obj || A.n_arr() != B.n_arr()) return false;
    std::vector<int> omap(static_cast<size_t>(A.n_obj), -1);
    std::vector<bool> oused(static_cast<size_t>(B.n_obj), false);
    std::vector<int> amap(static_cast<size_t>(A.n_arr()), -1);
    std::vector<bool> aused(static_cast<size_t>(B.n_arr()), false);

    std::function<bool(int)> arrows_rec = [&](int f) -> bool {
        if (f == A.n_arr()) {
            for (int p = 0; p < A.n_arr(); ++p)
                for (int q = 0; q < A.n_arr(); ++q) {
                    if (A.tgt(p) != A.src(q)) continue;
                    if (amap[static_cast<size_t>(A.compose(p, q))] !=
                        B.compose(amap[static_cast<size_t>(p)], amap[static_cast<size_t>(q)]))
                        return false;
                }
            return true;
        }
        for (int g = 0; g < B.n_arr(); ++g) {
            if (aused[static_cast<size_t>(g)]) continue;
            if (B.src(g) != omap[static_cast<size_t>(A.src(f))] || B.tgt(g) != omap[static_cast<size_t>(A.tgt(f))])
                continue;
            amap[static_cast<size_t>(f)] = g;
            aused[static_cast<size_t>(g)] = true;
            if (arrows_rec(f + 1)) return true;
            aused[static_cast<size_t>(g)] = false;
            amap[static_cast<size_t>(f)] = -1;
        }
        return false;
    };
    std::function<bool(int)> obj_rec = [&](int x) -> bool {
        if (x == A.n_obj) return arrows_rec(0);
        for (int y = 0; y < B.n_obj; ++y) {
            if (oused[static_cast<size_t>(y)]) continue;
            // degree profile pruning
            bool ok = true;
            for (int z = 0; z < x && ok; ++z) {
                ok = A.hom(x, z).size() == B.hom(y, omap[static_cast<size_t>(z)]).size() &&
                     A.hom(z, x).size() == B.hom(omap[static_cast<size_t>(z)], y).size();
            }
            if (A.hom(x, x).size() != B.hom(y, y).size()) ok = false;
            if (!ok) continue;
            omap[static_cast<size_t>(x)] = y;
            oused[static_cast<size_t>(y)] = true;
            if (obj_rec(x + 1)) return true;
            oused[static_cast<size_t>(y)] = false;
            omap[static_cast<size_t>(x)] = -1;
        }
        return false;
    };
    return obj_rec(0);
}

bool categories_equivalent(const FiniteCategory& A, const FiniteCategory& B) {
    // search for a full, faithful, essentially surjective functor A -> B
    for (const FiniteFunctor& F : all_functors(A, B)) {
        bool ff = true;
        for (int x = 0; x < A.n_obj && ff; ++x)
            for (int y = 0; y < A.n_obj && ff; ++y) {
                auto ha = A.hom(x, y);
                auto hb = B.hom(F.obj[static_cast<size_t>(x)], F.obj[static_cast<size_t>(y)]);
                std::set<int> images;
                for (int f : ha) images.insert(F.arr[static_cast<size_t>(f)]);
                ff = images.size() == ha.size() && images.size() == hb.size();
            }
        if (!ff) continue;
        // essential surjectivity
        bool ess = true;
        for (int b = 0; b < B.n_obj && ess; ++b) {
            bool hit = false;
            for (int x = 0; x < A.n_obj && !hit; ++x) {
                int fb = F.obj[static_cast<size_t>(x)];
                for (int u : B.hom(fb, b))
                    if (B.is_iso_arrow(u)) {
                        hit = true;
                        break;
                    }
            }
            ess = hit;
        }
        if (ess) return true;
    }
    return false;
}

bool is_iso_fibration(const FiniteCategory& A, const FiniteCategory& B, const FiniteFunctor& F) {
    for (int a = 0; a < A.n_obj; ++a) {
        int fa = F.obj[static_cast<size_t>(a)];
        for (int b = 0; b < B.n_obj; ++b)
            for (int phi : B.hom(fa, b)) {
                if (!B.is_iso_arrow(phi)) continue;
                bool lifted = false;
                for (int a2 = 0; a2 < A.n_obj && !lifted; ++a2)
                    for (int psi : A.hom(a, a2))
                        if (A.is_iso_arrow(psi) && F.arr[static_cast<size_t>(psi)] == phi) {
                            lifted = true;
                            break;
                        }
                if (!lifted) return false;
            }
    }
    return true;
}

CommaCategory comma_category(const FiniteCategory& A, const FiniteCategory& B, const FiniteCategory& C,
                             const FiniteFunctor& F, const FiniteFunctor& G) {
    CommaCategory K;
    for (int a = 0; a < A.n_obj; ++a)
        for (int b = 0; b < B.n_obj; ++b)
            for (int f : C.hom(F.obj[static_cast<size_t>(a)], G.obj[static_cast<size_t>(b)]))
                K.objs.push_back({a, b, f});
    K.cat.n_obj = static_cast<int>(K.objs.size());
    std::map<std::tuple<int, int, int, int>, int> idx;  // (from, to, u, v)
    for (size_t i = 0; i < K.objs.size(); ++i)
        for (size_t j = 0; j < K.objs.size(); ++j) {
            auto [a1, b1, f1] = K.objs[i];
            auto [a2, b2, f2] = K.objs[j];
            for (int u : A.hom(a1, a2))
                for (int v : B.hom(b1, b2)) {
                    if (C.compose(F.arr[static_cast<size_t>(u)], f2) != C.compose(f1, G.arr[static_cast<size_t>(v)]))
                        continue;
                    idx[{static_cast<int>(i), static_cast<int>(j), u, v}] = static_cast<int>(K.cat.arrows.size());
                    K.cat.arrows.push_back({static_cast<int>(i), static_cast<int>(j),
                                            "c" + std::to_string(K.cat.arrows.size())});
                    K.arrs.push_back({u, v});
                }
        }
    K.cat.ident.assign(K.objs.size(), -1);
    for (size_t e = 0; e < K.cat.arrows.size(); ++e) {
        const auto& ar = K.cat.arrows[e];
        if (ar.src != ar.tgt) continue;
        auto [a, b, f] = K.objs[static_cast<size_t>(ar.src)];
        (void)f;
        if (K.arrs[e].first == A.ident[static_cast<size_t>(a)] && K.arrs[e].second == B.ident[static_cast<size_t>(b)])
            K.cat.ident[static_cast<size_t>(ar.src)] = static_cast<int>(e);
    }
    K.cat.comp_table.assign(K.cat.arrows.size(), std::vector<int>(K.cat.arrows.size(), -1));
    for (size_t e = 0; e < K.cat.arrows.size(); ++e)
        for (size_t e2 = 0; e2 < K.cat.arrows.size(); ++e2) {
            if (K.cat.arrows[e].tgt != K.cat.arrows[e2].src) continue;
            int u = A.compose(K.arrs[e].first, K.arrs[e2].first);
            int v = B.compose(K.arrs[e].second, K.arrs[e2].second);
            K.cat.comp_table[e2][e] = idx.at({K.cat.arrows[e].src, K.cat.arrows[e2].tgt, u, v});
        }
    return K;
}

bool is_final_functor(const FiniteCategory& A, const FiniteCategory& B, const FiniteFunctor& F) {
    // for every b in B the comma (b downarrow F) must be nonempty and connected
    for (int b = 0; b < B.n_obj; ++b) {
        FiniteCategory pt = terminal_category();
        FiniteFunctor Gb;
        Gb.obj = {b};
        Gb.arr = {B.ident[static_cast<size_t>(b)]};
        CommaCategory K = comma_category(pt, A, B, Gb, F);
        if (!is_connected(K.cat)) return false;
    }
    return true;
}

std::string to_string(const FiniteCategory& C) {
    std::string s = std::to_string(C.n_obj) + " objects; arrows:";
    for (int f = 0; f < C.n_arr(); ++f)
        s += " " + C.arrows[static_cast<size_t>(f)].name + ":" + std::to_string(C.src(f)) + "->" +
             std::to_string(C.tgt(f));
    return s;
}

}  // namespace kanspec
