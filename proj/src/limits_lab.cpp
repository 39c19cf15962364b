#include "kanspec/limits_lab.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace kanspec {

bool validate_cat_diagram(const CatDiagram& X, std::string* why) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    std::string inner;
    if (!validate(X.J, &inner)) return fail("shape: " + inner);
    if (static_cast<int>(X.value.size()) != X.J.n_obj) return fail("value count");
    if (static_cast<int>(X.arrow.size()) != X.J.n_arr()) return fail("arrow count");
    for (const auto& C : X.value)
        if (!validate(C, &inner)) return fail("value: " + inner);
    for (int f = 0; f < X.J.n_arr(); ++f)
        if (!validate_functor(X.value[static_cast<size_t>(X.J.src(f))], X.value[static_cast<size_t>(X.J.tgt(f))],
                              X.arrow[static_cast<size_t>(f)], &inner))
            return fail("arrow " + std::to_string(f) + ": " + inner);
    for (int j = 0; j < X.J.n_obj; ++j) {
        const FiniteFunctor& idf = X.arrow[static_cast<size_t>(X.J.ident[static_cast<size_t>(j)])];
        if (idf.obj != identity_functor(X.value[static_cast<size_t>(j)]).obj ||
            idf.arr != identity_functor(X.value[static_cast<size_t>(j)]).arr)
            return fail("identity arrow not the identity functor");
    }
    for (int f = 0; f < X.J.n_arr(); ++f)
        for (int g = 0; g < X.J.n_arr(); ++g) {
            if (X.J.tgt(f) != X.J.src(g)) continue;
            FiniteFunctor comp = compose_functors(X.arrow[static_cast<size_t>(f)], X.arrow[static_cast<size_t>(g)]);
            const FiniteFunctor& want = X.arrow[static_cast<size_t>(X.J.compose(f, g))];
            if (comp.obj != want.obj || comp.arr != want.arr) return fail("diagram functoriality");
        }
    return true;
}

namespace {

FiniteCategory category_from(const std::vector<std::string>& objnames, int n_obj,
                             const std::vector<std::tuple<int, int, std::string>>& arrow_decl,
                             const std::function<int(int, int)>& comp, const std::vector<int>& idents) {
    (void)objnames;
    FiniteCategory C;
    C.n_obj = n_obj;
    for (auto& [s, t, nm] : arrow_decl) C.arrows.push_back({s, t, nm});
    C.ident = idents;
    C.comp_table.assign(C.arrows.size(), std::vector<int>(C.arrows.size(), -1));
    for (int f = 0; f < C.n_arr(); ++f)
        for (int g = 0; g < C.n_arr(); ++g)
            if (C.tgt(f) == C.src(g)) C.comp_table[static_cast<size_t>(g)][static_cast<size_t>(f)] = comp(f, g);
    return C;
}

}  // namespace

StrictLimitResult strict_limit(const CatDiagram& X) {
    StrictLimitResult R;
    int n = X.J.n_obj;

    std::vector<std::vector<int>> objs;
    std::vector<int> cur(static_cast<size_t>(n), 0);
    std::function<void(int)> rec = [&](int j) {
        if (j == n) {
            for (int f = 0; f < X.J.n_arr(); ++f)
                if (X.arrow[static_cast<size_t>(f)].obj[static_cast<size_t>(cur[static_cast<size_t>(X.J.src(f))])] !=
                    cur[static_cast<size_t>(X.J.tgt(f))])
                    return;
            objs.push_back(cur);
            return;
        }
        for (int x = 0; x < X.value[static_cast<size_t>(j)].n_obj; ++x) {
            cur[static_cast<size_t>(j)] = x;
            rec(j + 1);
        }
    };
    if (n == 0) objs.push_back({});
    else rec(0);

    std::vector<std::vector<int>> arrs;
    std::vector<std::tuple<int, int, std::string>> decl;
    std::map<std::vector<int>, int> arr_idx;
    for (size_t a = 0; a < objs.size(); ++a)
        for (size_t b = 0; b < objs.size(); ++b) {
            std::vector<int> comp(static_cast<size_t>(n), -1);
            std::function<void(int)> rec2 = [&](int j) {
                if (j == n) {
                    for (int f = 0; f < X.J.n_arr(); ++f)
                        if (X.arrow[static_cast<size_t>(f)].arr[static_cast<size_t>(comp[static_cast<size_t>(X.J.src(f))])] !=
                            comp[static_cast<size_t>(X.J.tgt(f))])
                            return;
                    arr_idx[comp] = static_cast<int>(arrs.size());
                    arrs.push_back(comp);
                    decl.push_back({static_cast<int>(a), static_cast<int>(b), "a" + std::to_string(arrs.size())});
                    return;
                }
                for (int g : X.value[static_cast<size_t>(j)].hom(objs[a][static_cast<size_t>(j)], objs[b][static_cast<size_t>(j)])) {
                    comp[static_cast<size_t>(j)] = g;
                    rec2(j + 1);
                }
            };
            if (n == 0) {
                if (a == b) {
                    arr_idx[comp] = static_cast<int>(arrs.size());
                    arrs.push_back(comp);
                    decl.push_back({static_cast<int>(a), static_cast<int>(b), "a" + std::to_string(arrs.size())});
                }
            } else {
                rec2(0);
            }
        }

    std::vector<int> idents(objs.size(), -1);
    for (size_t a = 0; a < arrs.size(); ++a) {
        auto [s, t, nm] = decl[a];
        if (s != t) continue;
        bool isid = true;
        for (int j = 0; j < n && isid; ++j)
            isid = arrs[a][static_cast<size_t>(j)] ==
                   X.value[static_cast<size_t>(j)].ident[static_cast<size_t>(objs[static_cast<size_t>(s)][static_cast<size_t>(j)])];
        if (isid) idents[static_cast<size_t>(s)] = static_cast<int>(a);
    }
    R.cat = category_from({}, static_cast<int>(objs.size()), decl,
                          [&](int f, int g) {
                              std::vector<int> c(static_cast<size_t>(n));
                              for (int j = 0; j < n; ++j)
                                  c[static_cast<size_t>(j)] = X.value[static_cast<size_t>(j)].compose(
                                      arrs[static_cast<size_t>(f)][static_cast<size_t>(j)],
                                      arrs[static_cast<size_t>(g)][static_cast<size_t>(j)]);
                              return arr_idx.at(c);
                          },
                          idents);
    R.objs = std::move(objs);
    R.arrs = std::move(arrs);
    return R;
}

OplaxLimitResult oplax_limit_explicit(const CatDiagram& X) {
    OplaxLimitResult R;
    int n = X.J.n_obj;
    int na = X.J.n_arr();

    // objects: x per J-object plus phi per J-arrow, phi_id forced
    std::vector<std::pair<std::vector<int>, std::vector<int>>> objs;
    std::vector<int> x(static_cast<size_t>(n), 0), phi(static_cast<size_t>(na), -1);
    std::function<void(int)> phir = [&](int f) {
        if (f == na) {
            // pasting law on all composable pairs
            for (int p = 0; p < na; ++p)
                for (int q = 0; q < na; ++q) {
                    if (X.J.tgt(p) != X.J.src(q)) continue;
                    int pq = X.J.compose(p, q);
                    const FiniteCategory& Ck = X.value[static_cast<size_t>(X.J.tgt(q))];
                    int lhs = phi[static_cast<size_t>(pq)];
                    int rhs = Ck.compose(phi[static_cast<size_t>(q)],
                                         X.arrow[static_cast<size_t>(q)].arr[static_cast<size_t>(phi[static_cast<size_t>(p)])]);
                    if (lhs != rhs) return;
                }
            objs.push_back({x, phi});
            return;
        }
        int i = X.J.src(f), j = X.J.tgt(f);
        const FiniteCategory& Cj = X.value[static_cast<size_t>(j)];
        if (f == X.J.ident[static_cast<size_t>(i)]) {
            phi[static_cast<size_t>(f)] = Cj.ident[static_cast<size_t>(x[static_cast<size_t>(i)])];
            phir(f + 1);
            phi[static_cast<size_t>(f)] = -1;
            return;
        }
        int xi = x[static_cast<size_t>(i)], xj = x[static_cast<size_t>(j)];
        for (int a : Cj.hom(xj, X.arrow[static_cast<size_t>(f)].obj[static_cast<size_t>(xi)])) {
            phi[static_cast<size_t>(f)] = a;
            phir(f + 1);
        }
        phi[static_cast<size_t>(f)] = -1;
    };
    std::function<void(int)> xr = [&](int j) {
        if (j == n) {
            phir(0);
            return;
        }
        for (int v = 0; v < X.value[static_cast<size_t>(j)].n_obj; ++v) {
            x[static_cast<size_t>(j)] = v;
            xr(j + 1);
        }
    };
    if (n == 0) objs.push_back({{}, {}});
    else xr(0);

    // arrows: families a_j with psi_f . a_j = X_f(a_i) . phi_f
    std::vector<std::vector<int>> arrs;
    std::vector<std::tuple<int, int, std::string>> decl;
    std::map<std::pair<std::pair<int, int>, std::vector<int>>, int> arr_idx;
    for (size_t A = 0; A < objs.size(); ++A)
        for (size_t B = 0; B < objs.size(); ++B) {
            std::vector<int> a(static_cast<size_t>(n), -1);
            std::function<void(int)> rec2 = [&](int j) {
                if (j == n) {
                    for (int f = 0; f < na; ++f) {
                        int i2 = X.J.src(f), j2 = X.J.tgt(f);
                        const FiniteCategory& Cj = X.value[static_cast<size_t>(j2)];
                        int lhs = Cj.compose(a[static_cast<size_t>(j2)], objs[B].second[static_cast<size_t>(f)]);
                        int rhs = Cj.compose(objs[A].second[static_cast<size_t>(f)],
                                             X.arrow[static_cast<size_t>(f)].arr[static_cast<size_t>(a[static_cast<size_t>(i2)])]);
                        if (lhs != rhs) return;
                    }
                    arr_idx[{{static_cast<int>(A), static_cast<int>(B)}, a}] = static_cast<int>(arrs.size());
                    arrs.push_back(a);
                    decl.push_back({static_cast<int>(A), static_cast<int>(B), "a" + std::to_string(arrs.size())});
                    return;
                }
                for (int g : X.value[static_cast<size_t>(j)].hom(objs[A].first[static_cast<size_t>(j)],
                                                                 objs[B].first[static_cast<size_t>(j)])) {
                    a[static_cast<size_t>(j)] = g;
                    rec2(j + 1);
                }
            };
            if (n == 0) {
                if (A == B) {
                    arr_idx[{{static_cast<int>(A), static_cast<int>(B)}, a}] = static_cast<int>(arrs.size());
                    arrs.push_back(a);
                    decl.push_back({static_cast<int>(A), static_cast<int>(B), "a" + std::to_string(arrs.size())});
                }
            } else {
                rec2(0);
            }
        }

    std::vector<int> idents(objs.size(), -1);
    for (size_t e = 0; e < arrs.size(); ++e) {
        auto [s, t, nm] = decl[e];
        if (s != t) continue;
        bool isid = true;
        for (int j = 0; j < n && isid; ++j)
            isid = arrs[e][static_cast<size_t>(j)] ==
                   X.value[static_cast<size_t>(j)]
                       .ident[static_cast<size_t>(objs[static_cast<size_t>(s)].first[static_cast<size_t>(j)])];
        if (isid) idents[static_cast<size_t>(s)] = static_cast<int>(e);
    }
    R.cat = category_from({}, static_cast<int>(objs.size()), decl,
                          [&](int f, int g) {
                              auto [fs, ft, fn] = decl[static_cast<size_t>(f)];
                              auto [gs, gt, gn] = decl[static_cast<size_t>(g)];
                              (void)fn;
                              (void)gn;
                              (void)gs;
                              std::vector<int> c(static_cast<size_t>(n));
                              for (int j = 0; j < n; ++j)
                                  c[static_cast<size_t>(j)] = X.value[static_cast<size_t>(j)].compose(
                                      arrs[static_cast<size_t>(f)][static_cast<size_t>(j)],
                                      arrs[static_cast<size_t>(g)][static_cast<size_t>(j)]);
                              return arr_idx.at({{fs, gt}, c});
                          },
                          idents);
    for (auto& [xo, po] : objs) {
        R.obj_x.push_back(xo);
        R.obj_phi.push_back(po);
    }
    R.arr_a = std::move(arrs);
    return R;
}

WeightedLimitResult weighted_limit(const CatDiagram& W, const CatDiagram& X) {
    if (W.J.n_obj != X.J.n_obj || W.J.n_arr() != X.J.n_arr())
        throw std::invalid_argument("weighted_limit: shape mismatch");
    WeightedLimitResult R;
    int n = X.J.n_obj;

    // objects: strict natural transformations
    std::vector<std::vector<FiniteFunctor>> objs;
    std::vector<std::vector<FiniteFunctor>> pool(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) pool[static_cast<size_t>(j)] = all_functors(W.value[static_cast<size_t>(j)], X.value[static_cast<size_t>(j)]);
    std::vector<int> pick(static_cast<size_t>(n), -1);
    std::function<void(int)> rec = [&](int j) {
        if (j == n) {
            std::vector<FiniteFunctor> alpha;
            for (int t = 0; t < n; ++t) alpha.push_back(pool[static_cast<size_t>(t)][static_cast<size_t>(pick[static_cast<size_t>(t)])]);
            objs.push_back(std::move(alpha));
            return;
        }
        for (size_t p = 0; p < pool[static_cast<size_t>(j)].size(); ++p) {
            pick[static_cast<size_t>(j)] = static_cast<int>(p);
            // check naturality against already picked components
            bool ok = true;
            for (int f = 0; f < X.J.n_arr() && ok; ++f) {
                int i2 = X.J.src(f), j2 = X.J.tgt(f);
                if (i2 > j || j2 > j) continue;
                if (std::max(i2, j2) != j) continue;
                const FiniteFunctor& ai = pool[static_cast<size_t>(i2)][static_cast<size_t>(pick[static_cast<size_t>(i2)])];
                const FiniteFunctor& aj = pool[static_cast<size_t>(j2)][static_cast<size_t>(pick[static_cast<size_t>(j2)])];
                FiniteFunctor lhs = compose_functors(ai, X.arrow[static_cast<size_t>(f)]);
                FiniteFunctor rhs = compose_functors(W.arrow[static_cast<size_t>(f)], aj);
                ok = lhs.obj == rhs.obj && lhs.arr == rhs.arr;
            }
            if (ok) rec(j + 1);
        }
        pick[static_cast<size_t>(j)] = -1;
    };
    if (n == 0) objs.push_back({});
    else rec(0);

    // arrows: modifications
    std::vector<std::vector<FiniteNatTrans>> arrs;
    std::vector<std::tuple<int, int, std::string>> decl;
    std::map<std::pair<std::pair<int, int>, std::vector<std::vector<int>>>, int> arr_idx;
    for (size_t A = 0; A < objs.size(); ++A)
        for (size_t B = 0; B < objs.size(); ++B) {
            std::vector<std::vector<FiniteNatTrans>> natpool(static_cast<size_t>(n));
            bool any_empty = false;
            for (int j = 0; j < n && !any_empty; ++j) {
                natpool[static_cast<size_t>(j)] =
                    all_nat_trans(W.value[static_cast<size_t>(j)], X.value[static_cast<size_t>(j)], objs[A][static_cast<size_t>(j)],
                                  objs[B][static_cast<size_t>(j)]);
                any_empty = natpool[static_cast<size_t>(j)].empty();
            }
            if (any_empty) continue;
            std::vector<int> np(static_cast<size_t>(n), 0);
            while (true) {
                // modification law: X_f(mu_i(w)) = mu_j(W_f w) for f : i -> j
                bool ok = true;
                for (int f = 0; f < X.J.n_arr() && ok; ++f) {
                    int i2 = X.J.src(f), j2 = X.J.tgt(f);
                    const FiniteNatTrans& mi = natpool[static_cast<size_t>(i2)][static_cast<size_t>(np[static_cast<size_t>(i2)])];
                    const FiniteNatTrans& mj = natpool[static_cast<size_t>(j2)][static_cast<size_t>(np[static_cast<size_t>(j2)])];
                    for (int w = 0; w < W.value[static_cast<size_t>(i2)].n_obj && ok; ++w) {
                        int lhs = X.arrow[static_cast<size_t>(f)].arr[static_cast<size_t>(mi.comp[static_cast<size_t>(w)])];
                        int rhs = mj.comp[static_cast<size_t>(W.arrow[static_cast<size_t>(f)].obj[static_cast<size_t>(w)])];
                        ok = lhs == rhs;
                    }
                }
                if (ok) {
                    std::vector<FiniteNatTrans> mu;
                    std::vector<std::vector<int>> key;
                    for (int j = 0; j < n; ++j) {
                        mu.push_back(natpool[static_cast<size_t>(j)][static_cast<size_t>(np[static_cast<size_t>(j)])]);
                        key.push_back(mu.back().comp);
                    }
                    arr_idx[{{static_cast<int>(A), static_cast<int>(B)}, key}] = static_cast<int>(arrs.size());
                    arrs.push_back(std::move(mu));
                    decl.push_back({static_cast<int>(A), static_cast<int>(B), "m" + std::to_string(arrs.size())});
                }
                int c = n - 1;
                while (c >= 0 && np[static_cast<size_t>(c)] + 1 == static_cast<int>(natpool[static_cast<size_t>(c)].size())) {
                    np[static_cast<size_t>(c)] = 0;
                    --c;
                }
                if (c < 0) break;
                ++np[static_cast<size_t>(c)];
            }
            if (n == 0 && A == B) {
                arr_idx[{{static_cast<int>(A), static_cast<int>(B)}, {}}] = static_cast<int>(arrs.size());
                arrs.push_back({});
                decl.push_back({static_cast<int>(A), static_cast<int>(B), "m" + std::to_string(arrs.size())});
            }
        }

    std::vector<int> idents(objs.size(), -1);
    for (size_t e = 0; e < arrs.size(); ++e) {
        auto [s, t, nm] = decl[e];
        if (s != t) continue;
        bool isid = true;
        for (int j = 0; j < n && isid; ++j)
            for (int w = 0; w < W.value[static_cast<size_t>(j)].n_obj && isid; ++w)
                isid = arrs[e][static_cast<size_t>(j)].comp[static_cast<size_t>(w)] ==
                       X.value[static_cast<size_t>(j)]
                           .ident[static_cast<size_t>(objs[static_cast<size_t>(s)][static_cast<size_t>(j)].obj[static_cast<size_t>(w)])];
        if (isid) idents[static_cast<size_t>(s)] = static_cast<int>(e);
    }
    R.cat = category_from({}, static_cast<int>(objs.size()), decl,
                          [&](int f, int g) {
                              auto [fs, ft, fn] = decl[static_cast<size_t>(f)];
                              auto [gs, gt, gn] = decl[static_cast<size_t>(g)];
                              (void)fn;
                              (void)gn;
                              (void)ft;
                              (void)gs;
                              std::vector<std::vector<int>> key;
                              for (int j = 0; j < n; ++j) {
                                  std::vector<int> comp;
                                  for (int w = 0; w < W.value[static_cast<size_t>(j)].n_obj; ++w)
                                      comp.push_back(X.value[static_cast<size_t>(j)].compose(
                                          arrs[static_cast<size_t>(f)][static_cast<size_t>(j)].comp[static_cast<size_t>(w)],
                                          arrs[static_cast<size_t>(g)][static_cast<size_t>(j)].comp[static_cast<size_t>(w)]));
                                  key.push_back(std::move(comp));
                              }
                              return arr_idx.at({{fs, gt}, key});
                          },
                          idents);
    R.objs = std::move(objs);
    R.arrs = std::move(arrs);
    return R;
}

OplaxWeightResult oplax_weight(const FiniteCategory& J) {
    OplaxWeightResult R;
    R.W.J = J;
    std::vector<std::vector<int>> obj_of(static_cast<size_t>(J.n_obj));  // W_j object -> J arrow
    std::vector<std::map<std::pair<int, int>, int>> arrow_of(static_cast<size_t>(J.n_obj));  // (q, k) -> W_j arrow

    for (int j = 0; j < J.n_obj; ++j) {
        std::vector<int>& objects = obj_of[static_cast<size_t>(j)];
        for (int q = 0; q < J.n_arr(); ++q)
            if (J.tgt(q) == j) objects.push_back(q);
        std::map<int, int> objidx;
        for (size_t o = 0; o < objects.size(); ++o) objidx[objects[o]] = static_cast<int>(o);

        std::vector<std::tuple<int, int, std::string>> decl;
        std::vector<std::pair<int, int>> labels;  // (q, k)
        for (int q : objects)
            for (int k = 0; k < J.n_arr(); ++k) {
                if (J.tgt(k) != J.src(q)) continue;
                int qk = J.compose(k, q);
                arrow_of[static_cast<size_t>(j)][{q, k}] = static_cast<int>(decl.size());
                decl.push_back({objidx.at(q), objidx.at(qk), "w" + std::to_string(decl.size())});
                labels.push_back({q, k});
            }
        std::vector<int> idents(objects.size(), -1);
        for (size_t e = 0; e < labels.size(); ++e)
            if (labels[e].second == J.ident[static_cast<size_t>(J.src(labels[e].first))])
                idents[static_cast<size_t>(objidx.at(labels[e].first))] = static_cast<int>(e);
        FiniteCategory Wj = category_from({}, static_cast<int>(objects.size()), decl,
                                          [&](int f, int g) {
                                              auto [q1, k1] = labels[static_cast<size_t>(f)];
                                              auto [q2, k2] = labels[static_cast<size_t>(g)];
                                              (void)q2;
                                              return arrow_of[static_cast<size_t>(j)].at({q1, J.compose(k2, k1)});
                                          },
                                          idents);
        R.W.value.push_back(std::move(Wj));
        R.obj_arrow.push_back(objects);
    }
    for (int f = 0; f < J.n_arr(); ++f) {
        int j = J.src(f), j2 = J.tgt(f);
        FiniteFunctor F;
        std::map<int, int> objidx2;
        for (size_t o = 0; o < obj_of[static_cast<size_t>(j2)].size(); ++o) objidx2[obj_of[static_cast<size_t>(j2)][o]] = static_cast<int>(o);
        for (int q : obj_of[static_cast<size_t>(j)]) F.obj.push_back(objidx2.at(J.compose(q, f)));
        // arrows (q, k) -> (f q, k)
        for (int q : obj_of[static_cast<size_t>(j)])
            for (int k = 0; k < J.n_arr(); ++k) {
                if (J.tgt(k) != J.src(q)) continue;
                F.arr.push_back(arrow_of[static_cast<size_t>(j2)].at({J.compose(q, f), k}));
            }
        // reorder F.arr to the arrow enumeration order of W_j
        // (both enumerations iterate objects then k, so the order matches)
        R.W.arrow.push_back(std::move(F));
    }
    return R;
}

CatDiagram terminal_weight(const FiniteCategory& J) {
    CatDiagram W;
    W.J = J;
    for (int j = 0; j < J.n_obj; ++j) W.value.push_back(terminal_category());
    for (int f = 0; f < J.n_arr(); ++f) {
        FiniteFunctor F;
        F.obj = {0};
        F.arr = {0};
        W.arrow.push_back(F);
    }
    return W;
}

namespace {

// nonidentity arrows must be acyclic for the inverse-shape matching analysis
bool inverse_shape(const FiniteCategory& J, std::string* note) {
    for (int f = 0; f < J.n_arr(); ++f)
        if (J.src(f) == J.tgt(f) && f != J.ident[static_cast<size_t>(J.src(f))]) {
            if (note) *note = "non-identity endomorphism";
            return false;
        }
    // detect directed cycles through non-identity arrows
    std::vector<int> color(static_cast<size_t>(J.n_obj), 0);
    std::function<bool(int)> dfs = [&](int v) -> bool {
        color[static_cast<size_t>(v)] = 1;
        for (int f = 0; f < J.n_arr(); ++f) {
            if (J.src(f) != v || f == J.ident[static_cast<size_t>(v)]) continue;
            int w = J.tgt(f);
            if (color[static_cast<size_t>(w)] == 1) return false;
            if (color[static_cast<size_t>(w)] == 0 && !dfs(w)) return false;
        }
        color[static_cast<size_t>(v)] = 2;
        return true;
    };
    for (int v = 0; v < J.n_obj; ++v)
        if (color[static_cast<size_t>(v)] == 0 && !dfs(v)) {
            if (note) *note = "directed cycle of non-identity arrows";
            return false;
        }
    return true;
}

// the matching category at j: families over the non-identity arrows out of j
struct Matching {
    FiniteCategory cat;
    std::vector<std::vector<int>> objs;      // per matching object: component per out-arrow
    std::vector<std::vector<int>> arr_fams;  // per matching arrow: component family
    std::vector<int> out_arrows;             // the non-identity arrows out of j
    FiniteFunctor matching_functor;          // X_j -> cat
};

Matching matching_at(const CatDiagram& X, int j) {
    Matching M;
    const FiniteCategory& J = X.J;
    for (int f = 0; f < J.n_arr(); ++f)
        if (J.src(f) == j && f != J.ident[static_cast<size_t>(j)]) M.out_arrows.push_back(f);
    int m = static_cast<int>(M.out_arrows.size());

    std::vector<std::vector<int>> objs;
    std::vector<int> cur(static_cast<size_t>(m), 0);
    auto coherent_obj = [&](const std::vector<int>& y) {
        for (int a = 0; a < m; ++a)
            for (int g = 0; g < J.n_arr(); ++g) {
                int f = M.out_arrows[static_cast<size_t>(a)];
                if (J.src(g) != J.tgt(f) || g == J.ident[static_cast<size_t>(J.src(g))]) continue;
                int gf = J.compose(f, g);
                auto it = std::find(M.out_arrows.begin(), M.out_arrows.end(), gf);
                if (it == M.out_arrows.end()) continue;
                int b = static_cast<int>(it - M.out_arrows.begin());
                if (X.arrow[static_cast<size_t>(g)].obj[static_cast<size_t>(y[static_cast<size_t>(a)])] !=
                    y[static_cast<size_t>(b)])
                    return false;
            }
        return true;
    };
    std::function<void(int)> rec = [&](int a) {
        if (a == m) {
            if (coherent_obj(cur)) objs.push_back(cur);
            return;
        }
        for (int y = 0; y < X.value[static_cast<size_t>(J.tgt(M.out_arrows[static_cast<size_t>(a)]))].n_obj; ++y) {
            cur[static_cast<size_t>(a)] = y;
            rec(a + 1);
        }
    };
    if (m == 0) objs.push_back({});
    else rec(0);

    std::vector<std::vector<int>> arrs;
    std::vector<std::tuple<int, int, std::string>> decl;
    std::map<std::pair<std::pair<int, int>, std::vector<int>>, int> arr_idx;
    for (size_t A = 0; A < objs.size(); ++A)
        for (size_t B = 0; B < objs.size(); ++B) {
            std::vector<int> e(static_cast<size_t>(m), -1);
            std::function<void(int)> rec2 = [&](int a) {
                if (a == m) {
                    for (int a2 = 0; a2 < m; ++a2)
                        for (int g = 0; g < J.n_arr(); ++g) {
                            int f = M.out_arrows[static_cast<size_t>(a2)];
                            if (J.src(g) != J.tgt(f) || g == J.ident[static_cast<size_t>(J.src(g))]) continue;
                            auto it = std::find(M.out_arrows.begin(), M.out_arrows.end(), J.compose(f, g));
                            if (it == M.out_arrows.end()) continue;
                            int b = static_cast<int>(it - M.out_arrows.begin());
                            if (X.arrow[static_cast<size_t>(g)].arr[static_cast<size_t>(e[static_cast<size_t>(a2)])] !=
                                e[static_cast<size_t>(b)])
                                return;
                        }
                    arr_idx[{{static_cast<int>(A), static_cast<int>(B)}, e}] = static_cast<int>(arrs.size());
                    arrs.push_back(e);
                    decl.push_back({static_cast<int>(A), static_cast<int>(B), "m" + std::to_string(arrs.size())});
                    return;
                }
                const FiniteCategory& Ck = X.value[static_cast<size_t>(J.tgt(M.out_arrows[static_cast<size_t>(a)]))];
                for (int g : Ck.hom(objs[A][static_cast<size_t>(a)], objs[B][static_cast<size_t>(a)])) {
                    e[static_cast<size_t>(a)] = g;
                    rec2(a + 1);
                }
            };
            if (m == 0) {
                if (A == B) {
                    arr_idx[{{static_cast<int>(A), static_cast<int>(B)}, e}] = static_cast<int>(arrs.size());
                    arrs.push_back(e);
                    decl.push_back({static_cast<int>(A), static_cast<int>(B), "m" + std::to_string(arrs.size())});
                }
            } else {
                rec2(0);
            }
        }

    std::vector<int> idents(objs.size(), -1);
    for (size_t e2 = 0; e2 < arrs.size(); ++e2) {
        auto [s, t, nm] = decl[e2];
        if (s != t) continue;
        bool isid = true;
        for (int a = 0; a < m && isid; ++a) {
            const FiniteCategory& Ck = X.value[static_cast<size_t>(J.tgt(M.out_arrows[static_cast<size_t>(a)]))];
            isid = arrs[e2][static_cast<size_t>(a)] ==
                   Ck.ident[static_cast<size_t>(objs[static_cast<size_t>(s)][static_cast<size_t>(a)])];
        }
        if (isid) idents[static_cast<size_t>(s)] = static_cast<int>(e2);
    }
    M.cat = category_from({}, static_cast<int>(objs.size()), decl,
                          [&](int f, int g) {
                              auto [fs, ft, fn] = decl[static_cast<size_t>(f)];
                              auto [gs, gt, gn] = decl[static_cast<size_t>(g)];
                              (void)fn;
                              (void)gn;
                              (void)ft;
                              (void)gs;
                              std::vector<int> c(static_cast<size_t>(m));
                              for (int a = 0; a < m; ++a) {
                                  const FiniteCategory& Ck =
                                      X.value[static_cast<size_t>(J.tgt(M.out_arrows[static_cast<size_t>(a)]))];
                                  c[static_cast<size_t>(a)] = Ck.compose(
                                      arrs[static_cast<size_t>(f)][static_cast<size_t>(a)],
                                      arrs[static_cast<size_t>(g)][static_cast<size_t>(a)]);
                              }
                              return arr_idx.at({{fs, gt}, c});
                          },
                          idents);
    M.objs = std::move(objs);

    // the matching functor X_j -> M, with exact family lookup
    std::map<std::vector<int>, int> objidx;
    for (size_t o = 0; o < M.objs.size(); ++o) objidx[M.objs[o]] = static_cast<int>(o);
    std::map<std::tuple<int, int, std::vector<int>>, int> arridx;
    for (int e = 0; e < M.cat.n_arr(); ++e)
        arridx[{M.cat.src(e), M.cat.tgt(e), arrs[static_cast<size_t>(e)]}] = e;
    M.arr_fams = arrs;
    for (int x = 0; x < X.value[static_cast<size_t>(j)].n_obj; ++x) {
        std::vector<int> img;
        for (int f : M.out_arrows) img.push_back(X.arrow[static_cast<size_t>(f)].obj[static_cast<size_t>(x)]);
        M.matching_functor.obj.push_back(objidx.at(img));
    }
    for (int u = 0; u < X.value[static_cast<size_t>(j)].n_arr(); ++u) {
        std::vector<int> img;
        for (int f : M.out_arrows) img.push_back(X.arrow[static_cast<size_t>(f)].arr[static_cast<size_t>(u)]);
        int s = M.matching_functor.obj[static_cast<size_t>(X.value[static_cast<size_t>(j)].src(u))];
        int t = M.matching_functor.obj[static_cast<size_t>(X.value[static_cast<size_t>(j)].tgt(u))];
        M.matching_functor.arr.push_back(arridx.at({s, t, img}));
    }
    return M;
}

}  // namespace

SpectrReport check_spectrification_hypotheses(const CatDiagram& W, const CatDiagram& X) {
    SpectrReport rep;
    std::string note;
    if (!inverse_shape(X.J, &note)) {
        rep.inverse_shape = false;
        rep.notes.push_back("shape: " + note + "; fibrancy analysis needs an inverse shape");
    }

    // fibrancy: matching maps are iso-fibrations
    if (rep.inverse_shape)
        for (int j = 0; j < X.J.n_obj; ++j) {
            Matching M = matching_at(X, j);
            std::string why;
            if (!validate_functor(X.value[static_cast<size_t>(j)], M.cat, M.matching_functor, &why)) {
                rep.fibrant = false;
                rep.notes.push_back("object " + std::to_string(j) + ": matching data not functorial (" + why + ")");
                continue;
            }
            if (!is_iso_fibration(X.value[static_cast<size_t>(j)], M.cat, M.matching_functor)) {
                rep.fibrant = false;
                rep.notes.push_back("object " + std::to_string(j) + ": matching map is not an iso-fibration");
            }
        }

    // colimit existence, preservation, and finality per non-identity arrow
    for (int f = 0; f < X.J.n_arr(); ++f) {
        int i = X.J.src(f), j = X.J.tgt(f);
        if (f == X.J.ident[static_cast<size_t>(i)]) continue;
        const FiniteCategory& Wi = W.value[static_cast<size_t>(i)];
        const FiniteCategory& Wj = W.value[static_cast<size_t>(j)];
        const FiniteCategory& Xi = X.value[static_cast<size_t>(i)];
        const FiniteCategory& Xj = X.value[static_cast<size_t>(j)];

        if (!is_final_functor(Wi, Wj, W.arrow[static_cast<size_t>(f)])) {
            rep.weights_final = false;
            rep.notes.push_back("arrow " + std::to_string(f) + ": weight component is not final");
        }

        for (const FiniteFunctor& phi : all_functors(Wi, Xi)) {
            DiagramInCat D{Wi, phi.obj, phi.arr};
            auto col = colimit_of(Xi, D);
            if (!col) {
                rep.colimits_exist = false;
                rep.notes.push_back("arrow " + std::to_string(f) + ": a W-colimit is missing in the source value");
                break;
            }
            // push the colimiting cocone forward and test initiality
            DiagramInCat XD{Wi, {}, {}};
            for (int v : phi.obj) XD.obj.push_back(X.arrow[static_cast<size_t>(f)].obj[static_cast<size_t>(v)]);
            for (int u : phi.arr) XD.arr.push_back(X.arrow[static_cast<size_t>(f)].arr[static_cast<size_t>(u)]);
            auto col2 = colimit_of(Xj, XD);
            if (!col2) {
                rep.colimits_exist = false;
                rep.notes.push_back("arrow " + std::to_string(f) + ": a W-colimit is missing in the target value");
                break;
            }
            Cone pushed;
            pushed.apex = X.arrow[static_cast<size_t>(f)].obj[static_cast<size_t>(col->apex)];
            for (int leg : col->legs) pushed.legs.push_back(X.arrow[static_cast<size_t>(f)].arr[static_cast<size_t>(leg)]);
            // pushed is initial iff there is an isomorphism comparison
            bool initial = true;
            auto cocones = all_cocones(Xj, XD);
            for (const Cone& o : cocones) {
                int count = 0;
                for (int u : Xj.hom(pushed.apex, o.apex)) {
                    bool okc = true;
                    for (size_t t = 0; t < pushed.legs.size() && okc; ++t)
                        okc = Xj.compose(pushed.legs[t], u) == o.legs[t];
                    if (okc) ++count;
                }
                if (count != 1) {
                    initial = false;
                    break;
                }
            }
            if (!initial) {
                rep.preserved = false;
                rep.notes.push_back("arrow " + std::to_string(f) + ": value functor does not preserve a W-colimit");
                break;
            }
        }
        // W_j-colimits must exist in X_j as well
        for (const FiniteFunctor& phi : all_functors(Wj, Xj)) {
            DiagramInCat D{Wj, phi.obj, phi.arr};
            if (!colimit_of(Xj, D)) {
                rep.colimits_exist = false;
                rep.notes.push_back("arrow " + std::to_string(f) + ": a W-colimit is missing in the target value");
                break;
            }
        }
    }
    return rep;
}

SpectrificationResult spectrification_adjoint(const CatDiagram& W, const CatDiagram& X) {
    SpectrificationResult R;
    R.strict = strict_limit(X);
    R.weighted = weighted_limit(W, X);
    int n = X.J.n_obj;

    // Delta : strict -> weighted  (constant transformations)
    R.delta_obj.assign(R.strict.objs.size(), -1);
    auto find_weighted_obj = [&](const std::vector<FiniteFunctor>& alpha) {
        for (size_t o = 0; o < R.weighted.objs.size(); ++o) {
            bool same = true;
            for (int j = 0; j < n && same; ++j)
                same = R.weighted.objs[o][static_cast<size_t>(j)].obj == alpha[static_cast<size_t>(j)].obj &&
                       R.weighted.objs[o][static_cast<size_t>(j)].arr == alpha[static_cast<size_t>(j)].arr;
            if (same) return static_cast<int>(o);
        }
        return -1;
    };
    for (size_t b = 0; b < R.strict.objs.size(); ++b) {
        std::vector<FiniteFunctor> alpha;
        for (int j = 0; j < n; ++j) {
            FiniteFunctor c;
            int xj = R.strict.objs[b][static_cast<size_t>(j)];
            c.obj.assign(static_cast<size_t>(W.value[static_cast<size_t>(j)].n_obj), xj);
            c.arr.assign(static_cast<size_t>(W.value[static_cast<size_t>(j)].n_arr()),
                         X.value[static_cast<size_t>(j)].ident[static_cast<size_t>(xj)]);
            alpha.push_back(std::move(c));
        }
        R.delta_obj[b] = find_weighted_obj(alpha);
        if (R.delta_obj[b] < 0) {
            R.detail = "constant transformation missing from the weighted limit";
            return R;
        }
    }

    // sp on objects: pointwise colimits matched to a strict family
    R.sp_obj.assign(R.weighted.objs.size(), -1);
    R.unit.assign(R.weighted.objs.size(), -1);
    for (size_t o = 0; o < R.weighted.objs.size(); ++o) {
        std::vector<Cone> cocones(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) {
            DiagramInCat D{W.value[static_cast<size_t>(j)], R.weighted.objs[o][static_cast<size_t>(j)].obj,
                           R.weighted.objs[o][static_cast<size_t>(j)].arr};
            auto col = colimit_of(X.value[static_cast<size_t>(j)], D);
            if (!col) {
                R.detail = "pointwise colimit missing at object " + std::to_string(j);
                return R;
            }
            cocones[static_cast<size_t>(j)] = *col;
        }
        // find a strict family b and isos gamma_j : colim -> b_j making the
        // transported legs a modification
        int found_b = -1, found_unit = -1;
        for (size_t b = 0; b < R.strict.objs.size() && found_b < 0; ++b) {
            std::vector<std::vector<int>> iso_choices(static_cast<size_t>(n));
            bool feas = true;
            for (int j = 0; j < n && feas; ++j) {
                for (int g : X.value[static_cast<size_t>(j)].hom(cocones[static_cast<size_t>(j)].apex,
                                                                 R.strict.objs[b][static_cast<size_t>(j)]))
                    if (X.value[static_cast<size_t>(j)].is_iso_arrow(g)) iso_choices[static_cast<size_t>(j)].push_back(g);
                feas = !iso_choices[static_cast<size_t>(j)].empty();
            }
            if (!feas) continue;
            std::vector<size_t> pick(static_cast<size_t>(n), 0);
            while (found_b < 0) {
                // candidate unit components u_j(w) = gamma_j . leg_j(w)
                std::vector<FiniteNatTrans> mu(static_cast<size_t>(n));
                for (int j = 0; j < n; ++j) {
                    for (int w = 0; w < W.value[static_cast<size_t>(j)].n_obj; ++w)
                        mu[static_cast<size_t>(j)].comp.push_back(X.value[static_cast<size_t>(j)].compose(
                            cocones[static_cast<size_t>(j)].legs[static_cast<size_t>(w)],
                            iso_choices[static_cast<size_t>(j)][pick[static_cast<size_t>(j)]]));
                }
                // locate this as a weighted-limit arrow o -> Delta b
                int db = R.delta_obj[b];
                for (int e = 0; e < R.weighted.cat.n_arr(); ++e) {
                    if (R.weighted.cat.src(e) != static_cast<int>(o) || R.weighted.cat.tgt(e) != db) continue;
                    bool same = true;
                    for (int j = 0; j < n && same; ++j)
                        same = R.weighted.arrs[static_cast<size_t>(e)][static_cast<size_t>(j)].comp ==
                               mu[static_cast<size_t>(j)].comp;
                    if (same) {
                        found_b = static_cast<int>(b);
                        found_unit = e;
                        break;
                    }
                }
                if (found_b >= 0) break;
                int c = n - 1;
                while (c >= 0 && pick[static_cast<size_t>(c)] + 1 == iso_choices[static_cast<size_t>(c)].size()) {
                    pick[static_cast<size_t>(c)] = 0;
                    --c;
                }
                if (c < 0) break;
                ++pick[static_cast<size_t>(c)];
            }
        }
        if (found_b < 0) {
            R.detail = "no strict family matches the pointwise colimits of object " + std::to_string(static_cast<int>(o));
            return R;
        }
        R.sp_obj[o] = found_b;
        R.unit[o] = found_unit;
        // certify by initiality in (alpha downarrow Delta)
        for (size_t b2 = 0; b2 < R.strict.objs.size(); ++b2) {
            int db2 = R.delta_obj[b2];
            for (int e = 0; e < R.weighted.cat.n_arr(); ++e) {
                if (R.weighted.cat.src(e) != static_cast<int>(o) || R.weighted.cat.tgt(e) != db2) continue;
                // unique strict arrow v : sp(alpha) -> b2 with Delta v . unit = e
                int count = 0;
                for (int v = 0; v < R.strict.cat.n_arr(); ++v) {
                    if (R.strict.cat.src(v) != R.sp_obj[o] || R.strict.cat.tgt(v) != static_cast<int>(b2)) continue;
                    // Delta v as weighted arrow
                    bool match = true;
                    for (int j = 0; j < n && match; ++j) {
                        int vj = R.strict.arrs[static_cast<size_t>(v)][static_cast<size_t>(j)];
                        for (int w = 0; w < W.value[static_cast<size_t>(j)].n_obj && match; ++w) {
                            int lhs = X.value[static_cast<size_t>(j)].compose(
                                R.weighted.arrs[static_cast<size_t>(R.unit[o])][static_cast<size_t>(j)]
                                    .comp[static_cast<size_t>(w)],
                                vj);
                            match = lhs == R.weighted.arrs[static_cast<size_t>(e)][static_cast<size_t>(j)]
                                               .comp[static_cast<size_t>(w)];
                        }
                    }
                    if (match) ++count;
                }
                if (count != 1) {
                    R.detail = "reflection not initial at weighted object " + std::to_string(static_cast<int>(o));
                    return R;
                }
            }
        }
    }

    // sp on arrows by unique factorization
    R.sp_arr.assign(R.weighted.arrs.size(), -1);
    for (int e = 0; e < R.weighted.cat.n_arr(); ++e) {
        int o = R.weighted.cat.src(e), p = R.weighted.cat.tgt(e);
        // unique v with Delta v . unit_o = unit_p . e
        int composed = R.weighted.cat.compose(e, R.unit[static_cast<size_t>(p)]);
        for (int v = 0; v < R.strict.cat.n_arr(); ++v) {
            if (R.strict.cat.src(v) != R.sp_obj[static_cast<size_t>(o)] ||
                R.strict.cat.tgt(v) != R.sp_obj[static_cast<size_t>(p)])
                continue;
            bool match = true;
            for (int j = 0; j < n && match; ++j) {
                int vj = R.strict.arrs[static_cast<size_t>(v)][static_cast<size_t>(j)];
                for (int w = 0; w < W.value[static_cast<size_t>(j)].n_obj && match; ++w) {
                    int lhs = X.value[static_cast<size_t>(j)].compose(
                        R.weighted.arrs[static_cast<size_t>(R.unit[static_cast<size_t>(o)])][static_cast<size_t>(j)]
                            .comp[static_cast<size_t>(w)],
                        vj);
                    match = lhs == R.weighted.arrs[static_cast<size_t>(composed)][static_cast<size_t>(j)]
                                       .comp[static_cast<size_t>(w)];
                }
            }
            if (match) {
                R.sp_arr[static_cast<size_t>(e)] = v;
                break;
            }
        }
        if (R.sp_arr[static_cast<size_t>(e)] < 0) {
            R.detail = "sp has no action on weighted arrow " + std::to_string(e);
            return R;
        }
    }

    // counit: the factorization of the identity of Delta b
    R.counit.assign(R.strict.objs.size(), -1);
    for (size_t b = 0; b < R.strict.objs.size(); ++b) {
        int db = R.delta_obj[b];
        int iddb = R.weighted.cat.ident[static_cast<size_t>(db)];
        // unique v : sp(Delta b) -> b with Delta v . unit_{Delta b} = id
        for (int v = 0; v < R.strict.cat.n_arr(); ++v) {
            if (R.strict.cat.src(v) != R.sp_obj[static_cast<size_t>(db)] || R.strict.cat.tgt(v) != static_cast<int>(b))
                continue;
            bool match = true;
            for (int j = 0; j < n && match; ++j) {
                int vj = R.strict.arrs[static_cast<size_t>(v)][static_cast<size_t>(j)];
                for (int w = 0; w < W.value[static_cast<size_t>(j)].n_obj && match; ++w) {
                    int lhs = X.value[static_cast<size_t>(j)].compose(
                        R.weighted.arrs[static_cast<size_t>(R.unit[static_cast<size_t>(db)])][static_cast<size_t>(j)]
                            .comp[static_cast<size_t>(w)],
                        vj);
                    match = lhs == R.weighted.arrs[static_cast<size_t>(iddb)][static_cast<size_t>(j)]
                                       .comp[static_cast<size_t>(w)];
                }
            }
            if (match) {
                R.counit[b] = v;
                break;
            }
        }
        if (R.counit[b] < 0) {
            R.detail = "counit missing at strict object " + std::to_string(static_cast<int>(b));
            return R;
        }
    }

    // triangle identities
    for (size_t o = 0; o < R.weighted.objs.size(); ++o) {
        int eps = R.counit[static_cast<size_t>(R.sp_obj[o])];
        // careful: counit is indexed by strict objects; sp(unit_o) : sp o -> sp(Delta sp o)
        int spu = R.sp_arr[static_cast<size_t>(R.unit[o])];
        int tri = R.strict.cat.compose(spu, eps);
        if (tri != R.strict.cat.ident[static_cast<size_t>(R.sp_obj[o])]) {
            R.detail = "triangle identity (sp side) fails";
            return R;
        }
    }
    for (size_t b = 0; b < R.strict.objs.size(); ++b) {
        // Delta(counit_b) . unit_{Delta b} = id_{Delta b}
        int db = R.delta_obj[b];
        int u = R.unit[static_cast<size_t>(db)];
        // Delta of the counit as a weighted arrow: constant components
        int v = R.counit[b];
        bool ok = true;
        for (int j = 0; j < n && ok; ++j) {
            int vj = R.strict.arrs[static_cast<size_t>(v)][static_cast<size_t>(j)];
            for (int w = 0; w < W.value[static_cast<size_t>(j)].n_obj && ok; ++w) {
                int lhs = X.value[static_cast<size_t>(j)].compose(
                    R.weighted.arrs[static_cast<size_t>(u)][static_cast<size_t>(j)].comp[static_cast<size_t>(w)], vj);
                ok = lhs == X.value[static_cast<size_t>(j)]
                                .ident[static_cast<size_t>(R.weighted.objs[static_cast<size_t>(db)][static_cast<size_t>(j)]
                                                               .obj[static_cast<size_t>(w)])];
            }
        }
        if (!ok) {
            R.detail = "triangle identity (Delta side) fails";
            return R;
        }
    }

    R.ok = true;
    return R;
}

CommaCategory slice_comma(const FiniteCategory& C, const FiniteCategory& B, const FiniteFunctor& R) {
    return comma_category(C, B, C, identity_functor(C), R);
}

CommaLimitReport comma_limit_check(const FiniteCategory& C, const FiniteCategory& B, const FiniteFunctor& R,
                                   const DiagramInCat& D) {
    CommaLimitReport rep;
    CommaCategory K = slice_comma(C, B, R);
    std::string why;
    if (!validate_diagram(K.cat, D, &why)) {
        rep.detail = "diagram: " + why;
        return rep;
    }

    // project to C and B
    DiagramInCat Dc{D.I, {}, {}}, Db{D.I, {}, {}};
    for (int o : D.obj) {
        auto [a, b, f] = K.objs[static_cast<size_t>(o)];
        (void)f;
        Dc.obj.push_back(a);
        Db.obj.push_back(b);
    }
    for (int e : D.arr) {
        Dc.arr.push_back(K.arrs[static_cast<size_t>(e)].first);
        Db.arr.push_back(K.arrs[static_cast<size_t>(e)].second);
    }

    auto lim_c = limit_of(C, Dc);
    auto lim_b = limit_of(B, Db);
    if (!lim_c || !lim_b) {
        rep.detail = "componentwise limit missing";
        return rep;
    }

    // R must preserve the B-limit
    DiagramInCat RDb{D.I, {}, {}};
    for (int o : Db.obj) RDb.obj.push_back(R.obj[static_cast<size_t>(o)]);
    for (int e : Db.arr) RDb.arr.push_back(R.arr[static_cast<size_t>(e)]);
    Cone Rcone;
    Rcone.apex = R.obj[static_cast<size_t>(lim_b->apex)];
    for (int leg : lim_b->legs) Rcone.legs.push_back(R.arr[static_cast<size_t>(leg)]);
    {
        auto cones = all_cones(C, RDb);
        rep.r_preserves = true;
        for (const Cone& o : cones) {
            int count = 0;
            for (int u : C.hom(o.apex, Rcone.apex)) {
                bool okc = true;
                for (size_t t = 0; t < o.legs.size() && okc; ++t) okc = C.compose(u, Rcone.legs[t]) == o.legs[t];
                if (okc) ++count;
            }
            if (count != 1) {
                rep.r_preserves = false;
                break;
            }
        }
    }
    if (!rep.r_preserves) {
        rep.detail = "R does not preserve the componentwise limit";
        return rep;
    }

    // induced comparison arrow lim_c -> R(lim_b)
    int induced = -1;
    for (int u : C.hom(lim_c->apex, Rcone.apex)) {
        bool okc = true;
        for (size_t i = 0; i < D.obj.size() && okc; ++i) {
            auto [a, b, f] = K.objs[static_cast<size_t>(D.obj[i])];
            (void)a;
            (void)b;
            int lhs = C.compose(u, Rcone.legs[i]);
            int rhs = C.compose(lim_c->legs[i], f);
            okc = lhs == rhs;
        }
        if (okc) {
            induced = u;
            break;
        }
    }
    if (induced < 0) {
        rep.detail = "no induced comparison arrow";
        return rep;
    }

    // the formula object in the comma category
    int formula_obj = -1;
    for (size_t o = 0; o < K.objs.size(); ++o) {
        auto [a, b, f] = K.objs[o];
        if (a == lim_c->apex && b == lim_b->apex && f == induced) formula_obj = static_cast<int>(o);
    }
    if (formula_obj < 0) {
        rep.detail = "formula object not found in the comma category";
        return rep;
    }

    // its cone and terminality
    Cone formula_cone;
    formula_cone.apex = formula_obj;
    for (size_t i = 0; i < D.obj.size(); ++i) {
        int leg = -1;
        for (int e = 0; e < K.cat.n_arr(); ++e) {
            if (K.cat.src(e) != formula_obj || K.cat.tgt(e) != D.obj[i]) continue;
            if (K.arrs[static_cast<size_t>(e)].first == lim_c->legs[i] &&
                K.arrs[static_cast<size_t>(e)].second == lim_b->legs[i]) {
                leg = e;
                break;
            }
        }
        if (leg < 0) {
            rep.detail = "formula cone leg missing";
            return rep;
        }
        formula_cone.legs.push_back(leg);
    }
    // cone condition + terminality against brute-force cones
    auto cones = all_cones(K.cat, D);
    bool is_cone = false;
    for (const Cone& o : cones)
        if (o.apex == formula_cone.apex && o.legs == formula_cone.legs) is_cone = true;
    if (!is_cone) {
        rep.detail = "formula data is not a cone";
        return rep;
    }
    for (const Cone& o : cones) {
        int count = 0;
        for (int u : K.cat.hom(o.apex, formula_cone.apex)) {
            bool okc = true;
            for (size_t t = 0; t < o.legs.size() && okc; ++t)
                okc = K.cat.compose(u, formula_cone.legs[t]) == o.legs[t];
            if (okc) ++count;
        }
        if (count != 1) {
            rep.detail = "formula cone is not terminal";
            return rep;
        }
    }

    // brute force agreement
    auto brute = limit_of(K.cat, D);
    if (!brute) {
        rep.detail = "brute-force limit missing although the formula one exists";
        return rep;
    }
    rep.ok = true;
    return rep;
}

}  // namespace kanspec
