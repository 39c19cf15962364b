#include "kanspec/theta.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace kanspec {

ThetaCell theta_leaf() { return ThetaCell{}; }

ThetaCell theta_node(std::vector<ThetaCell> kids) { return ThetaCell{std::move(kids)}; }

ThetaCell delta_cell(int n) {
    ThetaCell T;
    T.kids.assign(static_cast<size_t>(n), ThetaCell{});
    return T;
}

ThetaCell globe_cell(int n) {
    ThetaCell T;
    for (int i = 0; i < n; ++i) T = theta_node({T});
    return T;
}

int tree_depth(const ThetaCell& T) {
    int d = 0;
    for (const ThetaCell& k : T.kids) d = std::max(d, 1 + tree_depth(k));
    return d;
}

int reedy_degree(const ThetaCell& T) {
    int d = T.arity();
    for (const ThetaCell& k : T.kids) d += reedy_degree(k);
    return d;
}

std::string encode(const ThetaCell& T) {
    std::string s = "[";
    for (const ThetaCell& k : T.kids) s += encode(k);
    return s + "]";
}

std::vector<ThetaCell> cells_up_to_degree(int d, int max_depth) {
    // trees with reedy degree exactly e, memoized per (e, depth budget)
    std::map<std::pair<int, int>, std::vector<ThetaCell>> memo;
    std::function<const std::vector<ThetaCell>&(int, int)> exact = [&](int e, int depth) -> const std::vector<ThetaCell>& {
        auto key = std::make_pair(e, depth);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        std::vector<ThetaCell> out;
        if (e == 0) {
            out.push_back(theta_leaf());
        } else if (depth != 0) {
            // arity k >= 1 costs k plus the children degrees
            for (int k = 1; k <= e; ++k) {
                int rest = e - k;
                // compositions of rest into k ordered parts
                std::vector<int> parts(static_cast<size_t>(k), 0);
                std::function<void(int, int)> fill = [&](int slot, int left) {
                    if (slot == k) {
                        if (left != 0) return;
                        std::vector<std::vector<ThetaCell>> choices;
                        for (int s = 0; s < k; ++s)
                            choices.push_back(exact(parts[static_cast<size_t>(s)], depth < 0 ? -1 : depth - 1));
                        std::vector<size_t> pick(static_cast<size_t>(k), 0);
                        while (true) {
                            std::vector<ThetaCell> kids;
                            bool ok = true;
                            for (int s = 0; s < k && ok; ++s) {
                                if (choices[static_cast<size_t>(s)].empty()) ok = false;
                                else kids.push_back(choices[static_cast<size_t>(s)][pick[static_cast<size_t>(s)]]);
                            }
                            if (!ok) break;
                            out.push_back(theta_node(kids));
                            int c = k - 1;
                            while (c >= 0 && pick[static_cast<size_t>(c)] + 1 == choices[static_cast<size_t>(c)].size()) {
                                pick[static_cast<size_t>(c)] = 0;
                                --c;
                            }
                            if (c < 0) break;
                            ++pick[static_cast<size_t>(c)];
                        }
                        return;
                    }
                    for (int v = 0; v <= left; ++v) {
                        parts[static_cast<size_t>(slot)] = v;
                        fill(slot + 1, left - v);
                    }
                };
                fill(0, rest);
            }
        }
        return memo.emplace(key, std::move(out)).first->second;
    };
    std::vector<ThetaCell> all;
    for (int e = 0; e <= d; ++e) {
        const auto& lvl = exact(e, max_depth);
        all.insert(all.end(), lvl.begin(), lvl.end());
    }
    return all;
}

std::string encode(const ThetaMorphism& f) {
    std::string s = "{" + encode(f.src) + ">" + encode(f.tgt) + ";b";
    for (int v : f.base.values) s += std::to_string(v) + ",";
    s += ";";
    for (const auto& row : f.comps) {
        s += "(";
        for (const ThetaMorphism& g : row) s += encode(g);
        s += ")";
    }
    return s + "}";
}

bool validate_theta(const ThetaMorphism& f, std::string* why) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    if (f.base.src != f.src.arity() || f.base.tgt != f.tgt.arity()) return fail("base endpoints");
    if (!is_valid(f.base)) return fail("invalid base");
    if (f.comps.size() != static_cast<size_t>(f.src.arity())) return fail("component row count");
    for (int i = 0; i < f.src.arity(); ++i) {
        int lo = f.base.values[static_cast<size_t>(i)];
        int hi = f.base.values[static_cast<size_t>(i) + 1];
        if (static_cast<int>(f.comps[static_cast<size_t>(i)].size()) != hi - lo) return fail("component count");
        for (int t = 0; t < hi - lo; ++t) {
            const ThetaMorphism& g = f.comps[static_cast<size_t>(i)][static_cast<size_t>(t)];
            if (!(g.src == f.src.kids[static_cast<size_t>(i)])) return fail("component source");
            if (!(g.tgt == f.tgt.kids[static_cast<size_t>(lo + t)])) return fail("component target");
            std::string inner;
            if (!validate_theta(g, &inner)) return fail(inner);
        }
    }
    return true;
}

ThetaMorphism theta_identity(const ThetaCell& T) {
    ThetaMorphism f;
    f.src = f.tgt = T;
    f.base = simplex_identity(T.arity());
    for (int i = 0; i < T.arity(); ++i) f.comps.push_back({theta_identity(T.kids[static_cast<size_t>(i)])});
    return f;
}

ThetaMorphism wreath_compose(const ThetaMorphism& second, const ThetaMorphism& first) {
    if (!(first.tgt == second.src)) throw std::invalid_argument("wreath_compose: object mismatch");
    ThetaMorphism h;
    h.src = first.src;
    h.tgt = second.tgt;
    h.base = compose(first.base, second.base);
    for (int i = 0; i < h.src.arity(); ++i) {
        std::vector<ThetaMorphism> row;
        int lo = h.base.values[static_cast<size_t>(i)];
        int hi = h.base.values[static_cast<size_t>(i) + 1];
        for (int j = lo + 1; j <= hi; ++j) {
            // the unique k in F(first.base)(i+1) with j in F(second.base)(k)
            int klo = first.base.values[static_cast<size_t>(i)];
            int khi = first.base.values[static_cast<size_t>(i) + 1];
            int found = -1;
            for (int k = klo + 1; k <= khi; ++k)
                if (second.base.values[static_cast<size_t>(k) - 1] < j && j <= second.base.values[static_cast<size_t>(k)]) {
                    found = k;
                    break;
                }
            if (found < 0) throw std::logic_error("wreath_compose: routing failed");
            const ThetaMorphism& fk = first.comps[static_cast<size_t>(i)][static_cast<size_t>(found - klo - 1)];
            const ThetaMorphism& qj =
                second.comps[static_cast<size_t>(found) - 1]
                            [static_cast<size_t>(j - second.base.values[static_cast<size_t>(found) - 1] - 1)];
            row.push_back(wreath_compose(qj, fk));
        }
        h.comps.push_back(std::move(row));
    }
    return h;
}

const std::vector<ThetaMorphism>& theta_hom(const ThetaCell& S, const ThetaCell& T) {
    static std::map<std::pair<std::string, std::string>, std::vector<ThetaMorphism>> cache;
    auto key = std::make_pair(encode(S), encode(T));
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::vector<ThetaMorphism> out;
    for (const SimplexMap& base : all_simplex_maps(S.arity(), T.arity())) {
        // per slot i, the (j, hom) choices; bail if any hom is empty
        std::vector<std::vector<const std::vector<ThetaMorphism>*>> slot_homs(static_cast<size_t>(S.arity()));
        bool feasible = true;
        for (int i = 0; i < S.arity() && feasible; ++i) {
            int lo = base.values[static_cast<size_t>(i)];
            int hi = base.values[static_cast<size_t>(i) + 1];
            for (int j = lo + 1; j <= hi; ++j) {
                const auto& h = theta_hom(S.kids[static_cast<size_t>(i)], T.kids[static_cast<size_t>(j) - 1]);
                if (h.empty()) {
                    feasible = false;
                    break;
                }
                slot_homs[static_cast<size_t>(i)].push_back(&h);
            }
        }
        if (!feasible) continue;
        // cartesian product over all slots
        std::vector<std::pair<int, int>> slots;  // (i, t)
        for (int i = 0; i < S.arity(); ++i)
            for (size_t t = 0; t < slot_homs[static_cast<size_t>(i)].size(); ++t)
                slots.push_back({i, static_cast<int>(t)});
        std::vector<size_t> pick(slots.size(), 0);
        while (true) {
            ThetaMorphism f;
            f.src = S;
            f.tgt = T;
            f.base = base;
            f.comps.assign(static_cast<size_t>(S.arity()), {});
            for (size_t s = 0; s < slots.size(); ++s) {
                auto [i, t] = slots[s];
                f.comps[static_cast<size_t>(i)].push_back((*slot_homs[static_cast<size_t>(i)][static_cast<size_t>(t)])[pick[s]]);
            }
            out.push_back(std::move(f));
            int c = static_cast<int>(slots.size()) - 1;
            while (c >= 0) {
                auto [i, t] = slots[static_cast<size_t>(c)];
                if (pick[static_cast<size_t>(c)] + 1 < slot_homs[static_cast<size_t>(i)][static_cast<size_t>(t)]->size()) break;
                pick[static_cast<size_t>(c)] = 0;
                --c;
            }
            if (c < 0) break;
            ++pick[static_cast<size_t>(c)];
        }
    }
    return cache.emplace(std::move(key), std::move(out)).first->second;
}

ClassifyResult classify(const ThetaMorphism& f) {
    static std::map<std::string, ClassifyResult> cache;
    std::string key = encode(f);
    auto hit = cache.find(key);
    if (hit != cache.end()) return hit->second;
    int bound = std::max(reedy_degree(f.src), reedy_degree(f.tgt));
    bool inj = true, surj = true;
    for (const ThetaCell& R : cells_up_to_degree(bound)) {
        const auto& to_src = theta_hom(R, f.src);
        const auto& to_tgt = theta_hom(R, f.tgt);
        std::set<std::string> image;
        for (const ThetaMorphism& u : to_src) image.insert(encode(wreath_compose(f, u)));
        if (image.size() != to_src.size()) inj = false;
        if (image.size() != to_tgt.size()) surj = false;
        if (!inj && !surj) break;
    }
    ClassifyResult r;
    r.iso = inj && surj;
    if (inj)
        r.cls = ThetaClass::Plus;
    else if (surj)
        r.cls = ThetaClass::Minus;
    else
        r.cls = ThetaClass::Mixed;
    cache.emplace(std::move(key), r);
    return r;
}

std::vector<std::pair<ThetaMorphism, ThetaMorphism>> pm_factorizations(const ThetaMorphism& f) {
    std::vector<std::pair<ThetaMorphism, ThetaMorphism>> out;
    int bound = std::min(reedy_degree(f.src), reedy_degree(f.tgt));
    for (const ThetaCell& Q : cells_up_to_degree(bound))
        for (const ThetaMorphism& e : theta_hom(f.src, Q)) {
            ClassifyResult ce = classify(e);
            if (ce.cls != ThetaClass::Minus && !ce.iso) continue;
            for (const ThetaMorphism& m : theta_hom(Q, f.tgt)) {
                ClassifyResult cm = classify(m);
                if (cm.cls != ThetaClass::Plus && !cm.iso) continue;
                if (wreath_compose(m, e) == f) out.push_back({e, m});
            }
        }
    return out;
}

std::vector<ThetaMorphism> hyperfaces(const ThetaCell& T) {
    std::vector<ThetaMorphism> out;
    int d = reedy_degree(T);
    if (d == 0) return out;
    for (const ThetaCell& S : cells_up_to_degree(d - 1)) {
        if (reedy_degree(S) != d - 1) continue;
        for (const ThetaMorphism& f : theta_hom(S, T))
            if (classify(f).cls == ThetaClass::Plus) out.push_back(f);
    }
    return out;
}

bool is_inner(const ThetaMorphism& f) {
    if (f.base.values.empty()) return true;
    if (f.base.values.front() != 0 || f.base.values.back() != f.base.tgt) return false;
    for (const auto& row : f.comps)
        for (const ThetaMorphism& g : row)
            if (!is_inner(g)) return false;
    return true;
}

int ThetaSubfunctor::count(const ThetaCell& sort) const {
    for (size_t s = 0; s < sorts.size(); ++s)
        if (sorts[s] == sort) return static_cast<int>(std::count(member[s].begin(), member[s].end(), true));
    return 0;
}

int ThetaSubfunctor::count_nondegenerate(const ThetaCell& sort) const {
    for (size_t s = 0; s < sorts.size(); ++s) {
        if (!(sorts[s] == sort)) continue;
        const auto& hom = theta_hom(sorts[s], T);
        int n = 0;
        for (size_t u = 0; u < hom.size(); ++u) {
            if (!member[s][u]) continue;
            // u is degenerate if it factors through a strictly smaller cell
            // along a minus map
            bool degen = false;
            int d = reedy_degree(sorts[s]);
            for (const ThetaCell& Q : cells_up_to_degree(d - 1)) {
                for (const ThetaMorphism& v : theta_hom(sorts[s], Q)) {
                    if (classify(v).cls != ThetaClass::Minus || classify(v).iso) continue;
                    for (const ThetaMorphism& w : theta_hom(Q, T))
                        if (wreath_compose(w, v) == hom[u]) {
                            degen = true;
                            break;
                        }
                    if (degen) break;
                }
                if (degen) break;
            }
            if (!degen) ++n;
        }
        return n;
    }
    return 0;
}

ThetaSubfunctor image_union(const ThetaCell& T, const std::vector<ThetaMorphism>& maps, int bound) {
    ThetaSubfunctor F;
    F.T = T;
    F.bound = bound;
    F.sorts = cells_up_to_degree(bound);
    for (const ThetaCell& R : F.sorts) {
        const auto& hom = theta_hom(R, T);
        std::map<std::string, int> index;
        for (size_t u = 0; u < hom.size(); ++u) index[encode(hom[u])] = static_cast<int>(u);
        std::vector<bool> mem(hom.size(), false);
        for (const ThetaMorphism& h : maps)
            for (const ThetaMorphism& u : theta_hom(R, h.src)) mem[static_cast<size_t>(index.at(encode(wreath_compose(h, u))))] = true;
        F.member.push_back(std::move(mem));
    }
    return F;
}

ThetaSubfunctor horn(const ThetaCell& T, const ThetaMorphism& kappa, int bound) {
    std::vector<ThetaMorphism> faces;
    bool found = false;
    for (const ThetaMorphism& h : hyperfaces(T)) {
        if (h == kappa) {
            found = true;
            continue;
        }
        faces.push_back(h);
    }
    if (!found) throw std::invalid_argument("horn: kappa is not a hyperface of T");
    return image_union(T, faces, bound);
}

ThetaSubfunctor spine(const ThetaCell& T, int bound) { return image_union(T, spine_globes(T), bound); }

ThetaSubfunctor intersect(const ThetaSubfunctor& a, const ThetaSubfunctor& b) {
    if (!(a.T == b.T) || a.bound != b.bound) throw std::invalid_argument("intersect: shape mismatch");
    ThetaSubfunctor F = a;
    for (size_t s = 0; s < F.member.size(); ++s)
        for (size_t u = 0; u < F.member[s].size(); ++u) F.member[s][u] = F.member[s][u] && b.member[s][u];
    return F;
}

std::vector<ThetaMorphism> spine_globes(const ThetaCell& T) {
    if (T.arity() == 0) return {theta_identity(T)};
    std::vector<ThetaMorphism> out;
    for (int i = 0; i < T.arity(); ++i) {
        for (const ThetaMorphism& g : spine_globes(T.kids[static_cast<size_t>(i)])) {
            ThetaMorphism f;
            f.src = theta_node({g.src});
            f.tgt = T;
            f.base = SimplexMap{1, T.arity(), {i, i + 1}};
            f.comps = {{g}};
            out.push_back(std::move(f));
        }
    }
    return out;
}

bool is_valid(const PastingDiagram& p) {
    if (p.dims.empty()) return false;
    if (p.dims.size() % 2 == 0) return false;
    for (size_t i = 1; i + 1 < p.dims.size(); i += 2)
        if (p.dims[i] > std::min(p.dims[i - 1], p.dims[i + 1])) return false;
    return true;
}

PastingDiagram pasting_diagram_of(const ThetaCell& T) {
    if (T.arity() == 0) return PastingDiagram{{0}};
    PastingDiagram out;
    for (int i = 0; i < T.arity(); ++i) {
        PastingDiagram inner = pasting_diagram_of(T.kids[static_cast<size_t>(i)]);
        if (i > 0) out.dims.push_back(0);
        for (long long d : inner.dims) out.dims.push_back(d + 1);
    }
    return out;
}

PastingDiagram shift_S(const PastingDiagram& p) {
    PastingDiagram q = p;
    for (long long& d : q.dims) ++d;
    return q;
}

long long shift_S(long long globe) { return globe + 1; }

// --- truncated simplicial sets ---------------------------------------------

int TruncSSet::act(int n, int x, const SimplexMap& phi) const {
    if (phi.tgt != n) throw std::invalid_argument("act: level mismatch");
    SimplexNormalForm nf = normal_form(phi);
    int cur = x;
    int lvl = n;
    for (int i : nf.faces) {
        cur = face[static_cast<size_t>(lvl)][static_cast<size_t>(i)][static_cast<size_t>(cur)];
        --lvl;
    }
    for (int j : nf.degens) {
        cur = degen[static_cast<size_t>(lvl)][static_cast<size_t>(j)][static_cast<size_t>(cur)];
        ++lvl;
    }
    return cur;
}

bool validate_trunc(const TruncSSet& X, std::string* why) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    if (static_cast<int>(X.size.size()) != X.bound + 1) return fail("level count");
    for (int n = 1; n <= X.bound; ++n) {
        if (static_cast<int>(X.face[static_cast<size_t>(n)].size()) != n + 1) return fail("face table arity");
        for (const auto& tab : X.face[static_cast<size_t>(n)])
            if (static_cast<int>(tab.size()) != X.size[static_cast<size_t>(n)]) return fail("face table size");
    }
    for (int n = 0; n < X.bound; ++n) {
        if (static_cast<int>(X.degen[static_cast<size_t>(n)].size()) != n + 1) return fail("degen table arity");
        for (const auto& tab : X.degen[static_cast<size_t>(n)])
            if (static_cast<int>(tab.size()) != X.size[static_cast<size_t>(n)]) return fail("degen table size");
    }
    auto F = [&](int n, int i, int x) { return X.face[static_cast<size_t>(n)][static_cast<size_t>(i)][static_cast<size_t>(x)]; };
    auto S = [&](int n, int j, int x) { return X.degen[static_cast<size_t>(n)][static_cast<size_t>(j)][static_cast<size_t>(x)]; };
    for (int n = 2; n <= X.bound; ++n)
        for (int x = 0; x < X.size[static_cast<size_t>(n)]; ++x)
            for (int j = 1; j <= n; ++j)
                for (int i = 0; i < j; ++i)
                    if (F(n - 1, i, F(n, j, x)) != F(n - 1, j - 1, F(n, i, x))) return fail("dd identity");
    for (int n = 0; n + 2 <= X.bound; ++n)
        for (int x = 0; x < X.size[static_cast<size_t>(n)]; ++x)
            for (int j = 0; j <= n; ++j)
                for (int i = 0; i <= j; ++i)
                    if (S(n + 1, i, S(n, j, x)) != S(n + 1, j + 1, S(n, i, x))) return fail("ss identity");
    for (int n = 1; n <= X.bound - 1; ++n)
        for (int x = 0; x < X.size[static_cast<size_t>(n)]; ++x)
            for (int j = 0; j <= n; ++j)
                for (int i = 0; i <= n + 1; ++i) {
                    int lhs = F(n + 1, i, S(n, j, x));
                    int rhs;
                    if (i < j)
                        rhs = S(n - 1, j - 1, F(n, i, x));
                    else if (i == j || i == j + 1)
                        rhs = x;
                    else
                        rhs = S(n - 1, j, F(n, i - 1, x));
                    if (lhs != rhs) return fail("ds identity");
                }
    return true;
}

TruncSSet representable_trunc(int n, int bound) {
    TruncSSet X;
    X.bound = bound;
    std::vector<std::vector<SimplexMap>> tables(static_cast<size_t>(bound) + 1);
    std::vector<std::map<std::vector<int>, int>> index(static_cast<size_t>(bound) + 1);
    for (int m = 0; m <= bound; ++m) {
        tables[static_cast<size_t>(m)] = all_simplex_maps(m, n);
        for (size_t u = 0; u < tables[static_cast<size_t>(m)].size(); ++u)
            index[static_cast<size_t>(m)][tables[static_cast<size_t>(m)][u].values] = static_cast<int>(u);
        X.size.push_back(static_cast<int>(tables[static_cast<size_t>(m)].size()));
        X.names.push_back({});
        for (const auto& t : tables[static_cast<size_t>(m)]) X.names.back().push_back(to_string(t));
    }
    X.face.resize(static_cast<size_t>(bound) + 1);
    X.degen.resize(static_cast<size_t>(bound) + 1);
    for (int m = 1; m <= bound; ++m)
        for (int i = 0; i <= m; ++i) {
            std::vector<int> tab;
            for (const auto& u : tables[static_cast<size_t>(m)])
                tab.push_back(index[static_cast<size_t>(m) - 1].at(compose(simplex_face(m - 1, i), u).values));
            X.face[static_cast<size_t>(m)].push_back(std::move(tab));
        }
    for (int m = 0; m < bound; ++m)
        for (int j = 0; j <= m; ++j) {
            std::vector<int> tab;
            for (const auto& u : tables[static_cast<size_t>(m)])
                tab.push_back(index[static_cast<size_t>(m) + 1].at(compose(simplex_degeneracy(m, j), u).values));
            X.degen[static_cast<size_t>(m)].push_back(std::move(tab));
        }
    return X;
}

TruncSSet nerve_of_category(const FiniteCategory& C, int bound) {
    TruncSSet X;
    X.bound = bound;
    // strings of composable arrows; level 0 = objects
    std::vector<std::vector<std::vector<int>>> strings(static_cast<size_t>(bound) + 1);
    std::vector<std::map<std::vector<int>, int>> index(static_cast<size_t>(bound) + 1);
    for (int o = 0; o < C.n_obj; ++o) strings[0].push_back({o});
    for (int m = 1; m <= bound; ++m) {
        if (m == 1) {
            for (int f = 0; f < C.n_arr(); ++f) strings[1].push_back({f});
        } else {
            for (const auto& s : strings[static_cast<size_t>(m) - 1])
                for (int f = 0; f < C.n_arr(); ++f)
                    if (C.src(f) == C.tgt(s.back())) {
                        auto t = s;
                        t.push_back(f);
                        strings[static_cast<size_t>(m)].push_back(std::move(t));
                    }
        }
    }
    for (int m = 0; m <= bound; ++m) {
        for (size_t u = 0; u < strings[static_cast<size_t>(m)].size(); ++u)
            index[static_cast<size_t>(m)][strings[static_cast<size_t>(m)][u]] = static_cast<int>(u);
        X.size.push_back(static_cast<int>(strings[static_cast<size_t>(m)].size()));
        X.names.push_back({});
        for (const auto& s : strings[static_cast<size_t>(m)]) {
            std::string nm;
            for (size_t t = 0; t < s.size(); ++t) nm += (t ? "." : "") + std::to_string(s[t]);
            X.names.back().push_back(nm);
        }
    }
    X.face.resize(static_cast<size_t>(bound) + 1);
    X.degen.resize(static_cast<size_t>(bound) + 1);
    for (int m = 1; m <= bound; ++m)
        for (int i = 0; i <= m; ++i) {
            std::vector<int> tab;
            for (const auto& s : strings[static_cast<size_t>(m)]) {
                std::vector<int> t;
                if (m == 1) {
                    t = {i == 0 ? C.tgt(s[0]) : C.src(s[0])};
                } else if (i == 0) {
                    t.assign(s.begin() + 1, s.end());
                } else if (i == m) {
                    t.assign(s.begin(), s.end() - 1);
                } else {
                    t.assign(s.begin(), s.end());
                    int g = C.compose(t[static_cast<size_t>(i) - 1], t[static_cast<size_t>(i)]);
                    t[static_cast<size_t>(i) - 1] = g;
                    t.erase(t.begin() + i);
                }
                tab.push_back(index[static_cast<size_t>(m) - 1].at(t));
            }
            X.face[static_cast<size_t>(m)].push_back(std::move(tab));
        }
    for (int m = 0; m < bound; ++m)
        for (int j = 0; j <= m; ++j) {
            std::vector<int> tab;
            for (const auto& s : strings[static_cast<size_t>(m)]) {
                std::vector<int> t;
                if (m == 0) {
                    t = {C.ident[static_cast<size_t>(s[0])]};
                } else {
                    t.assign(s.begin(), s.end());
                    int obj = j == 0 ? C.src(s[0]) : C.tgt(s[static_cast<size_t>(j) - 1]);
                    t.insert(t.begin() + j, C.ident[static_cast<size_t>(obj)]);
                }
                tab.push_back(index[static_cast<size_t>(m) + 1].at(t));
            }
            X.degen[static_cast<size_t>(m)].push_back(std::move(tab));
        }
    return X;
}

namespace {

TruncInclusion sub_inclusion(const TruncSSet& full, const std::function<bool(int, int)>& member, const std::string& name) {
    TruncInclusion inc;
    inc.full = full;
    inc.name = name;
    inc.sub.bound = full.bound;
    std::vector<std::vector<int>> back(static_cast<size_t>(full.bound) + 1);
    inc.elem_map.resize(static_cast<size_t>(full.bound) + 1);
    for (int n = 0; n <= full.bound; ++n) {
        back[static_cast<size_t>(n)].assign(static_cast<size_t>(full.size[static_cast<size_t>(n)]), -1);
        int cnt = 0;
        inc.sub.names.push_back({});
        for (int x = 0; x < full.size[static_cast<size_t>(n)]; ++x)
            if (member(n, x)) {
                back[static_cast<size_t>(n)][static_cast<size_t>(x)] = cnt++;
                inc.elem_map[static_cast<size_t>(n)].push_back(x);
                inc.sub.names.back().push_back(full.names[static_cast<size_t>(n)][static_cast<size_t>(x)]);
            }
        inc.sub.size.push_back(cnt);
    }
    inc.sub.face.resize(static_cast<size_t>(full.bound) + 1);
    inc.sub.degen.resize(static_cast<size_t>(full.bound) + 1);
    for (int n = 1; n <= full.bound; ++n)
        for (int i = 0; i <= n; ++i) {
            std::vector<int> tab;
            for (int x : inc.elem_map[static_cast<size_t>(n)]) {
                int img = full.face[static_cast<size_t>(n)][static_cast<size_t>(i)][static_cast<size_t>(x)];
                int b = back[static_cast<size_t>(n) - 1][static_cast<size_t>(img)];
                if (b < 0) throw std::logic_error("sub_inclusion: not face-closed");
                tab.push_back(b);
            }
            inc.sub.face[static_cast<size_t>(n)].push_back(std::move(tab));
        }
    for (int n = 0; n < full.bound; ++n)
        for (int j = 0; j <= n; ++j) {
            std::vector<int> tab;
            for (int x : inc.elem_map[static_cast<size_t>(n)]) {
                int img = full.degen[static_cast<size_t>(n)][static_cast<size_t>(j)][static_cast<size_t>(x)];
                int b = back[static_cast<size_t>(n) + 1][static_cast<size_t>(img)];
                if (b < 0) throw std::logic_error("sub_inclusion: not degeneracy-closed");
                tab.push_back(b);
            }
            inc.sub.degen[static_cast<size_t>(n)].push_back(std::move(tab));
        }
    return inc;
}

std::vector<bool> image_bits(const SimplexMap& u, int n) {
    std::vector<bool> hit(static_cast<size_t>(n) + 1, false);
    for (int v : u.values) hit[static_cast<size_t>(v)] = true;
    return hit;
}

}  // namespace

TruncInclusion spine_inclusion(int n, int bound) {
    TruncSSet full = representable_trunc(n, bound);
    std::vector<std::vector<SimplexMap>> tables(static_cast<size_t>(bound) + 1);
    for (int m = 0; m <= bound; ++m) tables[static_cast<size_t>(m)] = all_simplex_maps(m, n);
    return sub_inclusion(
        full,
        [&](int m, int x) {
            const SimplexMap& u = tables[static_cast<size_t>(m)][static_cast<size_t>(x)];
            return u.values.back() - u.values.front() <= 1;
        },
        "V[" + std::to_string(n) + "]");
}

TruncInclusion horn_inclusion(int n, int k, int bound) {
    TruncSSet full = representable_trunc(n, bound);
    std::vector<std::vector<SimplexMap>> tables(static_cast<size_t>(bound) + 1);
    for (int m = 0; m <= bound; ++m) tables[static_cast<size_t>(m)] = all_simplex_maps(m, n);
    return sub_inclusion(
        full,
        [&](int m, int x) {
            auto hit = image_bits(tables[static_cast<size_t>(m)][static_cast<size_t>(x)], n);
            for (int v = 0; v <= n; ++v)
                if (v != k && !hit[static_cast<size_t>(v)]) return true;
            return false;
        },
        "Horn[" + std::to_string(n) + "," + std::to_string(k) + "]");
}

TruncInclusion boundary_inclusion(int n, int bound) {
    TruncSSet full = representable_trunc(n, bound);
    std::vector<std::vector<SimplexMap>> tables(static_cast<size_t>(bound) + 1);
    for (int m = 0; m <= bound; ++m) tables[static_cast<size_t>(m)] = all_simplex_maps(m, n);
    return sub_inclusion(
        full,
        [&](int m, int x) {
            auto hit = image_bits(tables[static_cast<size_t>(m)][static_cast<size_t>(x)], n);
            return !std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
        },
        "Boundary[" + std::to_string(n) + "]");
}

namespace {

// enumerate maps A -> X with some elements preassigned (-1 = free)
void enumerate_maps(const TruncSSet& A, const TruncSSet& X, std::vector<std::vector<int>>& assign,
                    const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
    // degeneracy-forced elements
    struct Forced {
        int y = -1, j = -1;
    };
    std::vector<std::vector<Forced>> forced(static_cast<size_t>(A.bound) + 1);
    for (int n = 0; n <= A.bound; ++n) forced[static_cast<size_t>(n)].resize(static_cast<size_t>(A.size[static_cast<size_t>(n)]));
    for (int n = 0; n < A.bound; ++n)
        for (int j = 0; j <= n; ++j)
            for (int y = 0; y < A.size[static_cast<size_t>(n)]; ++y) {
                int x = A.degen[static_cast<size_t>(n)][static_cast<size_t>(j)][static_cast<size_t>(y)];
                if (forced[static_cast<size_t>(n) + 1][static_cast<size_t>(x)].y < 0)
                    forced[static_cast<size_t>(n) + 1][static_cast<size_t>(x)] = {y, j};
            }

    std::function<void(int, int)> rec = [&](int n, int x) {
        if (n > A.bound) {
            emit(assign);
            return;
        }
        if (x == A.size[static_cast<size_t>(n)]) {
            rec(n + 1, 0);
            return;
        }
        auto face_ok = [&](int img) {
            if (n == 0) return true;
            for (int i = 0; i <= n; ++i) {
                int af = A.face[static_cast<size_t>(n)][static_cast<size_t>(i)][static_cast<size_t>(x)];
                int xf = X.face[static_cast<size_t>(n)][static_cast<size_t>(i)][static_cast<size_t>(img)];
                if (assign[static_cast<size_t>(n) - 1][static_cast<size_t>(af)] != xf) return false;
            }
            return true;
        };
        int pre = assign[static_cast<size_t>(n)][static_cast<size_t>(x)];
        const Forced& fo = forced[static_cast<size_t>(n)][static_cast<size_t>(x)];
        if (fo.y >= 0) {
            int img = X.degen[static_cast<size_t>(n) - 1][static_cast<size_t>(fo.j)]
                             [static_cast<size_t>(assign[static_cast<size_t>(n) - 1][static_cast<size_t>(fo.y)])];
            if (pre >= 0 && pre != img) return;
            if (!face_ok(img)) return;
            assign[static_cast<size_t>(n)][static_cast<size_t>(x)] = img;
            rec(n, x + 1);
            assign[static_cast<size_t>(n)][static_cast<size_t>(x)] = pre;
            return;
        }
        if (pre >= 0) {
            if (face_ok(pre)) rec(n, x + 1);
            return;
        }
        for (int img = 0; img < X.size[static_cast<size_t>(n)]; ++img) {
            if (!face_ok(img)) continue;
            assign[static_cast<size_t>(n)][static_cast<size_t>(x)] = img;
            rec(n, x + 1);
        }
        assign[static_cast<size_t>(n)][static_cast<size_t>(x)] = -1;
    };
    rec(0, 0);
}

}  // namespace

std::vector<std::vector<std::vector<int>>> hom_trunc(const TruncSSet& A, const TruncSSet& X) {
    if (A.bound != X.bound) throw std::invalid_argument("hom_trunc: bounds differ");
    std::vector<std::vector<int>> assign(static_cast<size_t>(A.bound) + 1);
    for (int n = 0; n <= A.bound; ++n) assign[static_cast<size_t>(n)].assign(static_cast<size_t>(A.size[static_cast<size_t>(n)]), -1);
    std::vector<std::vector<std::vector<int>>> out;
    enumerate_maps(A, X, assign, [&](const std::vector<std::vector<int>>& a) { out.push_back(a); });
    return out;
}

bool segal_check(const TruncSSet& X, int D, std::string* why) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    if (D < 2) return fail("bound too small to be meaningful");
    if (D > X.bound) return fail("bound exceeds the truncation");
    for (int n = 2; n <= D; ++n) {
        // spine edges of an n-element
        std::vector<SimplexMap> edges;
        for (int k = 1; k <= n; ++k) edges.push_back(SimplexMap{1, n, {k - 1, k}});
        std::set<std::vector<int>> seen;
        for (int x = 0; x < X.size[static_cast<size_t>(n)]; ++x) {
            std::vector<int> chain;
            for (const auto& e : edges) chain.push_back(X.act(n, x, e));
            if (!seen.insert(chain).second) return fail("Segal map not injective at level " + std::to_string(n));
        }
        // count compatible chains
        long long chains = 0;
        std::function<void(int, int)> count = [&](int k, int tail_vertex) {
            if (k == n) {
                ++chains;
                return;
            }
            for (int e = 0; e < X.size[1]; ++e) {
                int s = X.face[1][1][static_cast<size_t>(e)];
                if (k > 0 && s != tail_vertex) continue;
                count(k + 1, X.face[1][0][static_cast<size_t>(e)]);
            }
        };
        count(0, -1);
        if (chains != static_cast<long long>(X.size[static_cast<size_t>(n)]))
            return fail("Segal map not surjective at level " + std::to_string(n));
    }
    return true;
}

OrthReport orthogonal_to(const TruncSSet& X, const std::vector<TruncInclusion>& regulus) {
    OrthReport rep;
    for (const TruncInclusion& inc : regulus) {
        auto maps = hom_trunc(inc.sub, X);
        for (const auto& f : maps) {
            std::vector<std::vector<int>> assign(static_cast<size_t>(inc.full.bound) + 1);
            for (int n = 0; n <= inc.full.bound; ++n)
                assign[static_cast<size_t>(n)].assign(static_cast<size_t>(inc.full.size[static_cast<size_t>(n)]), -1);
            for (int n = 0; n <= inc.full.bound; ++n)
                for (size_t s = 0; s < inc.elem_map[static_cast<size_t>(n)].size(); ++s)
                    assign[static_cast<size_t>(n)][static_cast<size_t>(inc.elem_map[static_cast<size_t>(n)][s])] =
                        f[static_cast<size_t>(n)][s];
            int fillers = 0;
            enumerate_maps(inc.full, X, assign, [&](const std::vector<std::vector<int>>&) { ++fillers; });
            if (fillers == 0) rep.all_exist = false;
            if (fillers != 1) rep.orthogonal = false;
        }
    }
    return rep;
}

TruncSSet duplicate_top_cell(const TruncSSet& X, int elem) {
    TruncSSet Y = X;
    int n = Y.bound;
    Y.size[static_cast<size_t>(n)] += 1;
    Y.names[static_cast<size_t>(n)].push_back(Y.names[static_cast<size_t>(n)][static_cast<size_t>(elem)] + "'");
    for (int i = 0; i <= n; ++i)
        Y.face[static_cast<size_t>(n)][static_cast<size_t>(i)].push_back(
            X.face[static_cast<size_t>(n)][static_cast<size_t>(i)][static_cast<size_t>(elem)]);
    return Y;
}

}  // namespace kanspec
