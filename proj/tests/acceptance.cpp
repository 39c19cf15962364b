// Acceptance suite: one line per criterion, exit 1 on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>

#include "kanspec/json_io.hpp"
#include "kanspec/limits_lab.hpp"
#include "kanspec/spectrum.hpp"
#include "kanspec/theta.hpp"
#include "test_support.hpp"

using namespace kanspec;

namespace {

int g_fail = 0;

void criterion(int number, const std::string& what, const std::function<bool(std::string&)>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %2d %s: %s (%.2fs)%s%s\n", number, what.c_str(), ok ? "PASS" : "FAIL", secs,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) g_fail = 1;
}

PointedSSet ckp_pushout() {
    PointedSSet D1 = representable_plus(1);
    PointedSSet D0 = representable_plus(0);
    PointedMap f;
    f.assign = {basepoint_pair(0), DegenPair{{}, 1}};
    return collapse(D0, D1, f);
}

// ---- criterion 4 helpers ----------------------------------------------------

std::vector<std::vector<int>> monotone_lists(int max_idx, int max_len, bool decreasing) {
    std::vector<std::vector<int>> out{{}};
    std::vector<std::vector<int>> frontier{{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& w : frontier)
            for (int v = 0; v <= max_idx; ++v) {
                if (!w.empty()) {
                    if (decreasing && v >= w.back()) continue;
                    if (!decreasing && v <= w.back()) continue;
                }
                auto w2 = w;
                w2.push_back(v);
                next.push_back(w2);
            }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

StableMorphism shape_at(const std::vector<int>& faces, const std::vector<int>& degens, long long src) {
    StableMorphism f;
    f.src = src;
    f.faces = faces;
    f.degens = degens;
    f.tgt = src - static_cast<long long>(degens.size()) + static_cast<long long>(faces.size());
    return f;
}

StableMorphism oracle_compose(const StableMorphism& f, const StableMorphism& g) {
    long long k = std::max(st_min_stabilizer(f), st_min_stabilizer(g));
    SimplexNormalForm nf = normal_form(compose(st_stabilize(f, k), st_stabilize(g, k)));
    StableMorphism h;
    h.src = f.src;
    h.tgt = g.tgt;
    h.faces = nf.faces;
    h.degens = nf.degens;
    return h;
}

// ---- criterion 8 helpers ----------------------------------------------------

SequentialSpectrum random_spectrum(std::mt19937_64& rng, int max_tail, int max_cells) {
    SequentialSpectrum E;
    int m = std::uniform_int_distribution<int>(0, max_tail)(rng);
    for (int k = 0; k <= m; ++k) E.levels.push_back(testing::random_pointed_sset(rng, max_cells, 2));
    for (int k = 0; k < m; ++k) {
        OmegaResult O = omega_K(E.levels[static_cast<size_t>(k) + 1], E.levels[static_cast<size_t>(k)].max_dim());
        E.maps.push_back(testing::random_map(rng, E.levels[static_cast<size_t>(k)], O.sset));
    }
    return E;
}

// ---- criterion 9 helpers ----------------------------------------------------

CatDiagram constant_diagram(const FiniteCategory& J, const FiniteCategory& C) {
    CatDiagram X;
    X.J = J;
    for (int j = 0; j < J.n_obj; ++j) X.value.push_back(C);
    for (int f = 0; f < J.n_arr(); ++f) X.arrow.push_back(identity_functor(C));
    return X;
}

CatDiagram counterexample_diagram() {
    FiniteCategory J = parallel_pair_category();
    FiniteCategory pt = terminal_category();
    FiniteCategory I = iso_category();
    CatDiagram X;
    X.J = J;
    X.value = {pt, I};
    X.arrow.resize(static_cast<size_t>(J.n_arr()));
    X.arrow[static_cast<size_t>(J.ident[0])] = identity_functor(pt);
    X.arrow[static_cast<size_t>(J.ident[1])] = identity_functor(I);
    FiniteFunctor s, t;
    s.obj = {0};
    s.arr = {I.ident[0]};
    t.obj = {1};
    t.arr = {I.ident[1]};
    X.arrow[2] = s;
    X.arrow[3] = t;
    return X;
}

// ---- criterion 12 helpers ---------------------------------------------------

// flat composition-table form of a small category, for the exhaustive sweep
struct RawCat {
    int k = 0;   // objects
    int na = 0;  // arrows including identities (identity of x is arrow x)
    std::vector<int> src, tgt;
    std::vector<int> comp;  // comp[g*na+f] = g after f

    int at(int f, int g) const { return comp[static_cast<size_t>(g) * static_cast<size_t>(na) + static_cast<size_t>(f)]; }
    FiniteCategory to_category() const {
        FiniteCategory C;
        C.n_obj = k;
        for (int f = 0; f < na; ++f)
            C.arrows.push_back({src[static_cast<size_t>(f)], tgt[static_cast<size_t>(f)],
                                f < k ? "id" + std::to_string(f) : "f" + std::to_string(f - k)});
        for (int x = 0; x < k; ++x) C.ident.push_back(x);
        C.comp_table.assign(static_cast<size_t>(na), std::vector<int>(static_cast<size_t>(na), -1));
        for (int f = 0; f < na; ++f)
            for (int g = 0; g < na; ++g)
                if (tgt[static_cast<size_t>(f)] == src[static_cast<size_t>(g)])
                    C.comp_table[static_cast<size_t>(g)][static_cast<size_t>(f)] = at(f, g);
        return C;
    }
};

// backtracking with associativity propagation; identity laws pre-filled
struct CategoryEnumerator {
    RawCat E;
    std::vector<std::pair<int, int>> trail;
    const std::function<void(const RawCat&)>* emit = nullptr;

    int& at(int f, int g) { return E.comp[static_cast<size_t>(g) * static_cast<size_t>(E.na) + static_cast<size_t>(f)]; }

    bool set_entry(int f, int g, int h) {
        if (E.src[static_cast<size_t>(h)] != E.src[static_cast<size_t>(f)] ||
            E.tgt[static_cast<size_t>(h)] != E.tgt[static_cast<size_t>(g)])
            return false;
        int& slot = at(f, g);
        if (slot >= 0) return slot == h;
        slot = h;
        trail.push_back({f, g});
        for (int x = 0; x < E.na; ++x) {
            if (E.tgt[static_cast<size_t>(x)] == E.src[static_cast<size_t>(f)]) {
                int xf = at(x, f);
                if (xf >= 0) {
                    int lhs = at(xf, g), rhs = at(x, h);
                    if (lhs >= 0 && rhs >= 0 && lhs != rhs) return false;
                    if (lhs >= 0 && rhs < 0 && !set_entry(x, h, lhs)) return false;
                    if (rhs >= 0 && lhs < 0 && !set_entry(xf, g, rhs)) return false;
                }
            }
            if (E.tgt[static_cast<size_t>(g)] == E.src[static_cast<size_t>(x)]) {
                int gx = at(g, x);
                if (gx >= 0) {
                    int lhs = at(h, x), rhs = at(f, gx);
                    if (lhs >= 0 && rhs >= 0 && lhs != rhs) return false;
                    if (lhs >= 0 && rhs < 0 && !set_entry(f, gx, lhs)) return false;
                    if (rhs >= 0 && lhs < 0 && !set_entry(h, x, rhs)) return false;
                }
            }
            if (E.tgt[static_cast<size_t>(f)] == E.src[static_cast<size_t>(x)] &&
                E.tgt[static_cast<size_t>(x)] == E.src[static_cast<size_t>(g)]) {
                int fx = at(f, x), xg = at(x, g);
                if (fx >= 0 && xg >= 0) {
                    int lhs = at(fx, g), rhs = at(f, xg);
                    if (lhs >= 0 && rhs >= 0 && lhs != rhs) return false;
                    if (lhs >= 0 && rhs < 0 && !set_entry(f, xg, lhs)) return false;
                    if (rhs >= 0 && lhs < 0 && !set_entry(fx, g, rhs)) return false;
                }
            }
        }
        return true;
    }

    bool full_assoc() {
        for (int a = 0; a < E.na; ++a)
            for (int b = 0; b < E.na; ++b) {
                if (E.tgt[static_cast<size_t>(a)] != E.src[static_cast<size_t>(b)]) continue;
                int ab = at(a, b);
                for (int c = 0; c < E.na; ++c) {
                    if (E.tgt[static_cast<size_t>(b)] != E.src[static_cast<size_t>(c)]) continue;
                    if (at(ab, c) != at(a, at(b, c))) return false;
                }
            }
        return true;
    }

    void fill(size_t next, const std::vector<std::pair<int, int>>& slots) {
        while (next < slots.size() && at(slots[next].first, slots[next].second) >= 0) ++next;
        if (next == slots.size()) {
            if (full_assoc()) (*emit)(E);
            return;
        }
        auto [f, g] = slots[next];
        for (int h = 0; h < E.na; ++h) {
            size_t mark = trail.size();
            if (set_entry(f, g, h)) fill(next + 1, slots);
            while (trail.size() > mark) {
                at(trail.back().first, trail.back().second) = -1;
                trail.pop_back();
            }
        }
    }
};

void enumerate_categories(int k, int extra, const std::function<void(const RawCat&)>& emit) {
    std::vector<std::pair<int, int>> ep(static_cast<size_t>(extra));
    std::function<void(int)> graphs = [&](int e) {
        if (e == extra) {
            CategoryEnumerator En;
            En.emit = &emit;
            En.E.k = k;
            En.E.na = k + extra;
            for (int x = 0; x < k; ++x) {
                En.E.src.push_back(x);
                En.E.tgt.push_back(x);
            }
            for (auto [s, t] : ep) {
                En.E.src.push_back(s);
                En.E.tgt.push_back(t);
            }
            En.E.comp.assign(static_cast<size_t>(En.E.na) * static_cast<size_t>(En.E.na), -1);
            for (int f = 0; f < En.E.na; ++f) {
                En.at(En.E.src[static_cast<size_t>(f)], f) = f;
                En.at(f, En.E.tgt[static_cast<size_t>(f)]) = f;
            }
            std::vector<std::pair<int, int>> slots;
            for (int f = k; f < En.E.na; ++f)
                for (int g = k; g < En.E.na; ++g)
                    if (En.E.tgt[static_cast<size_t>(f)] == En.E.src[static_cast<size_t>(g)]) slots.push_back({f, g});
            En.fill(0, slots);
            return;
        }
        int lo = e == 0 ? 0 : ep[static_cast<size_t>(e) - 1].first * k + ep[static_cast<size_t>(e) - 1].second;
        for (int st = lo; st < k * k; ++st) {
            ep[static_cast<size_t>(e)] = {st / k, st % k};
            graphs(e + 1);
        }
    };
    graphs(0);
}

// Tight nerve checks at bound 4: composable strings enumerated with radix
// codes, spine chains extracted by honest face-composite arithmetic, Segal
// map required to be a bijection onto composable chains.
bool nerve_checks_tight(const RawCat& C, bool mutate) {
    int na = C.na;
    static std::vector<int> elems[5];
    for (auto& v : elems) v.clear();
    for (int f = 0; f < na; ++f) elems[1].push_back(f);
    int pw[5] = {1, na, na * na, na * na * na, na * na * na * na};
    for (int m = 2; m <= 4; ++m)
        for (int code : elems[m - 1]) {
            int hi = code / pw[m - 2];
            for (int f = 0; f < na; ++f)
                if (C.src[static_cast<size_t>(f)] == C.tgt[static_cast<size_t>(hi)])
                    elems[m].push_back(code + pw[m - 1] * f);
        }
    if (mutate && !elems[4].empty()) elems[4].push_back(elems[4][0]);

    static std::vector<char> seen;
    for (int n = 2; n <= 4; ++n) {
        seen.assign(static_cast<size_t>(pw[n]), 0);
        for (int code : elems[n]) {
            int s[5];
            int len = n;
            int c2 = code;
            for (int t = 0; t < n; ++t) {
                s[t] = c2 % na;
                c2 /= na;
            }
            int key = 0;
            for (int kk = 1; kk <= n; ++kk) {
                // extract the edge (kk-1, kk) via outer face operators
                int e[5];
                int el = len;
                for (int t = 0; t < len; ++t) e[t] = s[t];
                while (el > kk) --el;            // top faces drop the last arrow
                for (int i = 0; i < kk - 1; ++i) {  // bottom faces drop the first
                    for (int t = 0; t + 1 < el; ++t) e[t] = e[t + 1];
                    --el;
                }
                if (el != 1) return false;
                key += e[0] * pw[kk - 1];
            }
            if (seen[static_cast<size_t>(key)]) return false;
            seen[static_cast<size_t>(key)] = 1;
            for (int t = 0; t + 1 < n; ++t) {
                int a = (key / pw[t]) % na, b = (key / pw[t + 1]) % na;
                if (C.tgt[static_cast<size_t>(a)] != C.src[static_cast<size_t>(b)]) return false;
            }
        }
        // surjectivity: every composable chain must be hit
        long long hit = 0, chains = 0;
        std::function<void(int, int, int)> walk = [&](int kk, int tail, int key) {
            if (kk == n) {
                ++chains;
                if (seen[static_cast<size_t>(key)]) ++hit;
                return;
            }
            for (int f = 0; f < na; ++f) {
                if (kk > 0 && C.src[static_cast<size_t>(f)] != tail) continue;
                walk(kk + 1, C.tgt[static_cast<size_t>(f)], key + pw[kk] * f);
            }
        };
        walk(0, -1, 0);
        if (chains != hit || chains != static_cast<long long>(elems[n].size())) return false;
    }
    return true;
}

// exact spine-filling count through the truncated Yoneda correspondence:
// a map from the n-simplex within bound D >= n is an element of X_n
bool spine_orthogonal_fast(const TruncSSet& X, int D) {
    for (int n = 2; n <= D; ++n) {
        std::vector<SimplexMap> edges;
        for (int e = 1; e <= n; ++e) edges.push_back(SimplexMap{1, n, {e - 1, e}});
        std::map<std::vector<int>, int> fillers;
        for (int x = 0; x < X.size[static_cast<size_t>(n)]; ++x) {
            std::vector<int> chain;
            for (const auto& e : edges) chain.push_back(X.act(n, x, e));
            ++fillers[chain];
        }
        // every compatible chain needs exactly one filler
        long long chains = 0;
        std::function<void(int, int)> count = [&](int kk, int tail) {
            if (kk == n) {
                ++chains;
                return;
            }
            for (int e = 0; e < X.size[1]; ++e) {
                if (kk > 0 && X.face[1][1][static_cast<size_t>(e)] != tail) continue;
                count(kk + 1, X.face[1][0][static_cast<size_t>(e)]);
            }
        };
        count(0, -1);
        if (chains != static_cast<long long>(X.size[static_cast<size_t>(n)])) return false;
        for (const auto& [chain, cnt] : fillers)
            if (cnt != 1) return false;
    }
    return true;
}

}  // namespace

int main() {
    uint64_t seed = testing::seed_from_env();
    std::printf("acceptance suite (seed %llu)\n", static_cast<unsigned long long>(seed));

    criterion(1, "loop-functor counterexample counts", [&](std::string& detail) {
        PointedSSet X = ckp_pushout();
        size_t naive = hom_pointed(representable_plus(0), ckp_omega(X).sset).size();
        size_t adjoint = hom_pointed(representable_plus(0), omega_K(X).sset).size();
        detail = "counts " + std::to_string(naive) + " and " + std::to_string(adjoint);
        return naive == 2 && adjoint == 1;
    });

    criterion(2, "unit of the suspension-loop adjunction is an iso (100 random objects)", [&](std::string& detail) {
        std::mt19937_64 rng(seed);
        for (int t = 0; t < 100; ++t) {
            PointedSSet X = testing::random_pointed_sset(rng, 8, 3);
            if (!validate(X)) {
                detail = "generator produced an invalid object";
                return false;
            }
            SigmaResult SX = sigma_K(X);
            OmegaResult OSX = omega_K(SX.sset);
            PointedMap eta = unit_eta(X, SX, OSX);
            std::string why;
            if (!validate_map(X, OSX.sset, eta, &why)) {
                detail = "unit not a map: " + why;
                return false;
            }
            if (!is_iso(X, OSX.sset, eta)) {
                detail = "unit not an iso at trial " + std::to_string(t);
                return false;
            }
        }
        return true;
    });

    criterion(3, "suspension of wedges of points is a wedge of circles", [&](std::string& detail) {
        for (int E : {1, 2, 3, 5}) {
            std::vector<PointedSSet> pts(static_cast<size_t>(E), representable_plus(0));
            PointedSSet W = sigma_K(wedge(pts)).sset;
            if (W.count_nondegenerate(1) != E || W.count_nondegenerate(0) != 0) {
                detail = "wrong cell counts at E = " + std::to_string(E);
                return false;
            }
            for (size_t c = 1; c < W.cells.size(); ++c)
                if (!is_basepoint(W.cells[c].faces[0]) || !is_basepoint(W.cells[c].faces[1])) {
                    detail = "a circle face missed the basepoint";
                    return false;
                }
        }
        return true;
    });

    criterion(4, "stable normal-form composition equals stabilize-compose-extract", [&](std::string& detail) {
        // exhaustive over |faces|+|degens| <= 5 per morphism, indices <= 6
        auto dec = monotone_lists(6, 5, true);
        auto inc = monotone_lists(6, 5, false);
        std::vector<StableMorphism> shapes;
        for (const auto& fs : dec)
            for (const auto& ss : inc)
                if (fs.size() + ss.size() <= 5) shapes.push_back(shape_at(fs, ss, 0));
        long long checked = 0;
        for (const StableMorphism& f : shapes)
            for (StableMorphism g : shapes) {
                g.src += f.tgt;
                g.tgt += f.tgt;
                if (!(st_compose(f, g) == oracle_compose(f, g))) {
                    detail = "mismatch at " + to_string(f) + " ; " + to_string(g);
                    return false;
                }
                ++checked;
            }
        // randomized sweep over the wider space: each list up to length 5
        std::mt19937_64 rng(seed + 4);
        std::uniform_int_distribution<size_t> df(0, dec.size() - 1), ds(0, inc.size() - 1);
        for (int t = 0; t < 200000; ++t) {
            StableMorphism f = shape_at(dec[df(rng)], inc[ds(rng)], 0);
            StableMorphism g = shape_at(dec[df(rng)], inc[ds(rng)], f.tgt);
            if (!(st_compose(f, g) == oracle_compose(f, g))) {
                detail = "random mismatch at " + to_string(f) + " ; " + to_string(g);
                return false;
            }
            ++checked;
        }
        detail = std::to_string(checked) + " pairs";
        return true;
    });

    criterion(5, "locally spherical membership sweep", [&](std::string&) {
        for (long long z = -2; z <= 2; ++z)
            for (int n = 0; n <= 3; ++n) {
                if (is_loc_sph(stable_cell(z, n))) return false;
                if (!is_loc_sph(sphere(z, n))) return false;
            }
        return true;
    });

    criterion(6, "round trip through the spectrum translation recovers sphere quotients", [&](std::string& detail) {
        for (long long z = -1; z <= 1; ++z)
            for (int n = 0; n <= 2; ++n) {
                StableComplex Z = sphere(z, n);
                if (!isomorphic(ksp(kps(Z)), Z)) {
                    detail = "sphere z=" + std::to_string(z) + " n=" + std::to_string(n);
                    return false;
                }
            }
        // hand-built quotients of spheres
        StableComplex Q1;  // identify the two level-1 cells of the (2,1) sphere
        {
            Q1.cells.push_back({2, {}, "top"});
            Q1.cells.push_back({1, {}, "a"});
            Q1.cells[0].faces = {StablePair{{}, 1, 1}, StablePair{{}, 1, 1}};
        }
        StableComplex Q2;  // collapse the bottom face of the (2,1) sphere
        {
            Q2.cells.push_back({2, {}, "top"});
            Q2.cells.push_back({1, {}, "b"});
            Q2.cells[0].faces = {stable_basepoint(1), StablePair{{}, 1, 1}};
        }
        for (const StableComplex* Q : {&Q1, &Q2}) {
            std::string why;
            if (!validate(*Q, &why)) {
                detail = "hand-built quotient invalid: " + why;
                return false;
            }
            if (!is_loc_sph(*Q)) {
                detail = "hand-built quotient not locally spherical";
                return false;
            }
            if (!isomorphic(ksp(kps(*Q)), *Q)) {
                detail = "round trip failed on a hand-built quotient";
                return false;
            }
        }
        return true;
    });

    criterion(7, "suspension spectra of simplices translate to the spheres", [&](std::string& detail) {
        for (int n = 0; n <= 2; ++n)
            for (int k = 0; k <= 2; ++k) {
                StableComplex Z = ksp(suspension_spectrum(representable_plus(n), k));
                if (!isomorphic(Z, sphere(n - k, n))) {
                    detail = "n=" + std::to_string(n) + " k=" + std::to_string(k);
                    return false;
                }
            }
        return true;
    });

    criterion(8, "spectrification reflects onto strict loop spectra (50 random spectra)", [&](std::string& detail) {
        std::mt19937_64 rng(seed + 8);
        for (int t = 0; t < 50; ++t) {
            SequentialSpectrum E = random_spectrum(rng, 2, 6);
            SpectrifyResult R = spectrify(E);
            if (!is_omega_spectrum(R.spectrum)) {
                detail = "output not strict at trial " + std::to_string(t);
                return false;
            }
            SpectrifyResult RR = spectrify(R.spectrum);
            if (!spectra_isomorphic(RR.spectrum, R.spectrum) || !unit_is_iso(R.spectrum, RR)) {
                detail = "not idempotent at trial " + std::to_string(t);
                return false;
            }
            if (unit_is_iso(E, R) != is_omega_spectrum(E)) {
                detail = "unit iso detection disagrees at trial " + std::to_string(t);
                return false;
            }
        }
        return true;
    });

    criterion(9, "the oplax weight computes the explicit oplax limit (>= 30 diagrams)", [&](std::string& detail) {
        std::vector<CatDiagram> corpus;
        std::vector<FiniteCategory> shapes = {terminal_category(),     arrow_category(),
                                              chain_category(2),       parallel_pair_category(),
                                              discrete_category(2),    preorder_category(3, {{0, 1}, {0, 2}})};
        std::vector<FiniteCategory> values = {terminal_category(), arrow_category(),
                                              preorder_category(3, {{0, 1}, {1, 2}}),
                                              preorder_category(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}), iso_category()};
        for (const FiniteCategory& J : shapes)
            for (const FiniteCategory& C : values) corpus.push_back(constant_diagram(J, C));
        // a few non-constant diagrams over the arrow shape
        {
            FiniteCategory J = arrow_category();
            FiniteCategory A = preorder_category(2, {{0, 1}});
            FiniteFunctor F;
            F.obj = {1, 1};
            F.arr = {A.ident[1], A.ident[1], A.ident[1]};
            CatDiagram X;
            X.J = J;
            X.value = {A, A};
            X.arrow.resize(static_cast<size_t>(J.n_arr()));
            X.arrow[static_cast<size_t>(J.ident[0])] = identity_functor(A);
            X.arrow[static_cast<size_t>(J.ident[1])] = identity_functor(A);
            X.arrow[static_cast<size_t>(J.hom(0, 1)[0])] = F;
            corpus.push_back(X);
        }
        corpus.push_back(counterexample_diagram());
        if (corpus.size() < 30) {
            detail = "corpus too small";
            return false;
        }
        for (size_t i = 0; i < corpus.size(); ++i) {
            WeightedLimitResult WL = weighted_limit(oplax_weight(corpus[i].J).W, corpus[i]);
            OplaxLimitResult O = oplax_limit_explicit(corpus[i]);
            if (!categories_isomorphic(WL.cat, O.cat)) {
                if (categories_equivalent(WL.cat, O.cat)) {
                    detail = "diagram " + std::to_string(i) + ": equivalent but not isomorphic";
                } else {
                    detail = "diagram " + std::to_string(i) + ": not even equivalent";
                }
                return false;
            }
        }
        detail = std::to_string(corpus.size()) + " diagrams";
        return true;
    });

    criterion(10, "fibrancy counterexample: empty strict limit, singleton weighted limit", [&](std::string& detail) {
        CatDiagram X = counterexample_diagram();
        StrictLimitResult S = strict_limit(X);
        WeightedLimitResult WL = weighted_limit(X, X);
        if (S.cat.n_obj != 0 || WL.cat.n_obj != 1) {
            detail = "limit sizes " + std::to_string(S.cat.n_obj) + " and " + std::to_string(WL.cat.n_obj);
            return false;
        }
        SpectrReport rep = check_spectrification_hypotheses(X, X);
        bool flagged = false;
        for (const std::string& n : rep.notes)
            if (n.find("iso-fibration") != std::string::npos) flagged = true;
        if (rep.fibrant || !flagged) {
            detail = "fibrancy not flagged";
            return false;
        }
        if (!rep.colimits_exist || !rep.preserved || !rep.weights_final) {
            detail = "other hypotheses unexpectedly failed";
            return false;
        }
        return true;
    });

    criterion(11, "wreath calculus: associativity, degree monotonicity, hyperface intersection",
              [&](std::string& detail) {
        std::mt19937_64 rng(seed + 11);
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
            if (!(wreath_compose(h, wreath_compose(g, f)) == wreath_compose(wreath_compose(h, g), f))) {
                detail = "associativity failed";
                return false;
            }
            ++done;
        }

        // strict monotonicity of the degree along the classes, degree <= 5
        auto all5 = cells_up_to_degree(5);
        for (const ThetaCell& S : all5)
            for (const ThetaCell& T : all5)
                for (const ThetaMorphism& f : theta_hom(S, T)) {
                    ClassifyResult c = classify(f);
                    if (c.iso) continue;
                    if (c.cls == ThetaClass::Plus && !(reedy_degree(S) < reedy_degree(T))) {
                        detail = "plus map does not raise the degree";
                        return false;
                    }
                    if (c.cls == ThetaClass::Minus && !(reedy_degree(S) > reedy_degree(T))) {
                        detail = "minus map does not lower the degree";
                        return false;
                    }
                }

        // the two [1];d^i faces of [1];([1]) meet in two points
        ThetaCell T = theta_node({delta_cell(1)});
        std::vector<const ThetaMorphism*> picked;
        auto hf = hyperfaces(T);
        for (const ThetaMorphism& f : hf)
            if (f.src == delta_cell(1) && f.base == simplex_identity(1)) picked.push_back(&f);
        if (picked.size() != 2) {
            detail = "expected the two [1];d^i hyperfaces";
            return false;
        }
        ThetaSubfunctor meet = intersect(image_union(T, {*picked[0]}, reedy_degree(T)),
                                         image_union(T, {*picked[1]}, reedy_degree(T)));
        if (meet.count(theta_leaf()) != 2) {
            detail = "intersection has " + std::to_string(meet.count(theta_leaf())) + " points";
            return false;
        }
        return true;
    });

    criterion(12, "nerves of all small categories are Segal and spine-orthogonal", [&](std::string& detail) {
        std::mt19937_64 rng(seed + 12);
        long long n_cats = 0, n_machinery = 0, n_generic = 0, n_mutated = 0;
        bool ok = true;
        std::vector<TruncInclusion> spines;
        for (int n = 2; n <= 4; ++n) spines.push_back(spine_inclusion(n, 4));
        std::string why;
        for (int k = 1; k <= 3 && ok; ++k)
            for (int extra = 0; extra + k <= 6 && ok; ++extra)
                enumerate_categories(k, extra, [&](const RawCat& RC) {
                    if (!ok) return;
                    ++n_cats;
                    if (!nerve_checks_tight(RC, false)) {
                        detail = "a nerve failed the Segal/spine check";
                        ok = false;
                        return;
                    }
                    // the doubled-filler mutation must fail
                    if (std::uniform_int_distribution<int>(0, 49)(rng) == 0) {
                        ++n_mutated;
                        if (nerve_checks_tight(RC, true)) {
                            detail = "a mutated presheaf passed";
                            ok = false;
                            return;
                        }
                    }
                    // exercise the full checker machinery on a sample
                    if (std::uniform_int_distribution<int>(0, 1999)(rng) == 0) {
                        ++n_machinery;
                        FiniteCategory C = RC.to_category();
                        TruncSSet N = nerve_of_category(C, 4);
                        if (!segal_check(N, 4, &why) || !spine_orthogonal_fast(N, 4)) {
                            detail = "module checker disagrees with the tight pass: " + why;
                            ok = false;
                            return;
                        }
                        TruncSSet bad = duplicate_top_cell(N, 0);
                        if (N.size[4] > 0 && (segal_check(bad, 4) || spine_orthogonal_fast(bad, 4))) {
                            detail = "module checker accepted a mutated presheaf";
                            ok = false;
                            return;
                        }
                        if (N.size[1] <= 4 && std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
                            ++n_generic;
                            OrthReport r = orthogonal_to(N, spines);
                            if (!r.orthogonal) {
                                detail = "generic lifting disagrees";
                                ok = false;
                                return;
                            }
                        }
                    }
                });
        if (ok && n_generic == 0) {
            // make sure the generic lifting machinery runs at least here
            for (const FiniteCategory& C :
                 {terminal_category(), arrow_category(), chain_category(2), iso_category()}) {
                TruncSSet N = nerve_of_category(C, 4);
                OrthReport r = orthogonal_to(N, spines);
                if (!r.orthogonal) {
                    detail = "generic lifting disagrees on a standard nerve";
                    ok = false;
                    break;
                }
                ++n_generic;
            }
        }
        if (ok) {
            TruncSSet bad = duplicate_top_cell(nerve_of_category(arrow_category(), 4), 0);
            if (segal_check(bad, 4) || spine_orthogonal_fast(bad, 4)) {
                detail = "mutated presheaf passed the module checker";
                ok = false;
            } else {
                OrthReport r = orthogonal_to(bad, {spine_inclusion(4, 4)});
                if (r.orthogonal) {
                    detail = "mutated presheaf passed the generic lifting check";
                    ok = false;
                }
                ++n_mutated;
            }
        }
        if (ok)
            detail = std::to_string(n_cats) + " categories, " + std::to_string(n_mutated) + " mutations, " +
                     std::to_string(n_machinery) + " module-checker runs, " + std::to_string(n_generic) +
                     " generic lift checks";
        return ok;
    });

    criterion(13, "comma-category limit formula against brute force (20 random instances)", [&](std::string& detail) {
        std::mt19937_64 rng(seed + 13);
        int done = 0, attempts = 0;
        while (done < 20 && attempts < 400) {
            ++attempts;
            // random small preorders with enough meets, random monotone R
            auto random_preorder = [&](int n) {
                std::vector<std::pair<int, int>> rel;
                for (int a = 0; a < n; ++a)
                    for (int b = a + 1; b < n; ++b)
                        if (std::uniform_int_distribution<int>(0, 1)(rng)) rel.push_back({a, b});
                return preorder_category(n, rel);
            };
            FiniteCategory C = random_preorder(std::uniform_int_distribution<int>(2, 3)(rng));
            FiniteCategory B = random_preorder(std::uniform_int_distribution<int>(2, 3)(rng));
            auto functors = all_functors(B, C);
            if (functors.empty()) continue;
            FiniteFunctor R = functors[std::uniform_int_distribution<size_t>(0, functors.size() - 1)(rng)];

            CommaCategory K = slice_comma(C, B, R);
            if (K.cat.n_obj == 0) continue;
            // random diagram: either a discrete pair or a single arrow
            DiagramInCat D;
            if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
                D.I = discrete_category(2);
                int o1 = std::uniform_int_distribution<int>(0, K.cat.n_obj - 1)(rng);
                int o2 = std::uniform_int_distribution<int>(0, K.cat.n_obj - 1)(rng);
                D.obj = {o1, o2};
                D.arr = {K.cat.ident[static_cast<size_t>(o1)], K.cat.ident[static_cast<size_t>(o2)]};
            } else {
                if (K.cat.n_arr() == 0) continue;
                int e = std::uniform_int_distribution<int>(0, K.cat.n_arr() - 1)(rng);
                D.I = arrow_category();
                D.obj = {K.cat.src(e), K.cat.tgt(e)};
                D.arr.resize(static_cast<size_t>(D.I.n_arr()));
                D.arr[static_cast<size_t>(D.I.ident[0])] = K.cat.ident[static_cast<size_t>(K.cat.src(e))];
                D.arr[static_cast<size_t>(D.I.ident[1])] = K.cat.ident[static_cast<size_t>(K.cat.tgt(e))];
                D.arr[static_cast<size_t>(D.I.hom(0, 1)[0])] = e;
            }
            CommaLimitReport rep = comma_limit_check(C, B, R, D);
            if (!rep.r_preserves) continue;  // reported and skipped, as specified
            if (rep.detail == "componentwise limit missing") continue;
            if (!rep.ok) {
                detail = "formula mismatch: " + rep.detail;
                return false;
            }
            ++done;
        }
        if (done < 20) {
            detail = "only " + std::to_string(done) + " preserved instances found";
            return false;
        }
        detail = std::to_string(done) + " instances";
        return true;
    });

    if (g_fail == 0) std::printf("all acceptance criteria passed\n");
    return g_fail;
}
