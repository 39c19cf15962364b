#include "kanspec/pointed_sset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace kanspec {

namespace {

// The epi [n] -> [n - |word|] with degeneracy list `word`.
SimplexMap epi_table(const std::vector<int>& word, int n) {
    SimplexNormalForm nf;
    nf.src = n;
    nf.degens = word;
    return from_normal_form(nf);
}

DegenPair merge_epi(const std::vector<int>& outer, int level, const DegenPair& p) {
    // p . (s-word `outer`), outer an epi [level] -> [level - |outer|] applied
    // after the pair's own word.
    if (outer.empty()) return p;
    if (is_basepoint(p)) return basepoint_pair(level);
    SimplexMap t = compose(epi_table(outer, level), epi_table(p.word, level - static_cast<int>(outer.size())));
    return DegenPair{normal_form(t).degens, p.cell};
}

}  // namespace

DegenPair basepoint_pair(int dim) {
    DegenPair p;
    p.cell = 0;
    p.word.resize(static_cast<size_t>(dim));
    std::iota(p.word.begin(), p.word.end(), 0);
    return p;
}

bool is_basepoint(const DegenPair& p) { return p.cell == 0; }

int PointedSSet::max_dim() const {
    int d = 0;
    for (const Cell& c : cells) d = std::max(d, c.dim);
    return d;
}

int PointedSSet::count_nondegenerate(int dim) const {
    int k = 0;
    for (size_t i = 1; i < cells.size(); ++i)
        if (cells[i].dim == dim) ++k;
    return k;
}

PointedSSet point() {
    PointedSSet X;
    X.cells.push_back({0, {}, "*"});
    return X;
}

PointedSSet representable_plus(int n) {
    if (n < 0) throw std::invalid_argument("representable_plus: n >= 0");
    PointedSSet X;
    X.cells.push_back({0, {}, "*"});
    // one cell per nonempty subset of {0..n}, ordered by size then lex
    std::vector<std::vector<int>> subsets;
    for (int size = 1; size <= n + 1; ++size) {
        std::vector<int> pick(static_cast<size_t>(size));
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            subsets.push_back(pick);
            int i = size - 1;
            while (i >= 0 && pick[static_cast<size_t>(i)] == n - (size - 1 - i)) --i;
            if (i < 0) break;
            ++pick[static_cast<size_t>(i)];
            for (int k = i + 1; k < size; ++k) pick[static_cast<size_t>(k)] = pick[static_cast<size_t>(k) - 1] + 1;
        }
    }
    std::map<std::vector<int>, int> id_of;
    for (const auto& s : subsets) {
        std::string nm;
        for (int v : s) nm += std::to_string(v);
        id_of[s] = static_cast<int>(X.cells.size());
        X.cells.push_back({static_cast<int>(s.size()) - 1, {}, "v" + nm});
    }
    for (const auto& s : subsets) {
        int d = static_cast<int>(s.size()) - 1;
        if (d == 0) continue;
        auto& cell = X.cells[static_cast<size_t>(id_of[s])];
        for (int i = 0; i <= d; ++i) {
            std::vector<int> t = s;
            t.erase(t.begin() + i);
            cell.faces.push_back(DegenPair{{}, id_of[t]});
        }
    }
    return X;
}

PointedSSet wedge(const std::vector<PointedSSet>& xs) {
    PointedSSet X = point();
    for (const PointedSSet& Y : xs) {
        std::vector<int> remap(Y.cells.size());
        remap[0] = 0;
        for (size_t i = 1; i < Y.cells.size(); ++i) {
            remap[i] = static_cast<int>(X.cells.size());
            X.cells.push_back(Y.cells[i]);
        }
        for (size_t i = 1; i < Y.cells.size(); ++i) {
            auto& cell = X.cells[static_cast<size_t>(remap[i])];
            for (DegenPair& f : cell.faces) f.cell = remap[static_cast<size_t>(f.cell)];
        }
    }
    return X;
}

DegenPair apply_face(const PointedSSet& X, const DegenPair& p, int i) {
    int n = X.dim_of(p);
    if (i < 0 || i > n) throw std::invalid_argument("apply_face: index out of range");
    if (is_basepoint(p)) return basepoint_pair(n - 1);
    SimplexMap psi = compose(simplex_face(n - 1, i), epi_table(p.word, n));
    SimplexNormalForm nf = normal_form(psi);
    if (nf.faces.empty()) return DegenPair{nf.degens, p.cell};
    // the composite of an epi with one coface has at most one face
    int fi = nf.faces.front();
    const DegenPair& stored = X.cells[static_cast<size_t>(p.cell)].faces[static_cast<size_t>(fi)];
    if (is_basepoint(stored)) return basepoint_pair(n - 1);
    return merge_epi(nf.degens, n - 1, stored);
}

DegenPair apply_op(const PointedSSet& X, const DegenPair& p, const SimplexMap& phi) {
    int n = X.dim_of(p);
    if (phi.tgt != n) throw std::invalid_argument("apply_op: dimension mismatch");
    if (is_basepoint(p)) return basepoint_pair(phi.src);
    SimplexMap psi = compose(phi, epi_table(p.word, n));
    SimplexNormalForm nf = normal_form(psi);
    DegenPair cur{{}, p.cell};
    for (int fi : nf.faces) {  // decreasing: outermost face first
        cur = apply_face(X, cur, fi);
        if (is_basepoint(cur)) return basepoint_pair(phi.src);
    }
    return merge_epi(nf.degens, phi.src, cur);
}

DegenPair top_vertex(const PointedSSet& X, const DegenPair& p) {
    int n = X.dim_of(p);
    return apply_op(X, p, simplex_vertex(n, n));
}

bool validate(const PointedSSet& X, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (X.cells.empty() || X.cells[0].dim != 0 || !X.cells[0].faces.empty())
        return fail("cell 0 must be a 0-dimensional basepoint");
    for (size_t c = 0; c < X.cells.size(); ++c) {
        const auto& cell = X.cells[c];
        if (cell.dim < 0) return fail("negative dimension");
        size_t want = cell.dim == 0 ? 0 : static_cast<size_t>(cell.dim) + 1;
        if (cell.faces.size() != want) return fail("cell " + std::to_string(c) + ": wrong face count");
        for (const DegenPair& f : cell.faces) {
            if (f.cell < 0 || f.cell >= static_cast<int>(X.cells.size()))
                return fail("cell " + std::to_string(c) + ": face target out of range");
            for (size_t t = 0; t + 1 < f.word.size(); ++t)
                if (f.word[t] >= f.word[t + 1]) return fail("face word not strictly increasing");
            if (!f.word.empty() && (f.word.front() < 0 || f.word.back() > cell.dim - 2))
                return fail("face word index out of range");
            if (X.dim_of(f) != cell.dim - 1) return fail("cell " + std::to_string(c) + ": face dimension mismatch");
            if (f.cell == 0 && f != basepoint_pair(cell.dim - 1))
                return fail("basepoint face not in canonical form");
        }
    }
    for (size_t c = 1; c < X.cells.size(); ++c) {
        int n = X.cells[c].dim;
        if (n < 2) continue;
        DegenPair top{{}, static_cast<int>(c)};
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i) {
                DegenPair lhs = apply_face(X, apply_face(X, top, j), i);
                DegenPair rhs = apply_face(X, apply_face(X, top, i), j - 1);
                if (!(lhs == rhs))
                    return fail("cell " + std::to_string(c) + ": face identity d" + std::to_string(i) + " d" +
                                std::to_string(j) + " fails");
            }
    }
    return true;
}

void check_validated(const PointedSSet& X, const char* where) {
    std::string why;
    if (!validate(X, &why)) throw std::invalid_argument(std::string(where) + ": " + why);
}

std::vector<DegenPair> level_pairs(const PointedSSet& X, int n) {
    std::vector<DegenPair> out;
    out.push_back(basepoint_pair(n));
    for (size_t c = 1; c < X.cells.size(); ++c) {
        int e = X.cells[c].dim;
        if (e > n) continue;
        int k = n - e;
        // strictly increasing k-subsets of {0..n-1}
        std::vector<int> pick(static_cast<size_t>(k));
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            out.push_back(DegenPair{pick, static_cast<int>(c)});
            if (k == 0) break;
            int i = k - 1;
            while (i >= 0 && pick[static_cast<size_t>(i)] == n - 1 - (k - 1 - i)) --i;
            if (i < 0) break;
            ++pick[static_cast<size_t>(i)];
            for (int t = i + 1; t < k; ++t) pick[static_cast<size_t>(t)] = pick[static_cast<size_t>(t) - 1] + 1;
        }
    }
    return out;
}

PointedMap identity_map(const PointedSSet& X) {
    PointedMap m;
    m.assign.reserve(X.cells.size());
    for (size_t c = 0; c < X.cells.size(); ++c) m.assign.push_back(DegenPair{{}, static_cast<int>(c)});
    return m;
}

DegenPair map_pair(const PointedMap& m, const DegenPair& p, const PointedSSet& tgt) {
    const DegenPair& img = m.assign[static_cast<size_t>(p.cell)];
    int level = static_cast<int>(p.word.size()) + tgt.dim_of(img);
    if (is_basepoint(img)) return basepoint_pair(level);
    return merge_epi(p.word, level, img);
}

bool validate_map(const PointedSSet& A, const PointedSSet& X, const PointedMap& m, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (m.assign.size() != A.cells.size()) return fail("assignment size mismatch");
    if (!is_basepoint(m.assign[0])) return fail("basepoint not preserved");
    for (size_t c = 0; c < A.cells.size(); ++c) {
        const DegenPair& img = m.assign[c];
        if (img.cell < 0 || img.cell >= static_cast<int>(X.cells.size())) return fail("image cell out of range");
        if (X.dim_of(img) != A.cells[c].dim) return fail("cell " + std::to_string(c) + ": image dimension mismatch");
        int n = A.cells[c].dim;
        for (int i = 0; i <= n && n > 0; ++i) {
            DegenPair lhs = map_pair(m, A.cells[c].faces[static_cast<size_t>(i)], X);
            DegenPair rhs = apply_face(X, img, i);
            if (!(lhs == rhs)) return fail("cell " + std::to_string(c) + ": face " + std::to_string(i) + " not preserved");
        }
    }
    return true;
}

PointedMap compose_maps(const PointedSSet& A, const PointedMap& f, const PointedSSet& B, const PointedMap& g,
                        const PointedSSet& C) {
    (void)B;
    PointedMap h;
    h.assign.reserve(A.cells.size());
    for (size_t c = 0; c < A.cells.size(); ++c) h.assign.push_back(map_pair(g, f.assign[c], C));
    return h;
}

std::vector<PointedMap> hom_pointed(const PointedSSet& A, const PointedSSet& X) {
    // assign non-basepoint cells in order of increasing dimension
    std::vector<int> order;
    for (size_t c = 1; c < A.cells.size(); ++c) order.push_back(static_cast<int>(c));
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return A.cells[static_cast<size_t>(a)].dim < A.cells[static_cast<size_t>(b)].dim; });

    int maxd = A.max_dim();
    std::vector<std::vector<DegenPair>> candidates(static_cast<size_t>(maxd) + 1);
    for (int d = 0; d <= maxd; ++d) candidates[static_cast<size_t>(d)] = level_pairs(X, d);

    std::vector<PointedMap> out;
    PointedMap cur;
    cur.assign.assign(A.cells.size(), basepoint_pair(0));

    auto compatible = [&](int c) {
        const auto& cell = A.cells[static_cast<size_t>(c)];
        for (int i = 0; i <= cell.dim && cell.dim > 0; ++i) {
            DegenPair lhs = map_pair(cur, cell.faces[static_cast<size_t>(i)], X);
            DegenPair rhs = apply_face(X, cur.assign[static_cast<size_t>(c)], i);
            if (!(lhs == rhs)) return false;
        }
        return true;
    };

    std::vector<size_t> choice(order.size(), 0);
    size_t pos = 0;
    while (true) {
        if (pos == order.size()) {
            out.push_back(cur);
            if (pos == 0) break;
            --pos;
            ++choice[pos];
            continue;
        }
        int c = order[pos];
        const auto& cands = candidates[static_cast<size_t>(A.cells[static_cast<size_t>(c)].dim)];
        if (choice[pos] >= cands.size()) {
            choice[pos] = 0;
            if (pos == 0) break;
            --pos;
            ++choice[pos];
            continue;
        }
        cur.assign[static_cast<size_t>(c)] = cands[choice[pos]];
        if (compatible(c)) {
            ++pos;
        } else {
            ++choice[pos];
        }
    }
    return out;
}

bool is_iso(const PointedSSet& A, const PointedSSet& X, const PointedMap& m) {
    if (A.cells.size() != X.cells.size()) return false;
    std::vector<bool> hit(X.cells.size(), false);
    hit[0] = true;
    for (size_t c = 1; c < A.cells.size(); ++c) {
        const DegenPair& img = m.assign[c];
        if (!img.word.empty() || is_basepoint(img)) return false;
        if (X.cells[static_cast<size_t>(img.cell)].dim != A.cells[c].dim) return false;
        if (hit[static_cast<size_t>(img.cell)]) return false;
        hit[static_cast<size_t>(img.cell)] = true;
    }
    return true;
}

bool isomorphic(const PointedSSet& A, const PointedSSet& B) {
    if (A.cells.size() != B.cells.size()) return false;
    int maxd = std::max(A.max_dim(), B.max_dim());
    for (int d = 0; d <= maxd; ++d)
        if (A.count_nondegenerate(d) != B.count_nondegenerate(d)) return false;

    std::vector<int> order;
    for (size_t c = 1; c < A.cells.size(); ++c) order.push_back(static_cast<int>(c));
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return A.cells[static_cast<size_t>(a)].dim < A.cells[static_cast<size_t>(b)].dim; });

    std::vector<int> assign(A.cells.size(), -1);
    assign[0] = 0;
    std::vector<bool> used(B.cells.size(), false);
    used[0] = true;

    auto faces_ok = [&](int a, int b) {
        const auto& ca = A.cells[static_cast<size_t>(a)];
        const auto& cb = B.cells[static_cast<size_t>(b)];
        if (ca.dim != cb.dim) return false;
        for (size_t i = 0; i < ca.faces.size(); ++i) {
            const DegenPair& fa = ca.faces[i];
            const DegenPair& fb = cb.faces[i];
            if (fa.word != fb.word) return false;
            if (assign[static_cast<size_t>(fa.cell)] != fb.cell) return false;
        }
        return true;
    };

    std::function<bool(size_t)> rec = [&](size_t pos) -> bool {
        if (pos == order.size()) return true;
        int a = order[pos];
        for (size_t b = 1; b < B.cells.size(); ++b) {
            if (used[b]) continue;
            assign[static_cast<size_t>(a)] = static_cast<int>(b);
            if (faces_ok(a, static_cast<int>(b))) {
                used[b] = true;
                if (rec(pos + 1)) return true;
                used[b] = false;
            }
            assign[static_cast<size_t>(a)] = -1;
        }
        return false;
    };
    return rec(0);
}

// --- levelwise tabulation, quotients and EZ re-extraction -------------------

namespace {

struct LevelwiseSSet {
    int max_dim = 0;
    std::vector<std::vector<DegenPair>> pairs;          // tags (for debugging/orig lookup)
    std::vector<int> base;                              // basepoint index per level
    std::vector<std::vector<std::vector<int>>> face;    // face[n][i] : level n -> n-1  (n >= 1)
    std::vector<std::vector<std::vector<int>>> degen;   // degen[n][j] : level n -> n+1 (n < max_dim)
};

LevelwiseSSet tabulate(const PointedSSet& X, int max_dim) {
    LevelwiseSSet L;
    L.max_dim = max_dim;
    L.pairs.resize(static_cast<size_t>(max_dim) + 1);
    L.base.resize(static_cast<size_t>(max_dim) + 1);
    std::vector<std::map<DegenPair, int>> index(static_cast<size_t>(max_dim) + 1);
    for (int n = 0; n <= max_dim; ++n) {
        L.pairs[static_cast<size_t>(n)] = level_pairs(X, n);
        for (size_t i = 0; i < L.pairs[static_cast<size_t>(n)].size(); ++i)
            index[static_cast<size_t>(n)][L.pairs[static_cast<size_t>(n)][i]] = static_cast<int>(i);
        L.base[static_cast<size_t>(n)] = index[static_cast<size_t>(n)][basepoint_pair(n)];
    }
    L.face.resize(static_cast<size_t>(max_dim) + 1);
    L.degen.resize(static_cast<size_t>(max_dim) + 1);
    for (int n = 1; n <= max_dim; ++n) {
        auto& fn = L.face[static_cast<size_t>(n)];
        fn.resize(static_cast<size_t>(n) + 1);
        for (int i = 0; i <= n; ++i) {
            fn[static_cast<size_t>(i)].reserve(L.pairs[static_cast<size_t>(n)].size());
            for (const DegenPair& p : L.pairs[static_cast<size_t>(n)])
                fn[static_cast<size_t>(i)].push_back(index[static_cast<size_t>(n) - 1].at(apply_face(X, p, i)));
        }
    }
    for (int n = 0; n < max_dim; ++n) {
        auto& dn = L.degen[static_cast<size_t>(n)];
        dn.resize(static_cast<size_t>(n) + 1);
        for (int j = 0; j <= n; ++j) {
            dn[static_cast<size_t>(j)].reserve(L.pairs[static_cast<size_t>(n)].size());
            for (const DegenPair& p : L.pairs[static_cast<size_t>(n)])
                dn[static_cast<size_t>(j)].push_back(
                    index[static_cast<size_t>(n) + 1].at(apply_op(X, p, simplex_degeneracy(n, j))));
        }
    }
    return L;
}

struct UnionFind {
    std::vector<int> up;
    explicit UnionFind(size_t n) : up(n) { std::iota(up.begin(), up.end(), 0); }
    int find(int x) {
        while (up[static_cast<size_t>(x)] != x) {
            up[static_cast<size_t>(x)] = up[static_cast<size_t>(up[static_cast<size_t>(x)])];
            x = up[static_cast<size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        up[static_cast<size_t>(b)] = a;  // keep smallest representative
        return true;
    }
};

LevelwiseSSet quotient(const LevelwiseSSet& L, std::vector<std::vector<std::pair<int, int>>> seeds) {
    std::vector<UnionFind> uf;
    uf.reserve(L.pairs.size());
    for (const auto& lvl : L.pairs) uf.emplace_back(lvl.size());
    for (size_t n = 0; n < seeds.size() && n < L.pairs.size(); ++n)
        for (auto [a, b] : seeds[n]) uf[n].unite(a, b);

    // saturate the congruence: identified pairs have identified images
    bool changed = true;
    while (changed) {
        changed = false;
        for (int n = 0; n <= L.max_dim; ++n) {
            size_t sz = L.pairs[static_cast<size_t>(n)].size();
            std::map<int, int> rep;  // class representative -> witness element
            for (size_t x = 0; x < sz; ++x) {
                int r = uf[static_cast<size_t>(n)].find(static_cast<int>(x));
                auto it = rep.find(r);
                if (it == rep.end()) {
                    rep[r] = static_cast<int>(x);
                    continue;
                }
                int y = it->second;
                if (n >= 1)
                    for (int i = 0; i <= n; ++i)
                        changed |= uf[static_cast<size_t>(n) - 1].unite(
                            L.face[static_cast<size_t>(n)][static_cast<size_t>(i)][x],
                            L.face[static_cast<size_t>(n)][static_cast<size_t>(i)][static_cast<size_t>(y)]);
                if (n < L.max_dim)
                    for (int j = 0; j <= n; ++j)
                        changed |= uf[static_cast<size_t>(n) + 1].unite(
                            L.degen[static_cast<size_t>(n)][static_cast<size_t>(j)][x],
                            L.degen[static_cast<size_t>(n)][static_cast<size_t>(j)][static_cast<size_t>(y)]);
            }
        }
    }

    LevelwiseSSet Q;
    Q.max_dim = L.max_dim;
    Q.pairs.resize(L.pairs.size());
    Q.base.resize(L.base.size());
    std::vector<std::vector<int>> cls(L.pairs.size());  // old index -> class index
    for (int n = 0; n <= L.max_dim; ++n) {
        std::map<int, int> renum;
        auto& cn = cls[static_cast<size_t>(n)];
        cn.resize(L.pairs[static_cast<size_t>(n)].size());
        for (size_t x = 0; x < cn.size(); ++x) {
            int r = uf[static_cast<size_t>(n)].find(static_cast<int>(x));
            auto it = renum.find(r);
            if (it == renum.end()) {
                int id = static_cast<int>(Q.pairs[static_cast<size_t>(n)].size());
                renum[r] = id;
                Q.pairs[static_cast<size_t>(n)].push_back(L.pairs[static_cast<size_t>(n)][static_cast<size_t>(r)]);
                cn[x] = id;
            } else {
                cn[x] = it->second;
            }
        }
        Q.base[static_cast<size_t>(n)] = cn[static_cast<size_t>(L.base[static_cast<size_t>(n)])];
    }
    Q.face.resize(L.face.size());
    Q.degen.resize(L.degen.size());
    for (int n = 1; n <= L.max_dim; ++n) {
        auto& fn = Q.face[static_cast<size_t>(n)];
        fn.resize(static_cast<size_t>(n) + 1);
        for (int i = 0; i <= n; ++i) {
            fn[static_cast<size_t>(i)].assign(Q.pairs[static_cast<size_t>(n)].size(), -1);
            for (size_t x = 0; x < L.pairs[static_cast<size_t>(n)].size(); ++x) {
                int qx = cls[static_cast<size_t>(n)][x];
                int img = cls[static_cast<size_t>(n) - 1]
                             [static_cast<size_t>(L.face[static_cast<size_t>(n)][static_cast<size_t>(i)][x])];
                int& slot = fn[static_cast<size_t>(i)][static_cast<size_t>(qx)];
                if (slot == -1) slot = img;
                // saturation guarantees consistency
            }
        }
    }
    for (int n = 0; n < L.max_dim; ++n) {
        auto& dn = Q.degen[static_cast<size_t>(n)];
        dn.resize(static_cast<size_t>(n) + 1);
        for (int j = 0; j <= n; ++j) {
            dn[static_cast<size_t>(j)].assign(Q.pairs[static_cast<size_t>(n)].size(), -1);
            for (size_t x = 0; x < L.pairs[static_cast<size_t>(n)].size(); ++x) {
                int qx = cls[static_cast<size_t>(n)][x];
                int img = cls[static_cast<size_t>(n) + 1]
                             [static_cast<size_t>(L.degen[static_cast<size_t>(n)][static_cast<size_t>(j)][x])];
                dn[static_cast<size_t>(j)][static_cast<size_t>(qx)] = img;
            }
        }
    }
    return Q;
}

struct EZOut {
    PointedSSet sset;
    // per level: class index -> pair in the extracted sset
    std::vector<std::vector<DegenPair>> class_pair;
};

EZOut ez_extract(const LevelwiseSSet& L) {
    EZOut out;
    out.sset.cells.push_back({0, {}, "*"});
    out.class_pair.resize(L.pairs.size());

    // nondegenerate = not in the image of any degeneracy operator
    std::vector<std::vector<bool>> degenerate(L.pairs.size());
    for (int n = 0; n <= L.max_dim; ++n)
        degenerate[static_cast<size_t>(n)].assign(L.pairs[static_cast<size_t>(n)].size(), false);
    for (int n = 0; n < L.max_dim; ++n)
        for (int j = 0; j <= n; ++j)
            for (size_t y = 0; y < L.pairs[static_cast<size_t>(n)].size(); ++y)
                degenerate[static_cast<size_t>(n) + 1]
                          [static_cast<size_t>(L.degen[static_cast<size_t>(n)][static_cast<size_t>(j)][y])] = true;

    std::vector<std::vector<int>> cell_of(L.pairs.size());
    for (int n = 0; n <= L.max_dim; ++n)
        cell_of[static_cast<size_t>(n)].assign(L.pairs[static_cast<size_t>(n)].size(), -1);
    cell_of[0][static_cast<size_t>(L.base[0])] = 0;
    for (int n = 0; n <= L.max_dim; ++n)
        for (size_t x = 0; x < L.pairs[static_cast<size_t>(n)].size(); ++x) {
            if (degenerate[static_cast<size_t>(n)][x]) continue;
            if (n == 0 && static_cast<int>(x) == L.base[0]) continue;
            cell_of[static_cast<size_t>(n)][x] = static_cast<int>(out.sset.cells.size());
            out.sset.cells.push_back({n, {}, "c" + std::to_string(n) + "_" + std::to_string(x)});
        }

    // EZ decomposition of an arbitrary class
    std::function<DegenPair(int, int)> decompose = [&](int n, int x) -> DegenPair {
        if (!degenerate[static_cast<size_t>(n)][static_cast<size_t>(x)])
            return DegenPair{{}, cell_of[static_cast<size_t>(n)][static_cast<size_t>(x)]};
        for (int j = 0; j <= n - 1; ++j)
            for (size_t y = 0; y < L.pairs[static_cast<size_t>(n) - 1].size(); ++y)
                if (L.degen[static_cast<size_t>(n) - 1][static_cast<size_t>(j)][y] == x) {
                    DegenPair inner = decompose(n - 1, static_cast<int>(y));
                    SimplexMap t = compose(simplex_degeneracy(n - 1, j),
                                           epi_table(inner.word, n - 1));
                    DegenPair res{normal_form(t).degens, inner.cell};
                    if (inner.cell == 0) return basepoint_pair(n);
                    return res;
                }
        throw std::logic_error("ez_extract: degenerate class without preimage");
    };

    for (int n = 0; n <= L.max_dim; ++n) {
        auto& cp = out.class_pair[static_cast<size_t>(n)];
        cp.resize(L.pairs[static_cast<size_t>(n)].size());
        for (size_t x = 0; x < cp.size(); ++x) cp[x] = decompose(n, static_cast<int>(x));
    }

    for (int n = 1; n <= L.max_dim; ++n)
        for (size_t x = 0; x < L.pairs[static_cast<size_t>(n)].size(); ++x) {
            int c = cell_of[static_cast<size_t>(n)][x];
            if (c <= 0) continue;
            auto& cell = out.sset.cells[static_cast<size_t>(c)];
            for (int i = 0; i <= n; ++i)
                cell.faces.push_back(
                    out.class_pair[static_cast<size_t>(n) - 1]
                                  [static_cast<size_t>(L.face[static_cast<size_t>(n)][static_cast<size_t>(i)][x])]);
        }
    return out;
}

}  // namespace

PointedSSet pushout(const PointedSSet& C, const PointedSSet& A, const PointedSSet& B, const PointedMap& f,
                    const PointedMap& g) {
    std::string why;
    if (!validate_map(C, A, f, &why)) throw std::invalid_argument("pushout: left leg invalid: " + why);
    if (!validate_map(C, B, g, &why)) throw std::invalid_argument("pushout: right leg invalid: " + why);

    PointedSSet W = wedge({A, B});
    // cell ids in the wedge: A's cell c >= 1 -> c ; B's cell c >= 1 -> |A|-1 + c
    auto in_a = [&](const DegenPair& p) { return p; };
    auto in_b = [&](const DegenPair& p) {
        if (is_basepoint(p)) return p;
        DegenPair q = p;
        q.cell += static_cast<int>(A.cells.size()) - 1;
        return q;
    };

    int N = std::max(W.max_dim(), C.max_dim());
    LevelwiseSSet L = tabulate(W, N);
    std::vector<std::map<DegenPair, int>> index(static_cast<size_t>(N) + 1);
    for (int n = 0; n <= N; ++n)
        for (size_t i = 0; i < L.pairs[static_cast<size_t>(n)].size(); ++i)
            index[static_cast<size_t>(n)][L.pairs[static_cast<size_t>(n)][i]] = static_cast<int>(i);

    std::vector<std::vector<std::pair<int, int>>> seeds(static_cast<size_t>(N) + 1);
    PointedMap fw, gw;
    fw.assign.reserve(C.cells.size());
    gw.assign.reserve(C.cells.size());
    for (size_t c = 0; c < C.cells.size(); ++c) {
        fw.assign.push_back(in_a(f.assign[c]));
        gw.assign.push_back(in_b(g.assign[c]));
    }
    for (int n = 0; n <= C.max_dim(); ++n)
        for (const DegenPair& p : level_pairs(C, n)) {
            DegenPair pa = map_pair(fw, p, W);
            DegenPair pb = map_pair(gw, p, W);
            seeds[static_cast<size_t>(n)].push_back(
                {index[static_cast<size_t>(n)].at(pa), index[static_cast<size_t>(n)].at(pb)});
        }

    LevelwiseSSet Q = quotient(L, std::move(seeds));
    return ez_extract(Q).sset;
}

PointedSSet collapse(const PointedSSet& C, const PointedSSet& A, const PointedMap& f) {
    PointedSSet pt = point();
    PointedMap g;
    for (size_t c = 0; c < C.cells.size(); ++c) g.assign.push_back(basepoint_pair(C.cells[c].dim));
    return pushout(C, A, pt, f, g);
}

SigmaResult sigma_K(const PointedSSet& X) {
    SigmaResult R;
    R.sset.cells.push_back({0, {}, "*"});
    R.cell_of.assign(X.cells.size(), 0);
    for (size_t c = 1; c < X.cells.size(); ++c) {
        R.cell_of[c] = static_cast<int>(R.sset.cells.size());
        R.sset.cells.push_back({X.cells[c].dim + 1, {}, "S" + X.cells[c].name});
    }
    for (size_t c = 1; c < X.cells.size(); ++c) {
        int n = X.cells[c].dim;
        auto& cell = R.sset.cells[static_cast<size_t>(R.cell_of[c])];
        if (n == 0) {
            cell.faces = {basepoint_pair(0), basepoint_pair(0)};
            continue;
        }
        for (int i = 0; i <= n; ++i) {
            const DegenPair& face = X.cells[c].faces[static_cast<size_t>(i)];
            if (is_basepoint(face))
                cell.faces.push_back(basepoint_pair(n));
            else
                cell.faces.push_back(DegenPair{face.word, R.cell_of[static_cast<size_t>(face.cell)]});
        }
        cell.faces.push_back(basepoint_pair(n));  // the collapsed top face
    }
    return R;
}

namespace {

OmegaResult omega_impl(const PointedSSet& X, bool vertex_condition, int upto) {
    int N = X.max_dim();
    int M = std::max({0, N - 1, upto});  // output max dim

    LevelwiseSSet L;
    L.max_dim = M;
    L.pairs.resize(static_cast<size_t>(M) + 1);
    L.base.resize(static_cast<size_t>(M) + 1);
    std::vector<std::map<DegenPair, int>> index(static_cast<size_t>(M) + 1);
    for (int n = 0; n <= M; ++n) {
        for (const DegenPair& p : level_pairs(X, n + 1)) {
            if (!is_basepoint(apply_face(X, p, n + 1))) continue;
            if (vertex_condition && !is_basepoint(top_vertex(X, p))) continue;
            L.pairs[static_cast<size_t>(n)].push_back(p);
        }
        for (size_t i = 0; i < L.pairs[static_cast<size_t>(n)].size(); ++i)
            index[static_cast<size_t>(n)][L.pairs[static_cast<size_t>(n)][i]] = static_cast<int>(i);
        L.base[static_cast<size_t>(n)] = index[static_cast<size_t>(n)].at(basepoint_pair(n + 1));
    }
    L.face.resize(static_cast<size_t>(M) + 1);
    L.degen.resize(static_cast<size_t>(M) + 1);
    for (int n = 1; n <= M; ++n) {
        auto& fn = L.face[static_cast<size_t>(n)];
        fn.resize(static_cast<size_t>(n) + 1);
        for (int i = 0; i <= n; ++i)
            for (const DegenPair& p : L.pairs[static_cast<size_t>(n)])
                fn[static_cast<size_t>(i)].push_back(index[static_cast<size_t>(n) - 1].at(apply_face(X, p, i)));
    }
    for (int n = 0; n < M; ++n) {
        auto& dn = L.degen[static_cast<size_t>(n)];
        dn.resize(static_cast<size_t>(n) + 1);
        for (int j = 0; j <= n; ++j)
            for (const DegenPair& p : L.pairs[static_cast<size_t>(n)])
                dn[static_cast<size_t>(j)].push_back(
                    index[static_cast<size_t>(n) + 1].at(apply_op(X, p, simplex_degeneracy(n + 1, j))));
    }

    EZOut ez = ez_extract(L);
    OmegaResult R;
    R.sset = std::move(ez.sset);
    R.embed.assign(R.sset.cells.size(), basepoint_pair(1));
    R.from_ambient.resize(static_cast<size_t>(M) + 1);
    for (int n = 0; n <= M; ++n)
        for (size_t x = 0; x < L.pairs[static_cast<size_t>(n)].size(); ++x) {
            const DegenPair& outp = ez.class_pair[static_cast<size_t>(n)][x];
            R.from_ambient[static_cast<size_t>(n)][L.pairs[static_cast<size_t>(n)][x]] = outp;
            if (outp.word.empty() && !is_basepoint(outp))
                R.embed[static_cast<size_t>(outp.cell)] = L.pairs[static_cast<size_t>(n)][x];
        }
    R.embed[0] = basepoint_pair(1);
    return R;
}

}  // namespace

OmegaResult omega_K(const PointedSSet& X, int upto) { return omega_impl(X, true, upto); }

OmegaResult ckp_omega(const PointedSSet& X, int upto) { return omega_impl(X, false, upto); }

PointedMap omega_map(const PointedSSet& X, const PointedSSet& Y, const PointedMap& f, const OmegaResult& OX,
                     const OmegaResult& OY) {
    (void)X;
    PointedMap m;
    m.assign.reserve(OX.sset.cells.size());
    for (size_t c = 0; c < OX.sset.cells.size(); ++c) {
        if (c == 0) {
            m.assign.push_back(basepoint_pair(0));
            continue;
        }
        int n = OX.sset.cells[c].dim;
        DegenPair img = map_pair(f, OX.embed[c], Y);  // ambient pair of Y at dim n+1
        m.assign.push_back(OY.from_ambient[static_cast<size_t>(n)].at(img));
    }
    return m;
}

PointedMap unit_eta(const PointedSSet& X, const SigmaResult& SX, const OmegaResult& OSX) {
    PointedMap m;
    m.assign.reserve(X.cells.size());
    for (size_t c = 0; c < X.cells.size(); ++c) {
        int n = X.cells[c].dim;
        if (c == 0) {
            m.assign.push_back(basepoint_pair(0));
            continue;
        }
        DegenPair ambient{{}, SX.cell_of[c]};
        m.assign.push_back(OSX.from_ambient[static_cast<size_t>(n)].at(ambient));
    }
    return m;
}

std::string to_string(const PointedSSet& X) {
    std::string s;
    for (size_t c = 0; c < X.cells.size(); ++c) {
        const auto& cell = X.cells[c];
        s += std::to_string(c) + " (" + cell.name + ") dim " + std::to_string(cell.dim) + ":";
        for (const DegenPair& f : cell.faces) {
            s += " (";
            for (size_t i = 0; i < f.word.size(); ++i) s += (i ? "," : "") + std::to_string(f.word[i]);
            s += "|" + std::to_string(f.cell) + ")";
        }
        s += "\n";
    }
    return s;
}

}  // namespace kanspec
