#include "kanspec/stable_complex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace kanspec {

namespace {

StableMorphism epi_morphism(const std::vector<int>& word, long long src) {
    StableMorphism m;
    m.src = src;
    m.degens = word;
    m.tgt = src - static_cast<long long>(word.size());
    return m;
}

std::vector<std::vector<int>> subsets_of_range(int n) {  // subsets of {0..n}, by size then lex
    std::vector<std::vector<int>> out;
    for (int size = 0; size <= n + 1; ++size) {
        std::vector<int> pick(static_cast<size_t>(size));
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            out.push_back(pick);
            if (size == 0) break;
            int i = size - 1;
            while (i >= 0 && pick[static_cast<size_t>(i)] == n - (size - 1 - i)) --i;
            if (i < 0) break;
            ++pick[static_cast<size_t>(i)];
            for (int k = i + 1; k < size; ++k) pick[static_cast<size_t>(k)] = pick[static_cast<size_t>(k) - 1] + 1;
        }
    }
    return out;
}

// i-th element of N \ D (0-indexed), D sorted ascending
int complement_element(const std::vector<int>& d_sorted, int i) {
    int v = 0;
    int remaining = i;
    size_t di = 0;
    while (true) {
        if (di < d_sorted.size() && d_sorted[di] == v) {
            ++di;
            ++v;
            continue;
        }
        if (remaining == 0) return v;
        --remaining;
        ++v;
    }
}

std::string subset_name(const std::vector<int>& d) {
    if (d.empty()) return "top";
    std::string s = "d";
    for (size_t i = 0; i < d.size(); ++i) s += (i ? "." : "") + std::to_string(d[i]);
    return s;
}

StableComplex cell_like(long long z, int n, bool kill_long_composite, std::vector<std::vector<int>>* subsets_out) {
    StableComplex Z;
    auto subs = subsets_of_range(n);
    std::map<std::vector<int>, int> id_of;
    for (const auto& d : subs) {
        if (kill_long_composite && static_cast<int>(d.size()) == n + 1) continue;
        id_of[d] = static_cast<int>(Z.cells.size());
        Z.cells.push_back({z - static_cast<long long>(d.size()), {}, subset_name(d)});
        if (subsets_out) subsets_out->push_back(d);
    }
    for (const auto& d : subs) {
        auto self = id_of.find(d);
        if (self == id_of.end()) continue;
        auto& cell = Z.cells[static_cast<size_t>(self->second)];
        int nfaces = n - static_cast<int>(d.size());  // faces 0..nfaces stay within {0..n}
        for (int i = 0; i <= nfaces; ++i) {
            std::vector<int> t = d;
            int v = complement_element(d, i);
            t.insert(std::lower_bound(t.begin(), t.end(), v), v);
            auto it = id_of.find(t);
            if (it == id_of.end())
                cell.faces.push_back(stable_basepoint(cell.level - 1));
            else
                cell.faces.push_back(StablePair{{}, it->second, cell.level - 1});
        }
    }
    normalize_bounds(Z);
    return Z;
}

// k above which every face of the pair is certainly the basepoint
int pair_face_limit(const StableComplex& Z, const StablePair& p) {
    if (p.cell < 0) return -1;
    int lim = static_cast<int>(p.word.size()) + Z.effective_bound(p.cell);
    if (!p.word.empty()) lim = std::max(lim, p.word.back() + 1);
    return lim;
}

}  // namespace

StablePair stable_basepoint(long long level) { return StablePair{{}, -1, level}; }

int StableComplex::effective_bound(int cell) const {
    const auto& fs = cells[static_cast<size_t>(cell)].faces;
    for (int i = static_cast<int>(fs.size()) - 1; i >= 0; --i)
        if (fs[static_cast<size_t>(i)].cell >= 0) return i;
    return -1;
}

int StableComplex::count_at_level(long long z) const {
    int k = 0;
    for (const auto& c : cells)
        if (c.level == z) ++k;
    return k;
}

long long StableComplex::min_level() const {
    long long m = 0;
    bool first = true;
    for (const auto& c : cells) {
        if (first || c.level < m) m = c.level;
        first = false;
    }
    return m;
}

long long StableComplex::max_level() const {
    long long m = 0;
    bool first = true;
    for (const auto& c : cells) {
        if (first || c.level > m) m = c.level;
        first = false;
    }
    return m;
}

StablePair apply_face(const StableComplex& Z, const StablePair& p, int i) {
    long long lvl = Z.level_of(p);
    if (p.cell < 0) return stable_basepoint(lvl - 1);
    long long base = Z.cells[static_cast<size_t>(p.cell)].level;
    StableMorphism psi = st_compose(st_face(lvl, i), epi_morphism(p.word, lvl));
    if (psi.faces.empty()) return StablePair{psi.degens, p.cell, lvl - 1};
    int fi = psi.faces.front();
    if (fi > Z.bound(p.cell)) return stable_basepoint(lvl - 1);
    const StablePair& stored = Z.cells[static_cast<size_t>(p.cell)].faces[static_cast<size_t>(fi)];
    if (stored.cell < 0) return stable_basepoint(lvl - 1);
    if (psi.degens.empty()) return StablePair{stored.word, stored.cell, lvl - 1};
    StableMorphism merged = st_compose(epi_morphism(psi.degens, lvl - 1), epi_morphism(stored.word, base - 1));
    return StablePair{merged.degens, stored.cell, lvl - 1};
}

StablePair apply_op(const StableComplex& Z, const StablePair& p, const StableMorphism& m) {
    long long lvl = Z.level_of(p);
    if (m.tgt != lvl) throw std::invalid_argument("apply_op: level mismatch");
    if (p.cell < 0) return stable_basepoint(m.src);
    StableMorphism psi = st_compose(m, epi_morphism(p.word, lvl));
    StablePair cur{{}, p.cell, Z.cells[static_cast<size_t>(p.cell)].level};
    for (int fi : psi.faces) {
        cur = apply_face(Z, cur, fi);
        if (cur.cell < 0) return stable_basepoint(m.src);
    }
    if (psi.degens.empty()) return cur;
    StableMorphism merged = st_compose(epi_morphism(psi.degens, m.src), epi_morphism(cur.word, Z.level_of(cur)));
    return StablePair{merged.degens, cur.cell, m.src};
}

bool validate(const StableComplex& Z, std::string* why) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    for (size_t c = 0; c < Z.cells.size(); ++c) {
        const auto& cell = Z.cells[c];
        for (size_t i = 0; i < cell.faces.size(); ++i) {
            const StablePair& f = cell.faces[i];
            if (f.cell >= static_cast<int>(Z.cells.size())) return fail("face target out of range");
            for (size_t t = 0; t + 1 < f.word.size(); ++t)
                if (f.word[t] >= f.word[t + 1]) return fail("face word not strictly increasing");
            for (int w : f.word)
                if (w < 0) return fail("negative degeneracy index");
            if (f.cell < 0 && !f.word.empty()) return fail("basepoint face must have empty word");
            long long want = cell.level - 1;
            if (Z.level_of(f) != want) return fail("cell " + std::to_string(c) + ": face level mismatch");
        }
    }
    for (size_t c = 0; c < Z.cells.size(); ++c) {
        int B = Z.bound(static_cast<int>(c));
        StablePair top{{}, static_cast<int>(c), Z.cells[c].level};
        for (int j = 1; j <= B + 1; ++j)
            for (int i = 0; i < j; ++i) {
                StablePair lhs = apply_face(Z, apply_face(Z, top, j), i);
                StablePair rhs = apply_face(Z, apply_face(Z, top, i), j - 1);
                if (!(lhs == rhs))
                    return fail("cell " + std::to_string(c) + ": stable identity d" + std::to_string(i) + " d" +
                                std::to_string(j) + " fails");
            }
        for (int i = 0; i <= B; ++i) {
            StablePair p = apply_face(Z, top, i);
            for (int k = std::max(B, 0); k <= pair_face_limit(Z, p); ++k)
                if (apply_face(Z, p, k).cell >= 0)
                    return fail("cell " + std::to_string(c) + ": face " + std::to_string(i) +
                                " survives beyond the declared bound");
        }
    }
    return true;
}

void check_validated(const StableComplex& Z, const char* where) {
    std::string why;
    if (!validate(Z, &why)) throw std::invalid_argument(std::string(where) + ": " + why);
}

void normalize_bounds(StableComplex& Z) {
    for (auto& cell : Z.cells)
        while (!cell.faces.empty() && cell.faces.back().cell < 0) cell.faces.pop_back();
}

StableComplex stable_cell(long long z, int n) {
    if (n < 0) throw std::invalid_argument("stable_cell: n >= 0");
    return cell_like(z, n, false, nullptr);
}

StableComplex sphere(long long z, int n) {
    if (n < 0) throw std::invalid_argument("sphere: n >= 0");
    return cell_like(z, n, true, nullptr);
}

bool validate_arrow(const StableArrow& f, std::string* why) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    if (f.assign.size() != f.src.cells.size()) return fail("assignment size mismatch");
    for (size_t c = 0; c < f.src.cells.size(); ++c) {
        const StablePair& img = f.assign[c];
        if (img.cell >= static_cast<int>(f.tgt.cells.size())) return fail("image cell out of range");
        long long lvl = f.src.cells[c].level;
        if (f.tgt.level_of(img) != lvl) return fail("cell " + std::to_string(c) + ": image level mismatch");
        int hi = std::max({f.src.bound(static_cast<int>(c)), pair_face_limit(f.tgt, img), 0}) + 1;
        StablePair top{{}, static_cast<int>(c), lvl};
        for (int i = 0; i <= hi; ++i) {
            StablePair lhs = map_pair(f, apply_face(f.src, top, i));
            StablePair rhs = apply_face(f.tgt, img, i);
            if (!(lhs == rhs)) return fail("cell " + std::to_string(c) + ": face " + std::to_string(i) + " mismatch");
        }
    }
    return true;
}

StablePair map_pair(const StableArrow& f, const StablePair& p) {
    long long lvl = f.src.level_of(p);
    if (p.cell < 0) return stable_basepoint(lvl);
    const StablePair& img = f.assign[static_cast<size_t>(p.cell)];
    if (img.cell < 0) return stable_basepoint(lvl);
    if (p.word.empty()) return img;
    StableMorphism merged =
        st_compose(epi_morphism(p.word, lvl), epi_morphism(img.word, f.tgt.cells[static_cast<size_t>(img.cell)].level));
    return StablePair{merged.degens, img.cell, lvl};
}

StableArrow subcomplex_inclusion(const StableComplex& Z, const std::vector<int>& cells, const std::string& name) {
    std::vector<int> keep = cells;
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<int> remap(Z.cells.size(), -1);
    StableArrow f;
    f.name = name;
    f.tgt = Z;
    for (int c : keep) {
        remap[static_cast<size_t>(c)] = static_cast<int>(f.src.cells.size());
        f.src.cells.push_back(Z.cells[static_cast<size_t>(c)]);
    }
    for (auto& cell : f.src.cells)
        for (auto& face : cell.faces)
            if (face.cell >= 0) {
                int r = remap[static_cast<size_t>(face.cell)];
                if (r < 0) throw std::invalid_argument("subcomplex_inclusion: cell set not face-closed");
                face.cell = r;
            }
    for (int c : keep) f.assign.push_back(StablePair{{}, c, Z.cells[static_cast<size_t>(c)].level});
    return f;
}

namespace {

// in stable_cell(z,n) the cell of subset D lies in the image of the face
// d^k exactly when k is in D
std::vector<int> union_of_face_images(long long z, int n, const std::set<int>& ks,
                                      std::vector<std::vector<int>>& subsets) {
    (void)z;
    std::vector<int> keep;
    for (size_t c = 0; c < subsets.size(); ++c) {
        bool in_union = false;
        for (int v : subsets[c])
            if (ks.count(v)) {
                in_union = true;
                break;
            }
        if (in_union) keep.push_back(static_cast<int>(c));
    }
    (void)n;
    return keep;
}

}  // namespace

StableArrow brown_horn(long long z, int n, int i) {
    if (i < 0 || i > n) throw std::invalid_argument("brown_horn: 0 <= i <= n");
    std::vector<std::vector<int>> subsets;
    StableComplex SC = cell_like(z, n, false, &subsets);
    std::set<int> ks;
    for (int k = 0; k <= n; ++k)
        if (k != i) ks.insert(k);
    StableArrow f = subcomplex_inclusion(SC, union_of_face_images(z, n, ks, subsets), "");
    f.name = "L_Brown[" + std::to_string(z) + "," + std::to_string(n) + "," + std::to_string(i) + "]";
    return f;
}

StableArrow brown_boundary(long long z, int n) {
    std::vector<std::vector<int>> subsets;
    StableComplex SC = cell_like(z, n, false, &subsets);
    std::set<int> ks;
    for (int k = 0; k <= n; ++k) ks.insert(k);
    StableArrow f = subcomplex_inclusion(SC, union_of_face_images(z, n, ks, subsets), "");
    f.name = "dBrown[" + std::to_string(z) + "," + std::to_string(n) + "]";
    return f;
}

StableArrow sphere_quotient(long long z, int n) {
    StableComplex SC = stable_cell(z, n);
    StableComplex S = sphere(z, n);
    std::map<std::string, int> by_name;
    for (size_t c = 0; c < S.cells.size(); ++c) by_name[S.cells[c].name] = static_cast<int>(c);
    StableArrow q;
    q.src = SC;
    q.tgt = S;
    q.name = "q[" + std::to_string(z) + "," + std::to_string(n) + "]";
    for (size_t c = 0; c < SC.cells.size(); ++c) {
        auto it = by_name.find(SC.cells[c].name);
        if (it == by_name.end())
            q.assign.push_back(stable_basepoint(SC.cells[c].level));
        else
            q.assign.push_back(StablePair{{}, it->second, SC.cells[c].level});
    }
    return q;
}

std::pair<StableArrow, StableArrow> image_factor(const StableArrow& f) {
    std::vector<int> image;
    for (const StablePair& p : f.assign)
        if (p.cell >= 0) image.push_back(p.cell);
    StableArrow mono = subcomplex_inclusion(f.tgt, image, f.name + ".image");
    std::vector<int> reindex(f.tgt.cells.size(), -1);
    for (size_t c = 0; c < mono.assign.size(); ++c)
        reindex[static_cast<size_t>(mono.assign[c].cell)] = static_cast<int>(c);
    StableArrow epi;
    epi.src = f.src;
    epi.tgt = mono.src;
    epi.name = f.name + ".epi";
    for (const StablePair& p : f.assign) {
        if (p.cell < 0)
            epi.assign.push_back(p);
        else
            epi.assign.push_back(StablePair{p.word, reindex[static_cast<size_t>(p.cell)], p.level});
    }
    return {epi, mono};
}

StableArrow compose_arrows(const StableArrow& f, const StableArrow& g) {
    if (f.tgt.cells.size() != g.src.cells.size()) throw std::invalid_argument("compose_arrows: shape mismatch");
    StableArrow h;
    h.src = f.src;
    h.tgt = g.tgt;
    h.name = g.name + "*" + f.name;
    for (const StablePair& p : f.assign) h.assign.push_back(map_pair(g, p));
    return h;
}

StableArrow spherical_horn(long long z, int n, int i) {
    StableArrow comp = compose_arrows(brown_horn(z, n, i), sphere_quotient(z, n));
    auto [epi, mono] = image_factor(comp);
    (void)epi;
    mono.name = "L_Spherical[" + std::to_string(z) + "," + std::to_string(n) + "," + std::to_string(i) + "]";
    return mono;
}

StableArrow spherical_boundary(long long z, int n) {
    StableArrow comp = compose_arrows(brown_boundary(z, n), sphere_quotient(z, n));
    auto [epi, mono] = image_factor(comp);
    (void)epi;
    mono.name = "dSpherical[" + std::to_string(z) + "," + std::to_string(n) + "]";
    return mono;
}

bool cell_satisfies_sphere_relation(const StableComplex& Z, int cell) {
    int n = std::max(Z.effective_bound(cell), 0);
    StablePair cur{{}, cell, Z.cells[static_cast<size_t>(cell)].level};
    for (int k = n; k >= 0; --k) {
        cur = apply_face(Z, cur, k);
        if (cur.cell < 0) return true;
    }
    return cur.cell < 0;
}

bool is_loc_sph(const StableComplex& Z) {
    for (size_t c = 0; c < Z.cells.size(); ++c)
        if (!cell_satisfies_sphere_relation(Z, static_cast<int>(c))) return false;
    return true;
}

StableComplex loc_sph_coreflect(const StableComplex& Z) {
    std::vector<bool> alive(Z.cells.size(), true);
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t c = 0; c < Z.cells.size(); ++c) {
            if (!alive[c]) continue;
            bool ok = cell_satisfies_sphere_relation(Z, static_cast<int>(c));
            for (const StablePair& f : Z.cells[c].faces)
                if (f.cell >= 0 && !alive[static_cast<size_t>(f.cell)]) ok = false;
            if (!ok) {
                alive[c] = false;
                changed = true;
            }
        }
    }
    std::vector<int> keep;
    for (size_t c = 0; c < Z.cells.size(); ++c)
        if (alive[c]) keep.push_back(static_cast<int>(c));
    return subcomplex_inclusion(Z, keep, "coreflect").src;
}

namespace {

std::vector<StablePair> image_candidates(const StableComplex& X, long long l, int b) {
    std::vector<StablePair> out;
    out.push_back(stable_basepoint(l));
    auto words = subsets_of_range(b - 1);
    for (size_t x = 0; x < X.cells.size(); ++x) {
        long long xl = X.cells[x].level;
        if (xl > l) continue;
        long long need = l - xl;
        if (need + X.effective_bound(static_cast<int>(x)) > b) continue;
        if (need == 0) {
            out.push_back(StablePair{{}, static_cast<int>(x), l});
        } else if (b >= 1) {
            for (const auto& w : words)
                if (static_cast<long long>(w.size()) == need) out.push_back(StablePair{w, static_cast<int>(x), l});
        }
    }
    return out;
}

}  // namespace

std::vector<std::vector<StablePair>> hom_stable(const StableComplex& A, const StableComplex& X) {
    std::vector<int> order(A.cells.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return A.cells[static_cast<size_t>(a)].level < A.cells[static_cast<size_t>(b)].level;
    });

    std::vector<std::vector<StablePair>> result;
    StableArrow cur;
    cur.src = A;
    cur.tgt = X;
    for (size_t c = 0; c < A.cells.size(); ++c) cur.assign.push_back(stable_basepoint(A.cells[c].level));

    std::function<void(size_t)> rec = [&](size_t pos) {
        if (pos == order.size()) {
            result.push_back(cur.assign);
            return;
        }
        int c = order[pos];
        long long l = A.cells[static_cast<size_t>(c)].level;
        int b = A.effective_bound(c);
        StablePair top{{}, c, l};
        for (const StablePair& cand : image_candidates(X, l, b)) {
            cur.assign[static_cast<size_t>(c)] = cand;
            int hi = std::max({b, pair_face_limit(X, cand), 0}) + 1;
            bool ok = true;
            for (int i = 0; i <= hi && ok; ++i)
                ok = map_pair(cur, apply_face(A, top, i)) == apply_face(X, cand, i);
            if (ok) rec(pos + 1);
        }
        cur.assign[static_cast<size_t>(c)] = stable_basepoint(l);
    };
    rec(0);
    return result;
}

LiftReport lifting_report(const StableComplex& X, const StableArrow& inclusion) {
    std::vector<int> included(inclusion.tgt.cells.size(), -1);
    for (size_t c = 0; c < inclusion.assign.size(); ++c) {
        const StablePair& p = inclusion.assign[c];
        if (p.cell < 0 || !p.word.empty()) throw std::invalid_argument("lifting_report: not a cellwise mono");
        if (included[static_cast<size_t>(p.cell)] >= 0) throw std::invalid_argument("lifting_report: not injective");
        included[static_cast<size_t>(p.cell)] = static_cast<int>(c);
    }

    LiftReport rep;
    auto maps = hom_stable(inclusion.src, X);
    const StableComplex& B = inclusion.tgt;
    std::vector<int> order;
    for (size_t c = 0; c < B.cells.size(); ++c)
        if (included[c] < 0) order.push_back(static_cast<int>(c));
    std::stable_sort(order.begin(), order.end(), [&](int a, int b2) {
        return B.cells[static_cast<size_t>(a)].level < B.cells[static_cast<size_t>(b2)].level;
    });

    for (const auto& f : maps) {
        StableArrow g;
        g.src = B;
        g.tgt = X;
        g.assign.resize(B.cells.size());
        for (size_t c = 0; c < B.cells.size(); ++c)
            g.assign[c] = included[c] >= 0 ? f[static_cast<size_t>(included[c])] : stable_basepoint(B.cells[c].level);

        int fillers = 0;
        std::vector<std::vector<StablePair>> found;
        std::function<void(size_t)> rec = [&](size_t pos) {
            if (pos == order.size()) {
                // final global check against the already-included part
                std::string why;
                if (validate_arrow(g, &why)) {
                    ++fillers;
                    found.push_back(g.assign);
                }
                return;
            }
            int c = order[pos];
            long long l = B.cells[static_cast<size_t>(c)].level;
            int b = B.effective_bound(c);
            StablePair top{{}, c, l};
            for (const StablePair& cand : image_candidates(X, l, b)) {
                g.assign[static_cast<size_t>(c)] = cand;
                int hi = std::max({b, pair_face_limit(X, cand), 0}) + 1;
                bool ok = true;
                for (int i = 0; i <= hi && ok; ++i)
                    ok = map_pair(g, apply_face(B, top, i)) == apply_face(X, cand, i);
                if (ok) rec(pos + 1);
            }
            g.assign[static_cast<size_t>(c)] = stable_basepoint(l);
        };
        rec(0);
        rep.filler_counts.push_back(fillers);
        rep.fillers.push_back(std::move(found));
        if (fillers == 0) rep.has_all = false;
        if (fillers != 1) rep.unique_all = false;
    }
    return rep;
}

bool has_rlp(const StableComplex& X, const StableArrow& inclusion) { return lifting_report(X, inclusion).has_all; }

bool is_orthogonal(const StableComplex& X, const StableArrow& inclusion) {
    return lifting_report(X, inclusion).unique_all;
}

StableComplex level_shift(const StableComplex& Z, long long delta) {
    StableComplex W = Z;
    for (auto& cell : W.cells) {
        cell.level += delta;
        for (auto& f : cell.faces) f.level += delta;
    }
    return W;
}

bool isomorphic(const StableComplex& A, const StableComplex& B) {
    if (A.cells.size() != B.cells.size()) return false;
    std::map<long long, int> la, lb;
    for (const auto& c : A.cells) ++la[c.level];
    for (const auto& c : B.cells) ++lb[c.level];
    if (la != lb) return false;

    std::vector<int> order(A.cells.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return A.cells[static_cast<size_t>(a)].level < A.cells[static_cast<size_t>(b)].level;
    });
    std::vector<int> assign(A.cells.size(), -1);
    std::vector<bool> used(B.cells.size(), false);

    auto faces_ok = [&](int a, int b) {
        const auto& ca = A.cells[static_cast<size_t>(a)];
        const auto& cb = B.cells[static_cast<size_t>(b)];
        if (ca.level != cb.level || ca.faces.size() != cb.faces.size()) return false;
        for (size_t i = 0; i < ca.faces.size(); ++i) {
            const StablePair& fa = ca.faces[i];
            const StablePair& fb = cb.faces[i];
            if ((fa.cell < 0) != (fb.cell < 0)) return false;
            if (fa.word != fb.word) return false;
            if (fa.cell >= 0 && assign[static_cast<size_t>(fa.cell)] != fb.cell) return false;
        }
        return true;
    };

    std::function<bool(size_t)> rec = [&](size_t pos) -> bool {
        if (pos == order.size()) return true;
        int a = order[pos];
        for (size_t b = 0; b < B.cells.size(); ++b) {
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

std::vector<StableArrow> emit_regulus(RegulusKind kind, long long zmin, long long zmax, int nmax) {
    std::vector<StableArrow> out;
    for (long long z = zmin; z <= zmax; ++z)
        for (int n = 0; n <= nmax; ++n) {
            switch (kind) {
                case RegulusKind::BrownHorn:
                    for (int i = 0; i <= n; ++i) out.push_back(brown_horn(z, n, i));
                    break;
                case RegulusKind::BrownBoundary:
                    out.push_back(brown_boundary(z, n));
                    break;
                case RegulusKind::SphericalHorn:
                    for (int i = 0; i <= n; ++i) out.push_back(spherical_horn(z, n, i));
                    break;
                case RegulusKind::SphericalBoundary:
                    out.push_back(spherical_boundary(z, n));
                    break;
            }
        }
    return out;
}

std::string to_string(const StableComplex& Z) {
    std::string s;
    for (size_t c = 0; c < Z.cells.size(); ++c) {
        const auto& cell = Z.cells[c];
        s += std::to_string(c) + " (" + cell.name + ") level " + std::to_string(cell.level) + ":";
        for (const StablePair& f : cell.faces) {
            s += " (";
            for (size_t i = 0; i < f.word.size(); ++i) s += (i ? "," : "") + std::to_string(f.word[i]);
            s += "|" + (f.cell < 0 ? std::string("*") : std::to_string(f.cell)) + ")";
        }
        s += "\n";
    }
    return s;
}

}  // namespace kanspec
