#include "kanspec/stable.hpp"

#include <algorithm>
#include <stdexcept>

namespace kanspec {

bool is_valid(const StableMorphism& f) {
    if (f.tgt != f.src - static_cast<long long>(f.degens.size()) + static_cast<long long>(f.faces.size()))
        return false;
    for (size_t i = 0; i + 1 < f.faces.size(); ++i)
        if (f.faces[i] <= f.faces[i + 1]) return false;
    for (size_t i = 0; i + 1 < f.degens.size(); ++i)
        if (f.degens[i] >= f.degens[i + 1]) return false;
    for (int i : f.faces)
        if (i < 0) return false;
    for (int j : f.degens)
        if (j < 0) return false;
    return true;
}

void check_valid(const StableMorphism& f, const char* where) {
    if (!is_valid(f)) throw std::invalid_argument(std::string(where) + ": invalid stable morphism");
}

StableMorphism st_identity(long long z) { return StableMorphism{z, z, {}, {}}; }

StableMorphism st_face(long long z, int i) {
    if (i < 0) throw std::invalid_argument("st_face: negative index");
    return StableMorphism{z - 1, z, {i}, {}};
}

StableMorphism st_degeneracy(long long z, int j) {
    if (j < 0) throw std::invalid_argument("st_degeneracy: negative index");
    return StableMorphism{z + 1, z, {}, {j}};
}

// d^i d^{i_1}..d^{i_p}: bubble i through the decreasing face list using
// d^a d^b = d^{b+1} d^a (a <= b).  Entries >= i gain 1 and stay on the left.
StableMorphism st_post_face(StableMorphism f, int i) {
    std::vector<int> out;
    out.reserve(f.faces.size() + 1);
    size_t k = 0;
    for (; k < f.faces.size() && f.faces[k] >= i; ++k) out.push_back(f.faces[k] + 1);
    out.push_back(i);
    for (; k < f.faces.size(); ++k) out.push_back(f.faces[k]);
    f.faces = std::move(out);
    f.tgt += 1;
    return f;
}

// s^j d^{i_1}..d^{i_p} s^{..}: move s^j right through the face list with
//   s^t d^a = d^{a-1} s^t   (a > t+1)
//   s^t d^a = id            (a = t or t+1)
//   s^t d^a = d^a s^{t-1}   (a < t)
// then, if it survives, merge into the degeneracy list with
//   s^t s^k = s^k s^{t+1}   (t >= k).
StableMorphism st_post_degeneracy(StableMorphism f, int j) {
    std::vector<int> out;
    out.reserve(f.faces.size());
    int t = j;
    bool cancelled = false;
    for (size_t k = 0; k < f.faces.size(); ++k) {
        int a = f.faces[k];
        if (a > t + 1) {
            out.push_back(a - 1);
        } else if (a == t + 1 || a == t) {
            for (size_t r = k + 1; r < f.faces.size(); ++r) out.push_back(f.faces[r]);
            cancelled = true;
            break;
        } else {
            out.push_back(a);
            --t;
        }
    }
    f.faces = std::move(out);
    if (!cancelled) {
        std::vector<int> ds;
        ds.reserve(f.degens.size() + 1);
        size_t k = 0;
        for (; k < f.degens.size() && t >= f.degens[k]; ++k) {
            ds.push_back(f.degens[k]);
            ++t;
        }
        ds.push_back(t);
        for (; k < f.degens.size(); ++k) ds.push_back(f.degens[k]);
        f.degens = std::move(ds);
    }
    f.tgt -= 1;
    return f;
}

StableMorphism st_compose(const StableMorphism& f, const StableMorphism& g) {
    if (f.tgt != g.src) throw std::invalid_argument("st_compose: object mismatch");
    StableMorphism h = f;
    // Innermost generators of g first: largest degeneracy, then smallest face.
    for (auto it = g.degens.rbegin(); it != g.degens.rend(); ++it) h = st_post_degeneracy(h, *it);
    for (auto it = g.faces.rbegin(); it != g.faces.rend(); ++it) h = st_post_face(h, *it);
    return h;
}

bool st_stabilizable(const StableMorphism& f, long long k) {
    if (f.src + k < 0 || f.tgt + k < 0) return false;
    if (!f.faces.empty() && f.faces.front() > f.tgt + k) return false;
    if (!f.degens.empty() && f.degens.back() > f.src + k - 1) return false;
    return true;
}

SimplexMap st_stabilize(const StableMorphism& f, long long k) {
    if (!st_stabilizable(f, k)) throw std::invalid_argument("st_stabilize: k too small");
    SimplexNormalForm nf;
    nf.src = static_cast<int>(f.src + k);
    nf.faces = f.faces;
    nf.degens = f.degens;
    return from_normal_form(nf);
}

long long st_min_stabilizer(const StableMorphism& f) {
    long long k = std::max(0LL, std::max(-f.src, -f.tgt));
    while (!st_stabilizable(f, k)) ++k;
    return k;
}

StableMorphism st_of_simplex(const SimplexMap& f, long long src) {
    SimplexNormalForm nf = normal_form(f);
    StableMorphism g;
    g.src = src;
    g.faces = nf.faces;
    g.degens = nf.degens;
    g.tgt = src - static_cast<long long>(g.degens.size()) + static_cast<long long>(g.faces.size());
    return g;
}

std::string to_string(const StableMorphism& f) {
    std::string s = "[" + std::to_string(f.src) + "]->[" + std::to_string(f.tgt) + "] d(";
    for (size_t i = 0; i < f.faces.size(); ++i) s += (i ? "," : "") + std::to_string(f.faces[i]);
    s += ") s(";
    for (size_t i = 0; i < f.degens.size(); ++i) s += (i ? "," : "") + std::to_string(f.degens[i]);
    return s + ")";
}

// --- collage ---------------------------------------------------------------

bool is_valid(const CollageMorphism& f) {
    if (f.src.stage > 0 || f.tgt.stage > 0) return false;
    int gap = f.stage_gap();
    if (gap < 0) return false;
    if (f.witness.src != f.src.n + gap || f.witness.tgt != f.tgt.n) return false;
    return is_valid(f.witness);
}

void check_valid(const CollageMorphism& f, const char* where) {
    if (!is_valid(f)) throw std::invalid_argument(std::string(where) + ": invalid collage morphism");
}

CollageMorphism collage_identity(const CollageObject& x) {
    return CollageMorphism{x, x, simplex_identity(x.n)};
}

CollageMorphism make_collage(const CollageObject& src, const CollageObject& tgt, const SimplexMap& witness) {
    CollageMorphism f{src, tgt, witness};
    check_valid(f, "make_collage");
    return f;
}

CollageMorphism collage_compose(const CollageMorphism& f, const CollageMorphism& g) {
    if (!(f.tgt == g.src)) throw std::invalid_argument("collage_compose: object mismatch");
    SimplexMap w = f.witness;
    for (int r = 0; r < g.stage_gap(); ++r) w = kan_K(w);
    return CollageMorphism{f.src, g.tgt, compose(w, g.witness)};
}

long long rho(const CollageObject& x) { return static_cast<long long>(x.n) + x.stage; }

StableMorphism rho(const CollageMorphism& f) {
    check_valid(f, "rho");
    return st_of_simplex(f.witness, rho(f.src));
}

}  // namespace kanspec
