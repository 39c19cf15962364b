#include "kanspec/simplex.hpp"

#include <algorithm>
#include <stdexcept>

namespace kanspec {

bool is_valid(const SimplexMap& f) {
    if (f.src < 0 || f.tgt < 0) return false;
    if (static_cast<int>(f.values.size()) != f.src + 1) return false;
    int prev = 0;
    for (int i = 0; i <= f.src; ++i) {
        int v = f.values[static_cast<size_t>(i)];
        if (v < 0 || v > f.tgt) return false;
        if (i > 0 && v < prev) return false;
        prev = v;
    }
    return true;
}

void check_valid(const SimplexMap& f, const char* where) {
    if (!is_valid(f)) throw std::invalid_argument(std::string(where) + ": invalid simplex map");
}

SimplexMap simplex_identity(int n) {
    SimplexMap f{n, n, {}};
    f.values.resize(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) f.values[static_cast<size_t>(i)] = i;
    return f;
}

SimplexMap simplex_face(int n, int i) {
    if (i < 0 || i > n + 1) throw std::invalid_argument("simplex_face: index out of range");
    SimplexMap f{n, n + 1, {}};
    for (int k = 0; k <= n; ++k) f.values.push_back(k < i ? k : k + 1);
    return f;
}

SimplexMap simplex_degeneracy(int n, int j) {
    if (j < 0 || j > n) throw std::invalid_argument("simplex_degeneracy: index out of range");
    SimplexMap f{n + 1, n, {}};
    for (int k = 0; k <= n + 1; ++k) f.values.push_back(k <= j ? k : k - 1);
    return f;
}

SimplexMap simplex_vertex(int n, int v) {
    if (v < 0 || v > n) throw std::invalid_argument("simplex_vertex: out of range");
    return SimplexMap{0, n, {v}};
}

SimplexMap compose(const SimplexMap& f, const SimplexMap& g) {
    if (f.tgt != g.src) throw std::invalid_argument("compose: object mismatch");
    SimplexMap h{f.src, g.tgt, {}};
    h.values.reserve(f.values.size());
    for (int v : f.values) h.values.push_back(g.values[static_cast<size_t>(v)]);
    return h;
}

SimplexNormalForm normal_form(const SimplexMap& f) {
    check_valid(f, "normal_form");
    SimplexNormalForm nf;
    nf.src = f.src;
    for (int j = 0; j < f.src; ++j)
        if (f.values[static_cast<size_t>(j)] == f.values[static_cast<size_t>(j) + 1]) nf.degens.push_back(j);
    std::vector<bool> hit(static_cast<size_t>(f.tgt) + 1, false);
    for (int v : f.values) hit[static_cast<size_t>(v)] = true;
    for (int i = f.tgt; i >= 0; --i)
        if (!hit[static_cast<size_t>(i)]) nf.faces.push_back(i);
    return nf;
}

SimplexMap from_normal_form(const SimplexNormalForm& nf) {
    SimplexMap f = simplex_identity(nf.src);
    // Innermost generator first: the degeneracy list is increasing and the
    // largest index is applied first; faces then go bottom-up.
    for (auto it = nf.degens.rbegin(); it != nf.degens.rend(); ++it)
        f = compose(f, simplex_degeneracy(f.tgt - 1, *it));
    for (auto it = nf.faces.rbegin(); it != nf.faces.rend(); ++it)
        f = compose(f, simplex_face(f.tgt, *it));
    return f;
}

int kan_K(int n) { return n + 1; }

SimplexMap kan_K(const SimplexMap& f) {
    SimplexMap g{f.src + 1, f.tgt + 1, f.values};
    g.values.push_back(f.tgt + 1);
    return g;
}

SimplexMap decalage_alpha(int n) { return simplex_face(n, n + 1); }

SimplexMap decalage_beta(int n) { return simplex_vertex(n + 1, n + 1); }

namespace {

void enumerate_tables(int pos, int n, int m, std::vector<int>& cur, std::vector<SimplexMap>& out) {
    if (pos == n + 1) {
        out.push_back(SimplexMap{n, m, cur});
        return;
    }
    int lo = pos == 0 ? 0 : cur[static_cast<size_t>(pos) - 1];
    for (int v = lo; v <= m; ++v) {
        cur[static_cast<size_t>(pos)] = v;
        enumerate_tables(pos + 1, n, m, cur, out);
    }
}

}  // namespace

std::vector<SimplexMap> all_simplex_maps(int n, int m) {
    std::vector<SimplexMap> out;
    std::vector<int> cur(static_cast<size_t>(n) + 1, 0);
    enumerate_tables(0, n, m, cur, out);
    return out;
}

std::string to_string(const SimplexMap& f) {
    std::string s = "[" + std::to_string(f.src) + "]->[" + std::to_string(f.tgt) + "](";
    for (size_t i = 0; i < f.values.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(f.values[i]);
    }
    return s + ")";
}

}  // namespace kanspec
