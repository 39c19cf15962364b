#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kanspec {

// The simplex category: objects [n] = {0,...,n}, morphisms = weakly
// increasing maps stored as value tables.
struct SimplexMap {
    int src = 0;  // object [src]
    int tgt = 0;  // object [tgt]
    std::vector<int> values;  // size src+1, weakly increasing, values in [0,tgt]

    bool operator==(const SimplexMap& o) const = default;
};

// Unique face/degeneracy factorization f = d^{i_1}..d^{i_p} s^{j_1}..s^{j_q}
// with i_1 > ... > i_p and j_1 < ... < j_q.
struct SimplexNormalForm {
    std::vector<int> faces;   // strictly decreasing
    std::vector<int> degens;  // strictly increasing
    int src = 0;

    int tgt() const { return src - static_cast<int>(degens.size()) + static_cast<int>(faces.size()); }
    bool operator==(const SimplexNormalForm& o) const = default;
};

bool is_valid(const SimplexMap& f);
void check_valid(const SimplexMap& f, const char* where);

SimplexMap simplex_identity(int n);
// d^i : [n] -> [n+1], the injection missing i (0 <= i <= n+1).
SimplexMap simplex_face(int n, int i);
// s^j : [n+1] -> [n], the surjection repeating j (0 <= j <= n).
SimplexMap simplex_degeneracy(int n, int j);
// {v} : [0] -> [n].
SimplexMap simplex_vertex(int n, int v);

// compose(f, g) = g after f; requires f.tgt == g.src.
SimplexMap compose(const SimplexMap& f, const SimplexMap& g);

SimplexNormalForm normal_form(const SimplexMap& f);
SimplexMap from_normal_form(const SimplexNormalForm& nf);

// Kan's endofunctor K: [n] |-> [n+1], d^i |-> d^i, s^j |-> s^j.  On a value
// table this extends f by sending the new top to the new top.
int kan_K(int n);
SimplexMap kan_K(const SimplexMap& f);

// The Kan decalage transformations id => K <= [0]:
//   alpha_[n] = d^{n+1} : [n] -> [n+1]   (inclusion missing the top vertex)
//   beta_[n]  = {n+1}   : [0] -> [n+1]   (top-vertex inclusion)
SimplexMap decalage_alpha(int n);
SimplexMap decalage_beta(int n);

// All monotone maps [n] -> [m], in lexicographic table order.
std::vector<SimplexMap> all_simplex_maps(int n, int m);

std::string to_string(const SimplexMap& f);

}  // namespace kanspec
