#pragma once

#include <string>
#include <vector>

#include "kanspec/simplex.hpp"

namespace kanspec {

// Segal's gamma category: a morphism <k> -> <m> assigns to each i in {1..k}
// a subset of {1..m}, pairwise disjoint.
struct GammaMorphism {
    int src = 0;
    int tgt = 0;
    std::vector<std::vector<int>> parts;  // parts[i-1], sorted, values in 1..tgt

    bool operator==(const GammaMorphism& o) const = default;
};

bool is_valid(const GammaMorphism& f);
GammaMorphism make_gamma(int src, int tgt, std::vector<std::vector<int>> parts);
GammaMorphism gamma_identity(int k);

// compose g after f: (g o f)(i) = union of g(j) over j in f(i)
GammaMorphism gamma_compose(const GammaMorphism& f, const GammaMorphism& g);

// the functor from the simplex category: F(phi)(i) = { j : phi(i-1) < j <= phi(i) }
GammaMorphism simplex_to_gamma(const SimplexMap& phi);

std::vector<GammaMorphism> all_gamma_maps(int k, int m);

std::string to_string(const GammaMorphism& f);

}  // namespace kanspec
