#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kanspec/simplex.hpp"

namespace kanspec {

// The stable simplex category: objects [z] for z in Z, morphisms generated
// by faces d^i and degeneracies s^j with unbounded indices, subject to the
// simplicial identities.  Morphisms are kept in normal form
//   d^{i_1}..d^{i_p} s^{j_1}..s^{j_q},  i_1 > .. > i_p,  j_1 < .. < j_q.
struct StableMorphism {
    long long src = 0;
    long long tgt = 0;
    std::vector<int> faces;   // strictly decreasing
    std::vector<int> degens;  // strictly increasing

    bool operator==(const StableMorphism& o) const = default;
};

bool is_valid(const StableMorphism& f);
void check_valid(const StableMorphism& f, const char* where);

StableMorphism st_identity(long long z);
// d^i : [z-1] -> [z]
StableMorphism st_face(long long z, int i);
// s^j : [z+1] -> [z]
StableMorphism st_degeneracy(long long z, int j);

// Compose g after f (requires f.tgt == g.src); the composite is normalized
// by rewriting with the simplicial identities.
StableMorphism st_compose(const StableMorphism& f, const StableMorphism& g);

// Post-compose a single generator at the target end of f.
StableMorphism st_post_face(StableMorphism f, int i);
StableMorphism st_post_degeneracy(StableMorphism f, int j);

// Image of f in Delta([src+k],[tgt+k]) under the colimit inclusion of the
// K-tower.  k must be large enough for every index to fit.
bool st_stabilizable(const StableMorphism& f, long long k);
SimplexMap st_stabilize(const StableMorphism& f, long long k);
// Smallest k that works for f (and 0 at minimum).
long long st_min_stabilizer(const StableMorphism& f);

// Re-read a simplex map at integer levels: the normal form of f placed with
// source level src.
StableMorphism st_of_simplex(const SimplexMap& f, long long src);

std::string to_string(const StableMorphism& f);

// --- the collage of the K-tower ------------------------------------------

// Objects ([n], -m) with n >= 0, stage -m <= 0; a morphism to ([l], -(m+k))
// is witnessed by a simplex map [n+k] -> [l].
struct CollageObject {
    int n = 0;
    int stage = 0;  // <= 0

    bool operator==(const CollageObject& o) const = default;
};

struct CollageMorphism {
    CollageObject src;
    CollageObject tgt;
    SimplexMap witness;  // [src.n + gap] -> [tgt.n], gap = src.stage - tgt.stage

    int stage_gap() const { return src.stage - tgt.stage; }
    bool operator==(const CollageMorphism& o) const = default;
};

bool is_valid(const CollageMorphism& f);
void check_valid(const CollageMorphism& f, const char* where);

CollageMorphism collage_identity(const CollageObject& x);
CollageMorphism make_collage(const CollageObject& src, const CollageObject& tgt, const SimplexMap& witness);

// Compose g after f: the witness is g.witness o K^{gap(g)}(f.witness).
CollageMorphism collage_compose(const CollageMorphism& f, const CollageMorphism& g);

// The identification functor rho : Delta_coll -> Delta_st.
long long rho(const CollageObject& x);
StableMorphism rho(const CollageMorphism& f);

}  // namespace kanspec
