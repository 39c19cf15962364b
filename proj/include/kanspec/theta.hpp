#pragma once

#include <map>
#include <string>
#include <vector>

#include "kanspec/fincat.hpp"
#include "kanspec/gamma.hpp"
#include "kanspec/simplex.hpp"

namespace kanspec {

// A cell of Theta: a planar tree.  The leaf is the object [0]; a node of
// arity n with children T_1..T_n is [n];(T_1,..,T_n).
struct ThetaCell {
    std::vector<ThetaCell> kids;

    int arity() const { return static_cast<int>(kids.size()); }
    bool operator==(const ThetaCell& o) const = default;
    auto operator<=>(const ThetaCell& o) const = default;
};

ThetaCell theta_leaf();
ThetaCell theta_node(std::vector<ThetaCell> kids);
// gamma embedding of the simplex category: [n];([0],..,[0])
ThetaCell delta_cell(int n);
// the n-globe as an iterated one-child tree
ThetaCell globe_cell(int n);

int tree_depth(const ThetaCell& T);
// Berger's inductive degree: lambda([m];(T_i)) = m + sum lambda(T_i)
int reedy_degree(const ThetaCell& T);
std::string encode(const ThetaCell& T);
// all cells of degree <= d (and, optionally, depth <= max_depth for Theta_n)
std::vector<ThetaCell> cells_up_to_degree(int d, int max_depth = -1);

// A morphism of Theta in wreath form: a base simplex map together with, for
// each source slot i and each j in F(base)(i+1), a component S_i -> T_{j-1}.
struct ThetaMorphism {
    ThetaCell src;
    ThetaCell tgt;
    SimplexMap base;
    std::vector<std::vector<ThetaMorphism>> comps;  // comps[i] ordered by increasing j

    bool operator==(const ThetaMorphism& o) const { return src == o.src && tgt == o.tgt && base == o.base && comps == o.comps; }
};

std::string encode(const ThetaMorphism& f);
bool validate_theta(const ThetaMorphism& f, std::string* why = nullptr);
ThetaMorphism theta_identity(const ThetaCell& T);
// compose second after first, with the unique-k routing of components
ThetaMorphism wreath_compose(const ThetaMorphism& second, const ThetaMorphism& first);

// memoized hom enumeration (deterministic order)
const std::vector<ThetaMorphism>& theta_hom(const ThetaCell& S, const ThetaCell& T);

enum class ThetaClass { Plus, Minus, Mixed };
struct ClassifyResult {
    ThetaClass cls = ThetaClass::Mixed;
    bool iso = false;
};
// semantic classification against represented presheaves, truncated at the
// degree of the larger endpoint
ClassifyResult classify(const ThetaMorphism& f);

// minus-then-plus factorization found by enumeration (all of them)
std::vector<std::pair<ThetaMorphism, ThetaMorphism>> pm_factorizations(const ThetaMorphism& f);

// all codimension-1 plus maps into T, with inner flags
std::vector<ThetaMorphism> hyperfaces(const ThetaCell& T);
bool is_inner(const ThetaMorphism& f);

// A subfunctor of the representable Theta[T], truncated by Reedy degree.
struct ThetaSubfunctor {
    ThetaCell T;
    int bound = 0;
    std::vector<ThetaCell> sorts;
    std::vector<std::vector<bool>> member;  // aligned with theta_hom(sort, T)

    int count(const ThetaCell& sort) const;
    int count_nondegenerate(const ThetaCell& sort) const;
};

ThetaSubfunctor image_union(const ThetaCell& T, const std::vector<ThetaMorphism>& maps, int bound);
// horn: union of all hyperfaces except kappa
ThetaSubfunctor horn(const ThetaCell& T, const ThetaMorphism& kappa, int bound);
// spine: union of the globe cells of the wide-span decomposition
ThetaSubfunctor spine(const ThetaCell& T, int bound);
ThetaSubfunctor intersect(const ThetaSubfunctor& a, const ThetaSubfunctor& b);
// the globe maps of the decomposition
std::vector<ThetaMorphism> spine_globes(const ThetaCell& T);

// Linear pasting diagrams: dims n_0, m_1, n_1, .., m_{l-1}, n_l with each
// m_i <= min(n_{i-1}, n_i).  Entries may be negative in the Z-indexed case.
struct PastingDiagram {
    std::vector<long long> dims;

    bool operator==(const PastingDiagram& o) const = default;
};
bool is_valid(const PastingDiagram& p);
PastingDiagram pasting_diagram_of(const ThetaCell& T);
// the globe-shift: +1 on every dimension
PastingDiagram shift_S(const PastingDiagram& p);
long long shift_S(long long globe);

// --- truncated simplicial sets (cellular sets over the simplex sorts) ------

struct TruncSSet {
    int bound = 0;
    std::vector<int> size;                            // per level 0..bound
    std::vector<std::vector<std::vector<int>>> face;  // face[n][i], n >= 1
    std::vector<std::vector<std::vector<int>>> degen; // degen[n][j], n < bound
    std::vector<std::vector<std::string>> names;

    int act(int n, int x, const SimplexMap& phi) const;  // phi : [m] -> [n]
};

bool validate_trunc(const TruncSSet& X, std::string* why = nullptr);

TruncSSet representable_trunc(int n, int bound);
// nerve of a finite category, truncated at `bound`
TruncSSet nerve_of_category(const FiniteCategory& C, int bound);

struct TruncInclusion {
    TruncSSet sub;
    TruncSSet full;
    std::vector<std::vector<int>> elem_map;  // sub elem -> full elem, per level
    std::string name;
};
TruncInclusion spine_inclusion(int n, int bound);
TruncInclusion horn_inclusion(int n, int k, int bound);
TruncInclusion boundary_inclusion(int n, int bound);

// all simplicial maps A -> X within the truncation
std::vector<std::vector<std::vector<int>>> hom_trunc(const TruncSSet& A, const TruncSSet& X);

// the iterated-pullback bijections X_n = X_1 x_{X_0} .. x_{X_0} X_1, n <= D
bool segal_check(const TruncSSet& X, int D, std::string* why = nullptr);

struct OrthReport {
    bool all_exist = true;
    bool orthogonal = true;  // exactly one filler everywhere
};
OrthReport orthogonal_to(const TruncSSet& X, const std::vector<TruncInclusion>& regulus);

// duplicate a cell at the top level (used to manufacture Segal violations)
TruncSSet duplicate_top_cell(const TruncSSet& X, int elem);

}  // namespace kanspec
