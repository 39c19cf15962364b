#pragma once

#include <optional>
#include <string>
#include <vector>

namespace kanspec {

// Explicit finite category: arrow list with a full composition table.
// compose(f, g) = g after f; comp_table[g][f] holds the composite id.
struct FiniteCategory {
    struct Arrow {
        int src = 0;
        int tgt = 0;
        std::string name;
    };
    int n_obj = 0;
    std::vector<Arrow> arrows;
    std::vector<int> ident;                     // per object
    std::vector<std::vector<int>> comp_table;   // comp_table[g][f]

    int compose(int f, int g) const { return comp_table[static_cast<size_t>(g)][static_cast<size_t>(f)]; }
    int src(int f) const { return arrows[static_cast<size_t>(f)].src; }
    int tgt(int f) const { return arrows[static_cast<size_t>(f)].tgt; }
    int n_arr() const { return static_cast<int>(arrows.size()); }

    std::vector<int> hom(int a, int b) const;
    bool is_iso_arrow(int f) const;
};

bool validate(const FiniteCategory& C, std::string* why = nullptr);
void check_validated(const FiniteCategory& C, const char* where);

// small builders
FiniteCategory discrete_category(int n);
FiniteCategory terminal_category();
FiniteCategory arrow_category();              // 0 -> 1
FiniteCategory iso_category();                // 0 <-> 1
FiniteCategory parallel_pair_category();      // 0 => 1
FiniteCategory chain_category(int n);         // 0 -> 1 -> ... -> n
// a category from a preorder relation (objects i<=j related)
FiniteCategory preorder_category(int n, const std::vector<std::pair<int, int>>& relations);

struct FiniteFunctor {
    std::vector<int> obj;  // per source object
    std::vector<int> arr;  // per source arrow
};

bool validate_functor(const FiniteCategory& C, const FiniteCategory& D, const FiniteFunctor& F,
                      std::string* why = nullptr);
FiniteFunctor identity_functor(const FiniteCategory& C);
FiniteFunctor compose_functors(const FiniteFunctor& F, const FiniteFunctor& G);  // G after F

struct FiniteNatTrans {
    std::vector<int> comp;  // per source object: arrow F(x) -> G(x) in D
};

bool validate_nat(const FiniteCategory& C, const FiniteCategory& D, const FiniteFunctor& F, const FiniteFunctor& G,
                  const FiniteNatTrans& t, std::string* why = nullptr);

std::vector<FiniteFunctor> all_functors(const FiniteCategory& C, const FiniteCategory& D);
std::vector<FiniteNatTrans> all_nat_trans(const FiniteCategory& C, const FiniteCategory& D, const FiniteFunctor& F,
                                          const FiniteFunctor& G);

// the functor category [C, D] with object/arrow dictionaries
struct FunctorCategory {
    FiniteCategory cat;
    std::vector<FiniteFunctor> objs;
    struct ArrowData {
        int from = 0, to = 0;
        FiniteNatTrans nat;
    };
    std::vector<ArrowData> arrs;
    int find_object(const FiniteFunctor& F) const;
};
FunctorCategory functor_category(const FiniteCategory& C, const FiniteCategory& D);

// a finite diagram in C (shape I, explicit functor data)
struct DiagramInCat {
    FiniteCategory I;
    std::vector<int> obj;  // per I-object: object of C
    std::vector<int> arr;  // per I-arrow: arrow of C
};
bool validate_diagram(const FiniteCategory& C, const DiagramInCat& D, std::string* why = nullptr);

struct Cone {
    int apex = 0;
    std::vector<int> legs;  // per I-object
};
std::vector<Cone> all_cones(const FiniteCategory& C, const DiagramInCat& D);
std::vector<Cone> all_cocones(const FiniteCategory& C, const DiagramInCat& D);
// terminal cone / initial cocone if they exist
std::optional<Cone> limit_of(const FiniteCategory& C, const DiagramInCat& D);
std::optional<Cone> colimit_of(const FiniteCategory& C, const DiagramInCat& D);

bool is_initial_object(const FiniteCategory& C, int x);
bool is_terminal_object(const FiniteCategory& C, int x);
bool is_connected(const FiniteCategory& C);

// isomorphism-of-categories search; equivalence certificate as a fallback
bool categories_isomorphic(const FiniteCategory& A, const FiniteCategory& B);
bool categories_equivalent(const FiniteCategory& A, const FiniteCategory& B);

// iso-fibration test for a functor
bool is_iso_fibration(const FiniteCategory& A, const FiniteCategory& B, const FiniteFunctor& F);

// comma category F/G with projections (arrays aligning objects/arrows)
struct CommaCategory {
    FiniteCategory cat;
    std::vector<std::tuple<int, int, int>> objs;  // (a, b, f : F a -> G b)
    std::vector<std::pair<int, int>> arrs;        // (u, v)
};
CommaCategory comma_category(const FiniteCategory& A, const FiniteCategory& B, const FiniteCategory& C,
                             const FiniteFunctor& F, const FiniteFunctor& G);

// final functor test: every (c downarrow F) comma is nonempty and connected
bool is_final_functor(const FiniteCategory& A, const FiniteCategory& B, const FiniteFunctor& F);

std::string to_string(const FiniteCategory& C);

}  // namespace kanspec
