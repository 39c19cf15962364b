#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kanspec/simplex.hpp"

namespace kanspec {

// A cell of some dimension together with a degeneracy word: the pair
// (W, c) stands for the (possibly degenerate) simplex c . s^{w_1}..s^{w_k}.
// The basepoint is cell 0; pairs over it are normalized to the unique
// degenerate basepoint of their dimension (word 0,1,..,d-1).
struct DegenPair {
    std::vector<int> word;  // strictly increasing
    int cell = 0;

    bool operator==(const DegenPair& o) const = default;
    auto operator<=>(const DegenPair& o) const = default;
};

// Finite pointed simplicial set in non-degenerate-cell (Eilenberg-Zilber)
// form: only non-degenerate cells are stored, faces may land on degenerate
// cells and are recorded as degeneracy-word/cell pairs.
struct PointedSSet {
    struct Cell {
        int dim = 0;
        std::vector<DegenPair> faces;  // size dim+1 for dim > 0, empty for dim 0
        std::string name;
    };
    std::vector<Cell> cells;  // cells[0] is the basepoint

    int dim_of(const DegenPair& p) const {
        return cells[static_cast<size_t>(p.cell)].dim + static_cast<int>(p.word.size());
    }
    int max_dim() const;
    int count_nondegenerate(int dim) const;  // excludes the basepoint
};

DegenPair basepoint_pair(int dim);
bool is_basepoint(const DegenPair& p);

PointedSSet point();
// Delta[n]_+ : the freely pointed n-simplex.
PointedSSet representable_plus(int n);
PointedSSet wedge(const std::vector<PointedSSet>& xs);

bool validate(const PointedSSet& X, std::string* why = nullptr);
void check_validated(const PointedSSet& X, const char* where);

// Right action of a single face operator d^i on a pair (0 <= i <= dim).
DegenPair apply_face(const PointedSSet& X, const DegenPair& p, int i);
// Right action of an arbitrary simplex operator phi : [m] -> [dim p].
DegenPair apply_op(const PointedSSet& X, const DegenPair& p, const SimplexMap& phi);
// The top vertex of a pair (its value on the last vertex).
DegenPair top_vertex(const PointedSSet& X, const DegenPair& p);

// All pairs of dimension n, deterministic order, basepoint first.
std::vector<DegenPair> level_pairs(const PointedSSet& X, int n);

// A pointed map in EZ form: target pair per source cell.
struct PointedMap {
    std::vector<DegenPair> assign;  // indexed by source cell id
};

PointedMap identity_map(const PointedSSet& X);
bool validate_map(const PointedSSet& A, const PointedSSet& X, const PointedMap& m, std::string* why = nullptr);
DegenPair map_pair(const PointedMap& m, const DegenPair& p, const PointedSSet& tgt);
PointedMap compose_maps(const PointedSSet& A, const PointedMap& f, const PointedSSet& B, const PointedMap& g,
                        const PointedSSet& C);

// Exhaustive, duplicate-free enumeration of pointed maps A -> X.
std::vector<PointedMap> hom_pointed(const PointedSSet& A, const PointedSSet& X);

// Levelwise bijection on non-degenerate cells.
bool is_iso(const PointedSSet& A, const PointedSSet& X, const PointedMap& m);

// Isomorphism search (cell-count and face-table equality after renaming).
bool isomorphic(const PointedSSet& A, const PointedSSet& B);

// Pushout of the pointed span  A <-f- C -g-> B, computed levelwise with
// cell identification by union-find, then re-normalized to EZ form.
PointedSSet pushout(const PointedSSet& C, const PointedSSet& A, const PointedSSet& B, const PointedMap& f,
                    const PointedMap& g);

// The pushout collapsing the image of f : C -> A to the basepoint.
PointedSSet collapse(const PointedSSet& C, const PointedSSet& A, const PointedMap& f);

// Kan's suspension: non-degenerate non-basepoint n-cells become (n+1)-cells;
// the new cell over x has d^i = (suspended d^i x) for i <= n and
// d^{n+1} = basepoint; vertices all collapse to the basepoint.
struct SigmaResult {
    PointedSSet sset;
    std::vector<int> cell_of;  // old cell id -> new cell id (0 for basepoint)
};
SigmaResult sigma_K(const PointedSSet& X);

// The loop functor (right adjoint of sigma_K): n-cells are (n+1)-cells x
// with d^{n+1} x = basepoint and top vertex at the basepoint.
// ckp_omega drops the vertex condition (and fails to be the right adjoint).
struct OmegaResult {
    PointedSSet sset;
    std::vector<DegenPair> embed;                       // new cell -> ambient pair (dim+1)
    std::vector<std::map<DegenPair, DegenPair>> from_ambient;  // per output dim
};
OmegaResult omega_K(const PointedSSet& X, int upto = -1);
OmegaResult ckp_omega(const PointedSSet& X, int upto = -1);

// Functorial action of omega_K on a pointed map.
PointedMap omega_map(const PointedSSet& X, const PointedSSet& Y, const PointedMap& f, const OmegaResult& OX,
                     const OmegaResult& OY);

// Unit X -> omega_K(sigma_K(X)) of the suspension-loop adjunction.
PointedMap unit_eta(const PointedSSet& X, const SigmaResult& SX, const OmegaResult& OSX);

std::string to_string(const PointedSSet& X);

}  // namespace kanspec
