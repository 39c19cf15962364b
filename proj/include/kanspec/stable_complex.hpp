#pragma once

#include <string>
#include <vector>

#include "kanspec/stable.hpp"

namespace kanspec {

// A pair (degeneracy word, cell) in a stable complex; cell -1 is the
// basepoint, which exists implicitly at every integer level.  Pairs carry
// their level so basepoints are well-typed.
struct StablePair {
    std::vector<int> word;  // strictly increasing stable degeneracy word
    int cell = -1;
    long long level = 0;

    bool operator==(const StablePair& o) const = default;
    auto operator<=>(const StablePair& o) const = default;
};

// Locally finite pointed presheaf on the stable simplex category in
// non-degenerate-cell form.  faces[i] is d_i for 0 <= i <= bound; every
// face above the stored range is the basepoint.
struct StableComplex {
    struct Cell {
        long long level = 0;
        std::vector<StablePair> faces;
        std::string name;
    };
    std::vector<Cell> cells;

    int bound(int cell) const { return static_cast<int>(cells[static_cast<size_t>(cell)].faces.size()) - 1; }
    // largest i with d_i != basepoint (or -1)
    int effective_bound(int cell) const;
    long long level_of(const StablePair& p) const {
        return p.cell < 0 ? p.level : cells[static_cast<size_t>(p.cell)].level + static_cast<long long>(p.word.size());
    }
    int count_at_level(long long z) const;
    long long min_level() const;
    long long max_level() const;
};

StablePair stable_basepoint(long long level);

bool validate(const StableComplex& Z, std::string* why = nullptr);
void check_validated(const StableComplex& Z, const char* where);

StablePair apply_face(const StableComplex& Z, const StablePair& p, int i);
StablePair apply_op(const StableComplex& Z, const StablePair& p, const StableMorphism& m);

// Remove trailing basepoint faces so bounds are minimal.
void normalize_bounds(StableComplex& Z);

// The stable cell: the quotient of the representable at [z] killing all
// faces d^i with i > n.  One cell per subset D of {0..n}, level z - |D|.
StableComplex stable_cell(long long z, int n);
// The stable sphere with top level z and n-simplex face combinatorics:
// additionally kills the long bottom face composite.
StableComplex sphere(long long z, int n);

// A map of stable complexes bundled with its endpoints.
struct StableArrow {
    StableComplex src;
    StableComplex tgt;
    std::vector<StablePair> assign;  // per src cell
    std::string name;
};

bool validate_arrow(const StableArrow& f, std::string* why = nullptr);
StablePair map_pair(const StableArrow& f, const StablePair& p);

// Subcomplex inclusion on a face-closed cell subset.
StableArrow subcomplex_inclusion(const StableComplex& Z, const std::vector<int>& cells, const std::string& name);

// Brown horns and boundaries: unions of face images inside stable_cell(z,n).
StableArrow brown_horn(long long z, int n, int i);
StableArrow brown_boundary(long long z, int n);
// The quotient stable_cell(z,n) ->> sphere(z,n).
StableArrow sphere_quotient(long long z, int n);
// Epi-mono factorization of an arrow; returns (epi, mono).
std::pair<StableArrow, StableArrow> image_factor(const StableArrow& f);
// Spherical horns/boundaries: the mono part of horn/boundary into the sphere.
StableArrow spherical_horn(long long z, int n, int i);
StableArrow spherical_boundary(long long z, int n);

// Composition g after f of bundled arrows (checks tgt/src cell counts).
StableArrow compose_arrows(const StableArrow& f, const StableArrow& g);

// Cellwise sphere-relation membership test for the locally spherical
// subcategory, and the coreflection onto the largest subcomplex in it.
bool is_loc_sph(const StableComplex& Z);
bool cell_satisfies_sphere_relation(const StableComplex& Z, int cell);
StableComplex loc_sph_coreflect(const StableComplex& Z);

// Exhaustive enumeration of maps A -> X.
std::vector<std::vector<StablePair>> hom_stable(const StableComplex& A, const StableComplex& X);

// Right lifting property of X against an inclusion: for every map src -> X,
// enumerate fillers tgt -> X.  is_orthogonal asks for exactly one each.
struct LiftReport {
    bool has_all = true;
    bool unique_all = true;
    std::vector<int> filler_counts;                           // per map src -> X
    std::vector<std::vector<std::vector<StablePair>>> fillers;  // per map: the extensions
};
LiftReport lifting_report(const StableComplex& X, const StableArrow& inclusion);
bool has_rlp(const StableComplex& X, const StableArrow& inclusion);
bool is_orthogonal(const StableComplex& X, const StableArrow& inclusion);

// Shift every level by delta.
StableComplex level_shift(const StableComplex& Z, long long delta);

bool isomorphic(const StableComplex& A, const StableComplex& B);

enum class RegulusKind { BrownHorn, BrownBoundary, SphericalHorn, SphericalBoundary };
std::vector<StableArrow> emit_regulus(RegulusKind kind, long long zmin, long long zmax, int nmax);

std::string to_string(const StableComplex& Z);

}  // namespace kanspec
