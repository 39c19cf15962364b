#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kanspec/fincat.hpp"

namespace kanspec {

// A 1-diagram of finite categories X : J -> Cat.
struct CatDiagram {
    FiniteCategory J;
    std::vector<FiniteCategory> value;   // per J-object
    std::vector<FiniteFunctor> arrow;    // per J-arrow
};

bool validate_cat_diagram(const CatDiagram& X, std::string* why = nullptr);

// The strict (conical) limit: families x_j with X_f(x_i) = x_j on the nose.
struct StrictLimitResult {
    FiniteCategory cat;
    std::vector<std::vector<int>> objs;  // per limit object: x_j
    std::vector<std::vector<int>> arrs;  // per limit arrow: a_j
};
StrictLimitResult strict_limit(const CatDiagram& X);

// The explicit oplax limit: objects are oplax cones (x_j, phi_f : x_j ->
// X_f(x_i) for f : i -> j) obeying the pasting law; arrows are families
// commuting with the phi's.
struct OplaxLimitResult {
    FiniteCategory cat;
    std::vector<std::vector<int>> obj_x;    // per limit object: x_j
    std::vector<std::vector<int>> obj_phi;  // per limit object: phi_f per J-arrow
    std::vector<std::vector<int>> arr_a;    // per limit arrow: a_j
};
OplaxLimitResult oplax_limit_explicit(const CatDiagram& X);

// The weighted limit [J,Cat](W, X) computed as the equalizer of the two
// product maps: objects are strict natural transformations W => X, arrows
// are modifications.
struct WeightedLimitResult {
    FiniteCategory cat;
    std::vector<std::vector<FiniteFunctor>> objs;  // per limit object: alpha_j
    std::vector<std::vector<FiniteNatTrans>> arrs; // per limit arrow: mu_j
};
WeightedLimitResult weighted_limit(const CatDiagram& W, const CatDiagram& X);

// The oplax weight (J downarrow -)^op, with dictionaries interpreting the
// objects of W_j as J-arrows into j.
struct OplaxWeightResult {
    CatDiagram W;
    std::vector<std::vector<int>> obj_arrow;  // per j: W_j-object -> J-arrow
};
OplaxWeightResult oplax_weight(const FiniteCategory& J);

// terminal weight (constant at the terminal category)
CatDiagram terminal_weight(const FiniteCategory& J);

struct SpectrReport {
    bool inverse_shape = true;
    bool fibrant = true;
    bool colimits_exist = true;
    bool preserved = true;
    bool weights_final = true;
    std::vector<std::string> notes;

    bool all() const { return inverse_shape && fibrant && colimits_exist && preserved && weights_final; }
};
SpectrReport check_spectrification_hypotheses(const CatDiagram& W, const CatDiagram& X);

// The reflection of the weighted limit onto the strict limit, built by the
// pointwise-colimit recipe and certified by initiality; unit/counit come
// with it.
struct SpectrificationResult {
    bool ok = false;
    std::string detail;
    StrictLimitResult strict;
    WeightedLimitResult weighted;
    std::vector<int> sp_obj;              // weighted object -> strict object
    std::vector<int> sp_arr;              // weighted arrow -> strict arrow
    std::vector<int> unit;                // weighted object -> weighted arrow (alpha -> Delta sp alpha)
    std::vector<int> counit;              // strict object -> strict arrow (sp Delta b -> b)
    std::vector<int> delta_obj;           // strict object -> weighted object
};
SpectrificationResult spectrification_adjoint(const CatDiagram& W, const CatDiagram& X);

struct CommaLimitReport {
    bool ok = false;            // formula limit found and matching brute force
    bool r_preserves = false;
    std::string detail;
};
// C downarrow R for R : B -> C; the diagram lives in the comma category.
CommaLimitReport comma_limit_check(const FiniteCategory& C, const FiniteCategory& B, const FiniteFunctor& R,
                                   const DiagramInCat& D);

// build the comma category id_C downarrow R
CommaCategory slice_comma(const FiniteCategory& C, const FiniteCategory& B, const FiniteFunctor& R);

}  // namespace kanspec
