#pragma once

#include <string>

#include <json.hpp>

#include "kanspec/fincat.hpp"
#include "kanspec/limits_lab.hpp"
#include "kanspec/pointed_sset.hpp"
#include "kanspec/simplex.hpp"
#include "kanspec/spectrum.hpp"
#include "kanspec/stable.hpp"
#include "kanspec/stable_complex.hpp"
#include "kanspec/theta.hpp"

namespace kanspec {

using nlohmann::json;

json to_json(const SimplexMap& f);
SimplexMap simplex_map_from_json(const json& j);

json to_json(const StableMorphism& f);
StableMorphism stable_morphism_from_json(const json& j);

json to_json(const CollageMorphism& f);
CollageMorphism collage_morphism_from_json(const json& j);

json to_json(const PointedSSet& X);
PointedSSet pointed_sset_from_json(const json& j);

json to_json(const PointedSSet& src, const PointedMap& m);
PointedMap pointed_map_from_json(const PointedSSet& src, const PointedSSet& tgt, const json& j);

json to_json(const StableComplex& Z);
StableComplex stable_complex_from_json(const json& j);

json to_json(const StableArrow& f);
StableArrow stable_arrow_from_json(const json& j);

json to_json(const SequentialSpectrum& E);
SequentialSpectrum spectrum_from_json(const json& j);

json to_json(const FiniteCategory& C);
FiniteCategory finite_category_from_json(const json& j);

json to_json(const FiniteFunctor& F);
FiniteFunctor finite_functor_from_json(const json& j);

json to_json(const CatDiagram& X);
CatDiagram cat_diagram_from_json(const json& j);

json to_json(const ThetaCell& T);
ThetaCell theta_cell_from_json(const json& j);

// cellular sets over the simplex sorts
json to_json(const TruncSSet& X);
TruncSSet trunc_sset_from_json(const json& j);

}  // namespace kanspec
