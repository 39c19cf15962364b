// kanspec: exact combinatorics of stable simplex calculus, Kan spectra and
// finite-category 2-limits.  Exit codes: 0 ok, 1 a check failed, 2 bad input.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "kanspec/json_io.hpp"

using namespace kanspec;

namespace {

int g_exit = 0;

void report(const std::string& tag, bool pass, const std::string& detail = "") {
    std::cout << "[" << tag << "] " << (pass ? "PASS" : "FAIL");
    if (!detail.empty()) std::cout << " " << detail;
    std::cout << "\n";
    if (!pass) g_exit = std::max(g_exit, 1);
}

json load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void save(const std::string& path, const json& j) {
    std::ofstream out(path);
    out << j.dump(2) << "\n";
}

uint64_t pick_seed(uint64_t flag_seed) {
    if (flag_seed != 0) return flag_seed;
    if (const char* s = std::getenv("KANSPEC_SEED")) return std::strtoull(s, nullptr, 10);
    return 0xC0FFEE;
}

PointedSSet ckp_pushout() {
    PointedSSet D1 = representable_plus(1);
    PointedSSet D0 = representable_plus(0);
    PointedMap f;
    f.assign = {basepoint_pair(0), DegenPair{{}, 1}};
    return collapse(D0, D1, f);
}

int run_regress_ckp() {
    PointedSSet X = ckp_pushout();
    OmegaResult naive = ckp_omega(X);
    OmegaResult adjoint = omega_K(X);
    size_t n_naive = hom_pointed(representable_plus(0), naive.sset).size();
    size_t n_adj = hom_pointed(representable_plus(0), adjoint.sset).size();
    std::cout << "maps from the pointed 0-simplex into the naive loops:   " << n_naive << "\n";
    std::cout << "maps from the pointed 0-simplex into the adjoint loops: " << n_adj << "\n";
    report("ckp-counts", n_naive == 2 && n_adj == 1);
    return g_exit;
}

int run_regress_locsph() {
    bool ok = true;
    for (long long z = -2; z <= 2; ++z)
        for (int n = 0; n <= 3; ++n) {
            if (is_loc_sph(stable_cell(z, n))) ok = false;
            if (!is_loc_sph(sphere(z, n))) ok = false;
        }
    report("locsph-membership", ok, "stable cells excluded, spheres included, z in [-2,2], n <= 3");
    return g_exit;
}

int run_regress_oplax_weight() {
    std::vector<CatDiagram> corpus;
    auto constant = [](const FiniteCategory& J, const FiniteCategory& C) {
        CatDiagram X;
        X.J = J;
        for (int j = 0; j < J.n_obj; ++j) X.value.push_back(C);
        for (int f = 0; f < J.n_arr(); ++f) X.arrow.push_back(identity_functor(C));
        return X;
    };
    corpus.push_back(constant(terminal_category(), arrow_category()));
    corpus.push_back(constant(arrow_category(), arrow_category()));
    corpus.push_back(constant(chain_category(2), preorder_category(2, {{0, 1}})));
    corpus.push_back(constant(parallel_pair_category(), preorder_category(2, {{0, 1}})));
    bool ok = true;
    for (const CatDiagram& X : corpus) {
        WeightedLimitResult WL = weighted_limit(oplax_weight(X.J).W, X);
        OplaxLimitResult O = oplax_limit_explicit(X);
        if (!categories_isomorphic(WL.cat, O.cat)) ok = false;
    }
    report("oplax-weight-iso", ok, std::to_string(corpus.size()) + " diagrams");
    return g_exit;
}

TruncSSet load_cellular(const std::string& in, const std::string& category, int bound) {
    if (!in.empty()) return trunc_sset_from_json(load(in));
    if (!category.empty()) return nerve_of_category(finite_category_from_json(load(category)), bound);
    throw std::invalid_argument("provide --in CELLULAR.json or --category CATEGORY.json");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for the stable simplex calculus and Kan spectra"};
    app.require_subcommand(1);
    uint64_t seed = 0;
    app.add_option("--seed", seed, "seed for randomized suites (or env KANSPEC_SEED)");

    // regress
    auto* regress = app.add_subcommand("regress", "built-in regression checks");
    regress->require_subcommand(1);
    regress->add_subcommand("ckp", "the two loop-functor counts on the collapsed 1-simplex");
    regress->add_subcommand("locsph", "membership sweep for stable cells and spheres");
    regress->add_subcommand("oplax-weight", "the oplax weight computes the explicit oplax limit");

    // segal
    auto* segal = app.add_subcommand("segal", "Segal condition for a cellular set or a nerve");
    std::string segal_in, segal_cat;
    int segal_bound = 4;
    segal->add_option("--in", segal_in, "cellular set JSON");
    segal->add_option("--category", segal_cat, "finite category JSON (nerve is built)");
    segal->add_option("--bound", segal_bound, "truncation bound (>= 2)");

    // check-horn
    auto* horn = app.add_subcommand("check-horn", "unique inner-horn filling for a cellular set");
    std::string horn_in, horn_cat;
    int horn_bound = 4;
    horn->add_option("--in", horn_in, "cellular set JSON");
    horn->add_option("--category", horn_cat, "finite category JSON (nerve is built)");
    horn->add_option("--bound", horn_bound, "truncation bound (>= 2)");

    // suspend / loop
    auto* suspend = app.add_subcommand("suspend", "Kan suspension of a pointed simplicial set");
    std::string sus_in, sus_out;
    suspend->add_option("--in", sus_in, "pointed simplicial set JSON")->required();
    suspend->add_option("--out", sus_out, "output file");
    auto* loop = app.add_subcommand("loop", "loop functor of a pointed simplicial set");
    std::string loop_in, loop_out;
    bool loop_naive = false;
    loop->add_option("--in", loop_in, "pointed simplicial set JSON")->required();
    loop->add_option("--out", loop_out, "output file");
    loop->add_flag("--naive", loop_naive, "drop the top-vertex condition");

    // spectrify
    auto* spfy = app.add_subcommand("spectrify", "reflect a spectrum onto the loop-isomorphism locus");
    std::string spfy_in, spfy_out;
    spfy->add_option("--in", spfy_in, "spectrum JSON")->required();
    spfy->add_option("--out", spfy_out, "output file");

    // ksp / kps
    auto* kspc = app.add_subcommand("ksp", "translate a spectrum to a stable complex");
    std::string ksp_in, ksp_out;
    kspc->add_option("--in", ksp_in, "spectrum JSON")->required();
    kspc->add_option("--out", ksp_out, "output file");
    auto* kpsc = app.add_subcommand("kps", "translate a locally spherical complex to a spectrum");
    std::string kps_in, kps_out;
    kpsc->add_option("--in", kps_in, "stable complex JSON")->required();
    kpsc->add_option("--out", kps_out, "output file");

    // emit-regulus
    auto* emitc = app.add_subcommand("emit-regulus", "emit a generating family of stable inclusions");
    std::string emit_kind = "spherical-horn", emit_out;
    long long emit_zmin = 0, emit_zmax = 0;
    int emit_nmax = 1;
    emitc->add_option("--kind", emit_kind, "brown-horn|brown-boundary|spherical-horn|spherical-boundary");
    emitc->add_option("--zmin", emit_zmin, "lowest level");
    emitc->add_option("--zmax", emit_zmax, "highest level");
    emitc->add_option("--nmax", emit_nmax, "largest simplex parameter");
    emitc->add_option("--out", emit_out, "output file");

    // limits
    auto* limits = app.add_subcommand("limits", "finite-category limit laboratory");
    limits->require_subcommand(1);
    std::string lim_in, lim_weight;
    auto* lim_strict = limits->add_subcommand("strict", "strict limit of a diagram");
    auto* lim_oplax = limits->add_subcommand("oplax", "explicit oplax limit of a diagram");
    auto* lim_weighted = limits->add_subcommand("weighted", "weighted limit (default: oplax weight)");
    auto* lim_checksp = limits->add_subcommand("check-sp", "spectrification hypotheses report");
    auto* lim_comma = limits->add_subcommand("comma", "comma-category limit formula check");
    for (auto* sc : {lim_strict, lim_oplax, lim_weighted, lim_checksp})
        sc->add_option("--in", lim_in, "diagram JSON")->required();
    lim_weighted->add_option("--weight", lim_weight, "weight diagram JSON");
    lim_checksp->add_option("--weight", lim_weight, "weight diagram JSON");
    std::string comma_in;
    bool comma_list = false;
    lim_comma->add_option("--in", comma_in, "comma instance JSON")->required();
    lim_comma->add_flag("--list", comma_list, "print the comma category layout and exit");

    // run (manifest)
    auto* runc = app.add_subcommand("run", "run the commands of a manifest");
    std::string manifest_path;
    runc->add_option("--manifest", manifest_path, "manifest JSON")->required();

    CLI11_PARSE(app, argc, argv);
    (void)pick_seed(seed);

    try {
        if (regress->parsed()) {
            if (regress->get_subcommand("ckp")->parsed()) return run_regress_ckp();
            if (regress->get_subcommand("locsph")->parsed()) return run_regress_locsph();
            if (regress->get_subcommand("oplax-weight")->parsed()) return run_regress_oplax_weight();
        }
        if (segal->parsed()) {
            TruncSSet X = load_cellular(segal_in, segal_cat, segal_bound);
            std::string why;
            bool ok = segal_check(X, std::min(segal_bound, X.bound), &why);
            report("segal-condition", ok, why);
            return g_exit;
        }
        if (horn->parsed()) {
            TruncSSet X = load_cellular(horn_in, horn_cat, horn_bound);
            std::vector<TruncInclusion> regulus;
            for (int n = 2; n <= std::min(horn_bound, X.bound); ++n)
                for (int k = 1; k < n; ++k) regulus.push_back(horn_inclusion(n, k, X.bound));
            OrthReport r = orthogonal_to(X, regulus);
            report("horn-filling", r.orthogonal, r.all_exist ? "" : "(some horns have no filler)");
            return g_exit;
        }
        if (suspend->parsed()) {
            PointedSSet X = pointed_sset_from_json(load(sus_in));
            SigmaResult S = sigma_K(X);
            json out = to_json(S.sset);
            if (!sus_out.empty()) save(sus_out, out);
            else std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (loop->parsed()) {
            PointedSSet X = pointed_sset_from_json(load(loop_in));
            OmegaResult O = loop_naive ? ckp_omega(X) : omega_K(X);
            json out = to_json(O.sset);
            if (!loop_out.empty()) save(loop_out, out);
            else std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (spfy->parsed()) {
            SequentialSpectrum E = spectrum_from_json(load(spfy_in));
            SpectrifyResult R = spectrify(E);
            bool fixed = unit_is_iso(E, R);
            std::cout << (fixed ? "fixed point: the spectrum is already a loop-isomorphism spectrum\n"
                                : "reflected onto the loop-isomorphism locus\n");
            report("spectrify-output-strict", is_omega_spectrum(R.spectrum));
            if (!spfy_out.empty()) save(spfy_out, to_json(R.spectrum));
            return g_exit;
        }
        if (kspc->parsed()) {
            SequentialSpectrum E = spectrum_from_json(load(ksp_in));
            StableComplex Z = ksp(E);
            json out = to_json(Z);
            if (!ksp_out.empty()) save(ksp_out, out);
            else std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (kpsc->parsed()) {
            StableComplex Z = stable_complex_from_json(load(kps_in));
            SequentialSpectrum E = kps(Z);
            json out = to_json(E);
            if (!kps_out.empty()) save(kps_out, out);
            else std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (emitc->parsed()) {
            RegulusKind kind;
            if (emit_kind == "brown-horn") kind = RegulusKind::BrownHorn;
            else if (emit_kind == "brown-boundary") kind = RegulusKind::BrownBoundary;
            else if (emit_kind == "spherical-horn") kind = RegulusKind::SphericalHorn;
            else if (emit_kind == "spherical-boundary") kind = RegulusKind::SphericalBoundary;
            else throw std::invalid_argument("unknown kind " + emit_kind);
            auto family = emit_regulus(kind, emit_zmin, emit_zmax, emit_nmax);
            json out = json::array();
            for (const StableArrow& a : family) out.push_back(to_json(a));
            std::cout << "emitted " << family.size() << " inclusions\n";
            if (!emit_out.empty()) save(emit_out, out);
            return 0;
        }
        if (limits->parsed()) {
            if (lim_strict->parsed()) {
                StrictLimitResult S = strict_limit(cat_diagram_from_json(load(lim_in)));
                std::cout << "strict limit: " << S.cat.n_obj << " objects, " << S.cat.n_arr() << " arrows\n";
                return 0;
            }
            if (lim_oplax->parsed()) {
                OplaxLimitResult O = oplax_limit_explicit(cat_diagram_from_json(load(lim_in)));
                std::cout << "oplax limit: " << O.cat.n_obj << " objects, " << O.cat.n_arr() << " arrows\n";
                return 0;
            }
            if (lim_weighted->parsed()) {
                CatDiagram X = cat_diagram_from_json(load(lim_in));
                CatDiagram W = lim_weight.empty() ? oplax_weight(X.J).W : cat_diagram_from_json(load(lim_weight));
                WeightedLimitResult WL = weighted_limit(W, X);
                std::cout << "weighted limit: " << WL.cat.n_obj << " objects, " << WL.cat.n_arr() << " arrows\n";
                return 0;
            }
            if (lim_checksp->parsed()) {
                CatDiagram X = cat_diagram_from_json(load(lim_in));
                CatDiagram W = lim_weight.empty() ? oplax_weight(X.J).W : cat_diagram_from_json(load(lim_weight));
                SpectrReport rep = check_spectrification_hypotheses(W, X);
                report("sp-shape-inverse", rep.inverse_shape);
                report("sp-fibrancy", rep.fibrant);
                report("sp-colimits-exist", rep.colimits_exist);
                report("sp-colimits-preserved", rep.preserved);
                report("sp-weights-final", rep.weights_final);
                for (const std::string& n : rep.notes) std::cout << "  note: " << n << "\n";
                return g_exit;
            }
            if (lim_comma->parsed()) {
                json j = load(comma_in);
                FiniteCategory C = finite_category_from_json(j.at("base"));
                FiniteCategory B = finite_category_from_json(j.at("source"));
                FiniteFunctor R = finite_functor_from_json(j.at("functor"));
                if (comma_list) {
                    CommaCategory K = slice_comma(C, B, R);
                    for (size_t o = 0; o < K.objs.size(); ++o) {
                        auto [a, b, f] = K.objs[o];
                        std::cout << "object " << o << ": (" << a << ", " << b << ", arrow " << f << ")\n";
                    }
                    for (int e = 0; e < K.cat.n_arr(); ++e)
                        std::cout << "arrow " << e << ": " << K.cat.src(e) << " -> " << K.cat.tgt(e) << " = ("
                                  << K.arrs[static_cast<size_t>(e)].first << ", "
                                  << K.arrs[static_cast<size_t>(e)].second << ")\n";
                    return 0;
                }
                DiagramInCat D;
                D.I = finite_category_from_json(j.at("shape"));
                D.obj = j.at("diagram_objects").get<std::vector<int>>();
                D.arr = j.at("diagram_arrows").get<std::vector<int>>();
                CommaLimitReport rep = comma_limit_check(C, B, R, D);
                report("comma-preservation", rep.r_preserves);
                report("comma-limit-formula", rep.ok, rep.detail);
                return g_exit;
            }
        }
        if (runc->parsed()) {
            json man = load(manifest_path);
            std::map<std::string, json> entities;
            if (man.contains("entities"))
                for (auto& [name, val] : man.at("entities").items()) entities[name] = val;
            auto entity = [&](const json& cmd, const char* key) -> json {
                std::string name = cmd.at(key).get<std::string>();
                if (!entities.count(name)) throw std::invalid_argument("manifest: unknown entity " + name);
                return entities.at(name);
            };
            for (const json& cmd : man.at("commands")) {
                std::string verb = cmd.at("verb").get<std::string>();
                if (verb == "regress-ckp") run_regress_ckp();
                else if (verb == "regress-locsph") run_regress_locsph();
                else if (verb == "regress-oplax-weight") run_regress_oplax_weight();
                else if (verb == "segal") {
                    TruncSSet X = cmd.contains("cellular") ? trunc_sset_from_json(entity(cmd, "cellular"))
                                                           : nerve_of_category(finite_category_from_json(entity(cmd, "category")),
                                                                               cmd.value("bound", 4));
                    std::string why;
                    report("segal-condition", segal_check(X, std::min(cmd.value("bound", 4), X.bound), &why), why);
                } else if (verb == "spectrify") {
                    SequentialSpectrum E = spectrum_from_json(entity(cmd, "spectrum"));
                    SpectrifyResult R = spectrify(E);
                    report("spectrify-output-strict", is_omega_spectrum(R.spectrum));
                } else if (verb == "ksp") {
                    SequentialSpectrum E = spectrum_from_json(entity(cmd, "spectrum"));
                    std::cout << "ksp: " << ksp(E).cells.size() << " cells\n";
                } else if (verb == "kps") {
                    StableComplex Z = stable_complex_from_json(entity(cmd, "complex"));
                    std::cout << "kps: tail at " << kps(Z).tail_at() << "\n";
                } else if (verb == "emit-regulus") {
                    std::string kind = cmd.value("kind", "spherical-horn");
                    RegulusKind k = kind == "brown-horn"         ? RegulusKind::BrownHorn
                                    : kind == "brown-boundary"   ? RegulusKind::BrownBoundary
                                    : kind == "spherical-horn"   ? RegulusKind::SphericalHorn
                                                                 : RegulusKind::SphericalBoundary;
                    auto fam = emit_regulus(k, cmd.value("zmin", 0), cmd.value("zmax", 0), cmd.value("nmax", 1));
                    std::cout << "emitted " << fam.size() << " inclusions\n";
                } else {
                    throw std::invalid_argument("manifest: unknown verb " + verb);
                }
            }
            return g_exit;
        }
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
    return g_exit;
}
