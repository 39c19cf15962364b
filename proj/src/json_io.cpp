#include "kanspec/json_io.hpp"

#include <map>
#include <stdexcept>

namespace kanspec {

namespace {

std::vector<int> ints(const json& j) { return j.get<std::vector<int>>(); }

}  // namespace

json to_json(const SimplexMap& f) { return json{{"src", f.src}, {"tgt", f.tgt}, {"values", f.values}}; }

SimplexMap simplex_map_from_json(const json& j) {
    SimplexMap f{j.at("src").get<int>(), j.at("tgt").get<int>(), ints(j.at("values"))};
    check_valid(f, "simplex_map_from_json");
    return f;
}

json to_json(const StableMorphism& f) {
    return json{{"src", f.src}, {"tgt", f.tgt}, {"faces", f.faces}, {"degens", f.degens}};
}

StableMorphism stable_morphism_from_json(const json& j) {
    StableMorphism f;
    f.src = j.at("src").get<long long>();
    f.tgt = j.at("tgt").get<long long>();
    f.faces = ints(j.at("faces"));
    f.degens = ints(j.at("degens"));
    check_valid(f, "stable_morphism_from_json");
    return f;
}

json to_json(const CollageMorphism& f) {
    return json{{"src", {{"n", f.src.n}, {"stage", f.src.stage}}},
                {"tgt", {{"n", f.tgt.n}, {"stage", f.tgt.stage}}},
                {"witness", to_json(f.witness)}};
}

CollageMorphism collage_morphism_from_json(const json& j) {
    CollageObject s{j.at("src").at("n").get<int>(), j.at("src").at("stage").get<int>()};
    CollageObject t{j.at("tgt").at("n").get<int>(), j.at("tgt").at("stage").get<int>()};
    return make_collage(s, t, simplex_map_from_json(j.at("witness")));
}

namespace {

std::vector<std::string> cell_names(const PointedSSet& X) {
    std::vector<std::string> names(X.cells.size());
    std::map<std::string, int> used;
    for (size_t c = 0; c < X.cells.size(); ++c) {
        std::string base = X.cells[c].name.empty() ? "c" + std::to_string(c) : X.cells[c].name;
        if (used.count(base)) base += "_" + std::to_string(c);
        used[base] = 1;
        names[c] = base;
    }
    return names;
}

}  // namespace

json to_json(const PointedSSet& X) {
    auto names = cell_names(X);
    json cells = json::array();
    for (size_t c = 0; c < X.cells.size(); ++c) {
        json faces = json::array();
        for (size_t i = 0; i < X.cells[c].faces.size(); ++i) {
            const DegenPair& f = X.cells[c].faces[i];
            faces.push_back(json{{"i", i}, {"word", f.word}, {"cell", names[static_cast<size_t>(f.cell)]}});
        }
        cells.push_back(json{{"id", names[c]}, {"dim", X.cells[c].dim}, {"faces", faces}});
    }
    return json{{"basepoint", names[0]}, {"cells", cells}};
}

PointedSSet pointed_sset_from_json(const json& j) {
    PointedSSet X;
    std::map<std::string, int> id_of;
    std::string bp = j.at("basepoint").get<std::string>();
    // basepoint first
    for (const json& c : j.at("cells")) {
        std::string id = c.at("id").get<std::string>();
        if (id == bp) {
            id_of[id] = 0;
            X.cells.push_back({0, {}, id});
        }
    }
    if (X.cells.empty()) throw std::invalid_argument("pointed_sset_from_json: basepoint cell missing");
    for (const json& c : j.at("cells")) {
        std::string id = c.at("id").get<std::string>();
        if (id == bp) continue;
        if (id_of.count(id)) throw std::invalid_argument("pointed_sset_from_json: duplicate id " + id);
        id_of[id] = static_cast<int>(X.cells.size());
        X.cells.push_back({c.at("dim").get<int>(), {}, id});
    }
    for (const json& c : j.at("cells")) {
        std::string id = c.at("id").get<std::string>();
        if (id == bp) continue;
        auto& cell = X.cells[static_cast<size_t>(id_of.at(id))];
        if (cell.dim == 0) continue;
        cell.faces.resize(static_cast<size_t>(cell.dim) + 1);
        std::vector<bool> seen(cell.faces.size(), false);
        for (const json& f : c.at("faces")) {
            int i = f.at("i").get<int>();
            if (i < 0 || i > cell.dim) throw std::invalid_argument("face index out of range");
            std::string tgt = f.at("cell").get<std::string>();
            if (!id_of.count(tgt)) throw std::invalid_argument("unknown face target " + tgt);
            cell.faces[static_cast<size_t>(i)] = DegenPair{ints(f.at("word")), id_of.at(tgt)};
            seen[static_cast<size_t>(i)] = true;
        }
        for (bool s : seen)
            if (!s) throw std::invalid_argument("missing face entry on cell " + id);
    }
    check_validated(X, "pointed_sset_from_json");
    return X;
}

json to_json(const PointedSSet& src, const PointedMap& m) {
    auto names = cell_names(src);
    json assign = json::array();
    for (size_t c = 0; c < m.assign.size(); ++c)
        assign.push_back(json{{"src", names[c]}, {"word", m.assign[c].word}, {"cell", m.assign[c].cell}});
    return json{{"assign", assign}};
}

PointedMap pointed_map_from_json(const PointedSSet& src, const PointedSSet& tgt, const json& j) {
    PointedMap m;
    m.assign.assign(src.cells.size(), basepoint_pair(0));
    auto names = cell_names(src);
    std::map<std::string, int> id_of;
    for (size_t c = 0; c < names.size(); ++c) id_of[names[c]] = static_cast<int>(c);
    for (const json& a : j.at("assign")) {
        int c = id_of.at(a.at("src").get<std::string>());
        DegenPair p{ints(a.at("word")), a.at("cell").get<int>()};
        if (p.cell == 0) p = basepoint_pair(src.cells[static_cast<size_t>(c)].dim);
        m.assign[static_cast<size_t>(c)] = p;
    }
    std::string why;
    if (!validate_map(src, tgt, m, &why)) throw std::invalid_argument("pointed_map_from_json: " + why);
    return m;
}

namespace {

std::vector<std::string> complex_names(const StableComplex& Z) {
    std::vector<std::string> names(Z.cells.size());
    std::map<std::string, int> used;
    for (size_t c = 0; c < Z.cells.size(); ++c) {
        std::string base = Z.cells[c].name.empty() ? "c" + std::to_string(c) : Z.cells[c].name;
        if (used.count(base)) base += "_" + std::to_string(c);
        used[base] = 1;
        names[c] = base;
    }
    return names;
}

}  // namespace

json to_json(const StableComplex& Z) {
    auto names = complex_names(Z);
    json cells = json::array();
    for (size_t c = 0; c < Z.cells.size(); ++c) {
        json faces = json::array();
        for (size_t i = 0; i < Z.cells[c].faces.size(); ++i) {
            const StablePair& f = Z.cells[c].faces[i];
            faces.push_back(json{{"i", i},
                                 {"word", f.word},
                                 {"cell", f.cell < 0 ? json("basepoint") : json(names[static_cast<size_t>(f.cell)])}});
        }
        cells.push_back(json{{"id", names[c]},
                             {"level", Z.cells[c].level},
                             {"bound", static_cast<int>(Z.cells[c].faces.size()) - 1},
                             {"faces", faces}});
    }
    return json{{"cells", cells}};
}

StableComplex stable_complex_from_json(const json& j) {
    StableComplex Z;
    std::map<std::string, int> id_of;
    for (const json& c : j.at("cells")) {
        std::string id = c.at("id").get<std::string>();
        if (id_of.count(id)) throw std::invalid_argument("stable_complex_from_json: duplicate id " + id);
        id_of[id] = static_cast<int>(Z.cells.size());
        Z.cells.push_back({c.at("level").get<long long>(), {}, id});
    }
    size_t idx = 0;
    for (const json& c : j.at("cells")) {
        auto& cell = Z.cells[idx++];
        int bound = c.at("bound").get<int>();
        cell.faces.assign(static_cast<size_t>(std::max(bound + 1, 0)), stable_basepoint(cell.level - 1));
        for (const json& f : c.at("faces")) {
            int i = f.at("i").get<int>();
            if (i < 0 || i > bound) throw std::invalid_argument("face index out of range");
            StablePair p = stable_basepoint(cell.level - 1);
            if (f.at("cell").get<std::string>() != "basepoint") {
                p.cell = id_of.at(f.at("cell").get<std::string>());
                p.word = ints(f.at("word"));
                p.level = cell.level - 1;
            }
            cell.faces[static_cast<size_t>(i)] = p;
        }
    }
    check_validated(Z, "stable_complex_from_json");
    return Z;
}

json to_json(const StableArrow& f) {
    auto names = complex_names(f.src);
    json assign = json::array();
    for (size_t c = 0; c < f.assign.size(); ++c) {
        const StablePair& p = f.assign[c];
        auto tnames = complex_names(f.tgt);
        assign.push_back(json{{"src", names[c]},
                              {"word", p.word},
                              {"cell", p.cell < 0 ? json("basepoint") : json(tnames[static_cast<size_t>(p.cell)])}});
    }
    return json{{"name", f.name}, {"src", to_json(f.src)}, {"tgt", to_json(f.tgt)}, {"assign", assign}};
}

StableArrow stable_arrow_from_json(const json& j) {
    StableArrow f;
    f.name = j.value("name", "");
    f.src = stable_complex_from_json(j.at("src"));
    f.tgt = stable_complex_from_json(j.at("tgt"));
    auto snames = complex_names(f.src);
    auto tnames = complex_names(f.tgt);
    std::map<std::string, int> sid, tid;
    for (size_t c = 0; c < snames.size(); ++c) sid[snames[c]] = static_cast<int>(c);
    for (size_t c = 0; c < tnames.size(); ++c) tid[tnames[c]] = static_cast<int>(c);
    f.assign.assign(f.src.cells.size(), stable_basepoint(0));
    for (const json& a : j.at("assign")) {
        int c = sid.at(a.at("src").get<std::string>());
        StablePair p = stable_basepoint(f.src.cells[static_cast<size_t>(c)].level);
        if (a.at("cell").get<std::string>() != "basepoint") {
            p.cell = tid.at(a.at("cell").get<std::string>());
            p.word = ints(a.at("word"));
        }
        f.assign[static_cast<size_t>(c)] = p;
    }
    std::string why;
    if (!validate_arrow(f, &why)) throw std::invalid_argument("stable_arrow_from_json: " + why);
    return f;
}

json to_json(const SequentialSpectrum& E) {
    json levels = json::array();
    for (const PointedSSet& L : E.levels) levels.push_back(to_json(L));
    json maps = json::array();
    for (size_t k = 0; k < E.maps.size(); ++k) maps.push_back(to_json(E.levels[k], E.maps[k]));
    return json{{"levels", levels}, {"maps", maps}, {"tail_at", E.tail_at()}};
}

SequentialSpectrum spectrum_from_json(const json& j) {
    SequentialSpectrum E;
    for (const json& L : j.at("levels")) E.levels.push_back(pointed_sset_from_json(L));
    if (j.contains("tail_at") && j.at("tail_at").get<int>() != E.tail_at())
        throw std::invalid_argument("spectrum_from_json: tail_at disagrees with the level count");
    size_t k = 0;
    for (const json& m : j.at("maps")) {
        if (k + 1 >= E.levels.size()) throw std::invalid_argument("spectrum_from_json: too many maps");
        OmegaResult O = omega_K(E.levels[k + 1], E.levels[k].max_dim());
        E.maps.push_back(pointed_map_from_json(E.levels[k], O.sset, m));
        ++k;
    }
    std::string why;
    if (!validate_spectrum(E, &why)) throw std::invalid_argument("spectrum_from_json: " + why);
    return E;
}

json to_json(const FiniteCategory& C) {
    json arrows = json::array();
    for (int f = 0; f < C.n_arr(); ++f)
        arrows.push_back(json{{"name", C.arrows[static_cast<size_t>(f)].name}, {"src", C.src(f)}, {"tgt", C.tgt(f)}});
    return json{{"objects", C.n_obj}, {"arrows", arrows}, {"identities", C.ident}, {"compose", C.comp_table}};
}

FiniteCategory finite_category_from_json(const json& j) {
    FiniteCategory C;
    C.n_obj = j.at("objects").get<int>();
    for (const json& a : j.at("arrows"))
        C.arrows.push_back({a.at("src").get<int>(), a.at("tgt").get<int>(), a.value("name", "")});
    C.ident = ints(j.at("identities"));
    C.comp_table = j.at("compose").get<std::vector<std::vector<int>>>();
    check_validated(C, "finite_category_from_json");
    return C;
}

json to_json(const FiniteFunctor& F) { return json{{"obj", F.obj}, {"arr", F.arr}}; }

FiniteFunctor finite_functor_from_json(const json& j) {
    FiniteFunctor F;
    F.obj = ints(j.at("obj"));
    F.arr = ints(j.at("arr"));
    return F;
}

json to_json(const CatDiagram& X) {
    json values = json::array();
    for (const FiniteCategory& C : X.value) values.push_back(to_json(C));
    json arrows = json::array();
    for (const FiniteFunctor& F : X.arrow) arrows.push_back(to_json(F));
    return json{{"shape", to_json(X.J)}, {"values", values}, {"arrows", arrows}};
}

CatDiagram cat_diagram_from_json(const json& j) {
    CatDiagram X;
    X.J = finite_category_from_json(j.at("shape"));
    for (const json& v : j.at("values")) X.value.push_back(finite_category_from_json(v));
    for (const json& a : j.at("arrows")) X.arrow.push_back(finite_functor_from_json(a));
    std::string why;
    if (!validate_cat_diagram(X, &why)) throw std::invalid_argument("cat_diagram_from_json: " + why);
    return X;
}

json to_json(const ThetaCell& T) {
    json arr = json::array();
    for (const ThetaCell& k : T.kids) arr.push_back(to_json(k));
    return arr;
}

ThetaCell theta_cell_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("theta_cell_from_json: expected a nested array");
    ThetaCell T;
    for (const json& k : j) T.kids.push_back(theta_cell_from_json(k));
    return T;
}

json to_json(const TruncSSet& X) {
    json sorts = json::array();
    for (int n = 0; n <= X.bound; ++n) {
        json elems = json::array();
        for (int x = 0; x < X.size[static_cast<size_t>(n)]; ++x)
            elems.push_back(X.names.size() > static_cast<size_t>(n) &&
                                    X.names[static_cast<size_t>(n)].size() > static_cast<size_t>(x)
                                ? X.names[static_cast<size_t>(n)][static_cast<size_t>(x)]
                                : "e" + std::to_string(x));
        sorts.push_back(json{{"cell", to_json(delta_cell(n))}, {"elems", elems}});
    }
    json actions = json::array();
    for (int n = 1; n <= X.bound; ++n)
        for (int i = 0; i <= n; ++i)
            actions.push_back(json{{"op", "face"}, {"level", n}, {"index", i}, {"map", X.face[static_cast<size_t>(n)][static_cast<size_t>(i)]}});
    for (int n = 0; n < X.bound; ++n)
        for (int jdx = 0; jdx <= n; ++jdx)
            actions.push_back(json{{"op", "degen"}, {"level", n}, {"index", jdx}, {"map", X.degen[static_cast<size_t>(n)][static_cast<size_t>(jdx)]}});
    return json{{"bound", X.bound}, {"sorts", sorts}, {"actions", actions}};
}

TruncSSet trunc_sset_from_json(const json& j) {
    TruncSSet X;
    X.bound = j.at("bound").get<int>();
    const json& sorts = j.at("sorts");
    if (static_cast<int>(sorts.size()) != X.bound + 1) throw std::invalid_argument("trunc_sset_from_json: sort count");
    for (int n = 0; n <= X.bound; ++n) {
        const json& s = sorts[static_cast<size_t>(n)];
        if (!(theta_cell_from_json(s.at("cell")) == delta_cell(n)))
            throw std::invalid_argument("trunc_sset_from_json: sorts must be the simplex cells in order");
        X.size.push_back(static_cast<int>(s.at("elems").size()));
        X.names.push_back(s.at("elems").get<std::vector<std::string>>());
    }
    X.face.resize(static_cast<size_t>(X.bound) + 1);
    X.degen.resize(static_cast<size_t>(X.bound) + 1);
    for (int n = 1; n <= X.bound; ++n) X.face[static_cast<size_t>(n)].resize(static_cast<size_t>(n) + 1);
    for (int n = 0; n < X.bound; ++n) X.degen[static_cast<size_t>(n)].resize(static_cast<size_t>(n) + 1);
    for (const json& a : j.at("actions")) {
        int n = a.at("level").get<int>();
        int i = a.at("index").get<int>();
        if (a.at("op") == "face")
            X.face.at(static_cast<size_t>(n)).at(static_cast<size_t>(i)) = ints(a.at("map"));
        else
            X.degen.at(static_cast<size_t>(n)).at(static_cast<size_t>(i)) = ints(a.at("map"));
    }
    std::string why;
    if (!validate_trunc(X, &why)) throw std::invalid_argument("trunc_sset_from_json: " + why);
    return X;
}

}  // namespace kanspec
