#include "kanspec/spectrum.hpp"

#include <algorithm>
#include <stdexcept>

namespace kanspec {

namespace {

int spectrum_max_dim(const SequentialSpectrum& E) {
    int d = 0;
    for (const auto& L : E.levels) d = std::max(d, L.max_dim());
    return d;
}

}  // namespace

bool validate_spectrum(const SequentialSpectrum& E, std::string* why) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    if (E.levels.empty()) return fail("a spectrum needs at least one explicit level");
    if (E.maps.size() + 1 != E.levels.size()) return fail("structure map count mismatch");
    for (size_t k = 0; k < E.levels.size(); ++k) {
        std::string inner;
        if (!validate(E.levels[k], &inner)) return fail("level " + std::to_string(k) + ": " + inner);
    }
    for (size_t k = 0; k < E.maps.size(); ++k) {
        OmegaResult O = omega_K(E.levels[k + 1], E.levels[k].max_dim());
        std::string inner;
        if (!validate_map(E.levels[k], O.sset, E.maps[k], &inner))
            return fail("structure map " + std::to_string(k) + ": " + inner);
    }
    return true;
}

PointedSSet spectrum_level(const SequentialSpectrum& E, int k) {
    int m = E.tail_at();
    if (k <= m) return E.levels[static_cast<size_t>(k)];
    PointedSSet X = E.levels.back();
    for (int t = m; t < k; ++t) X = sigma_K(X).sset;
    return X;
}

LevelMap spectrum_structure_map(const SequentialSpectrum& E, int k) {
    int m = E.tail_at();
    if (k < m) {
        OmegaResult O = omega_K(E.levels[static_cast<size_t>(k) + 1], E.levels[static_cast<size_t>(k)].max_dim());
        return {E.maps[static_cast<size_t>(k)], O.sset};
    }
    PointedSSet X = spectrum_level(E, k);
    SigmaResult SX = sigma_K(X);
    OmegaResult OSX = omega_K(SX.sset, X.max_dim());
    return {unit_eta(X, SX, OSX), OSX.sset};
}

SequentialSpectrum suspension_spectrum(const PointedSSet& X, int shift) {
    if (shift < 0) throw std::invalid_argument("suspension_spectrum: shift >= 0");
    check_validated(X, "suspension_spectrum");
    SequentialSpectrum E;
    for (int k = 0; k < shift; ++k) E.levels.push_back(point());
    E.levels.push_back(X);
    for (int k = 0; k < shift; ++k) {
        PointedMap m;
        m.assign = {basepoint_pair(0)};
        E.maps.push_back(m);
    }
    return E;
}

bool is_omega_spectrum(const SequentialSpectrum& E) {
    for (size_t k = 0; k < E.maps.size(); ++k) {
        OmegaResult O = omega_K(E.levels[k + 1], E.levels[k].max_dim());
        if (!is_iso(E.levels[k], O.sset, E.maps[k])) return false;
    }
    return true;
}

SpectrifyResult spectrify(const SequentialSpectrum& E) {
    int m = E.tail_at();
    int U = spectrum_max_dim(E);

    // loop tower of the top level: power[t] = omega_K^t(E_m)
    std::vector<PointedSSet> power;
    power.push_back(E.levels.back());
    for (int t = 1; t <= m; ++t) power.push_back(omega_K(power.back(), U).sset);

    SpectrifyResult R;
    for (int k = 0; k <= m; ++k) R.spectrum.levels.push_back(power[static_cast<size_t>(m - k)]);
    for (int k = 0; k < m; ++k) {
        // sp(E)_k literally equals omega_K(sp(E)_{k+1}); the structure map is
        // the identity assignment
        R.spectrum.maps.push_back(identity_map(R.spectrum.levels[static_cast<size_t>(k)]));
    }

    // unit: u_m = id, u_k = omega(u_{k+1}) o phi_k
    std::vector<PointedMap> unit(static_cast<size_t>(m) + 1);
    unit[static_cast<size_t>(m)] = identity_map(E.levels.back());
    for (int k = m - 1; k >= 0; --k) {
        OmegaResult OEk1 = omega_K(E.levels[static_cast<size_t>(k) + 1], U);
        OmegaResult OLk1 = omega_K(R.spectrum.levels[static_cast<size_t>(k) + 1], U);
        PointedMap omega_u = omega_map(E.levels[static_cast<size_t>(k) + 1], R.spectrum.levels[static_cast<size_t>(k) + 1],
                                       unit[static_cast<size_t>(k) + 1], OEk1, OLk1);
        unit[static_cast<size_t>(k)] = compose_maps(E.levels[static_cast<size_t>(k)], E.maps[static_cast<size_t>(k)],
                                                    OEk1.sset, omega_u, OLk1.sset);
    }
    R.unit = std::move(unit);
    return R;
}

bool unit_is_iso(const SequentialSpectrum& E, const SpectrifyResult& R) {
    for (size_t k = 0; k < E.levels.size(); ++k)
        if (!is_iso(E.levels[k], R.spectrum.levels[k], R.unit[k])) return false;
    return true;
}

bool spectra_isomorphic(const SequentialSpectrum& E, const SequentialSpectrum& F) {
    if (E.levels.size() != F.levels.size()) return false;
    for (size_t k = 0; k < E.levels.size(); ++k)
        if (!isomorphic(E.levels[k], F.levels[k])) return false;
    return true;
}

StableComplex ksp(const SequentialSpectrum& E) {
    int m = E.tail_at();
    const PointedSSet& Em = E.levels.back();
    StableComplex Z;
    std::vector<int> remap(Em.cells.size(), -1);
    for (size_t c = 1; c < Em.cells.size(); ++c) {
        remap[c] = static_cast<int>(Z.cells.size());
        Z.cells.push_back({static_cast<long long>(Em.cells[c].dim) - m, {}, Em.cells[c].name});
    }
    for (size_t c = 1; c < Em.cells.size(); ++c) {
        const auto& cell = Em.cells[c];
        auto& out = Z.cells[static_cast<size_t>(remap[c])];
        for (const DegenPair& f : cell.faces) {
            if (is_basepoint(f))
                out.faces.push_back(stable_basepoint(out.level - 1));
            else
                out.faces.push_back(StablePair{f.word, remap[static_cast<size_t>(f.cell)], out.level - 1});
        }
    }
    normalize_bounds(Z);
    return Z;
}

SequentialSpectrum kps(const StableComplex& Z) {
    if (!is_loc_sph(Z)) throw std::invalid_argument("kps: input not locally spherical");

    if (Z.cells.empty()) return suspension_spectrum(point(), 0);

    long long m = 0;
    for (size_t c = 0; c < Z.cells.size(); ++c) {
        long long lvl = Z.cells[c].level;
        m = std::max(m, -lvl);
        m = std::max(m, static_cast<long long>(Z.effective_bound(static_cast<int>(c))) - lvl);
    }

    SequentialSpectrum E;
    // per stage: cell -> sset cell id (0 = invisible)
    std::vector<std::vector<int>> stage_id(static_cast<size_t>(m) + 1);
    for (long long i = 0; i <= m; ++i) {
        PointedSSet X = point();
        std::vector<int>& ids = stage_id[static_cast<size_t>(i)];
        ids.assign(Z.cells.size(), 0);
        for (size_t c = 0; c < Z.cells.size(); ++c) {
            long long dim = Z.cells[c].level + i;
            if (dim < 0) continue;
            if (Z.effective_bound(static_cast<int>(c)) > dim) continue;
            ids[c] = static_cast<int>(X.cells.size());
            X.cells.push_back({static_cast<int>(dim), {}, Z.cells[c].name});
        }
        for (size_t c = 0; c < Z.cells.size(); ++c) {
            if (ids[c] == 0) continue;
            long long dim = Z.cells[c].level + i;
            if (dim == 0) continue;
            auto& out = X.cells[static_cast<size_t>(ids[c])];
            StablePair top{{}, static_cast<int>(c), Z.cells[c].level};
            for (int j = 0; j <= dim; ++j) {
                StablePair f = apply_face(Z, top, j);
                if (f.cell < 0) {
                    out.faces.push_back(basepoint_pair(static_cast<int>(dim) - 1));
                } else {
                    int tgt = ids[static_cast<size_t>(f.cell)];
                    if (tgt == 0) throw std::logic_error("kps: face of a visible cell is invisible");
                    out.faces.push_back(DegenPair{f.word, tgt});
                }
            }
        }
        E.levels.push_back(std::move(X));
    }

    for (long long i = 0; i < m; ++i) {
        const PointedSSet& Xi = E.levels[static_cast<size_t>(i)];
        const PointedSSet& Xi1 = E.levels[static_cast<size_t>(i) + 1];
        OmegaResult O = omega_K(Xi1, Xi.max_dim());
        PointedMap phi;
        phi.assign.assign(Xi.cells.size(), basepoint_pair(0));
        for (size_t c = 0; c < Z.cells.size(); ++c) {
            int a = stage_id[static_cast<size_t>(i)][c];
            if (a == 0) continue;
            int b = stage_id[static_cast<size_t>(i) + 1][c];
            int dim = Xi.cells[static_cast<size_t>(a)].dim;
            phi.assign[static_cast<size_t>(a)] = O.from_ambient[static_cast<size_t>(dim)].at(DegenPair{{}, b});
        }
        E.maps.push_back(std::move(phi));
    }
    return E;
}

}  // namespace kanspec
