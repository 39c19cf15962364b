#pragma once

#include <string>
#include <vector>

#include "kanspec/pointed_sset.hpp"
#include "kanspec/stable_complex.hpp"

namespace kanspec {

// A sequential spectrum with a suspension tail: levels E_0..E_m are explicit
// with structure maps phi_k : E_k -> omega_K(E_{k+1}); beyond the tail index
// m the levels continue as E_{k+1} = sigma_K(E_k) with unit structure maps.
// Structure maps land in the canonical omega_K complexes (cell ids as
// produced by omega_K).
struct SequentialSpectrum {
    std::vector<PointedSSet> levels;
    std::vector<PointedMap> maps;  // size levels.size() - 1

    int tail_at() const { return static_cast<int>(levels.size()) - 1; }
};

bool validate_spectrum(const SequentialSpectrum& E, std::string* why = nullptr);

// E_k for any k >= 0, suspending past the tail.
PointedSSet spectrum_level(const SequentialSpectrum& E, int k);
// The structure map phi_k : E_k -> omega_K(E_{k+1}) for any k >= 0 (unit
// isomorphisms past the tail), with its codomain.
struct LevelMap {
    PointedMap map;
    PointedSSet codomain;
};
LevelMap spectrum_structure_map(const SequentialSpectrum& E, int k);

// Phi^{[-shift, inf)}(X): levels 0..shift-1 are the point, level `shift` is
// X, tail starts there.
SequentialSpectrum suspension_spectrum(const PointedSSet& X, int shift);

// true iff every explicit structure map is an isomorphism.
bool is_omega_spectrum(const SequentialSpectrum& E);

// Spectrification: sp(E)_k = omega_K^{m-k}(E_m); the colimit of the loop
// tower stabilizes at stage m-k because the tail transitions are unit
// isomorphisms.  Returns the reflected spectrum and the levelwise unit.
struct SpectrifyResult {
    SequentialSpectrum spectrum;
    std::vector<PointedMap> unit;  // E_k -> sp(E)_k
};
SpectrifyResult spectrify(const SequentialSpectrum& E);

// levelwise isomorphism test via the given maps
bool unit_is_iso(const SequentialSpectrum& E, const SpectrifyResult& R);
// isomorphism of spectra by levelwise isomorphism search
bool spectra_isomorphic(const SequentialSpectrum& E, const SequentialSpectrum& F);

// Kan's translation to stable complexes: cells of E_m at dimension d become
// stable cells at level d - m, with the suspension tail contributing the
// face bound.
StableComplex ksp(const SequentialSpectrum& E);

// The inverse translation on locally spherical complexes: level -i of the
// spectrum has n-cells the maps out of the sphere with top level n-i, which
// is exactly the cells of Z visible at that stage.
SequentialSpectrum kps(const StableComplex& Z);

}  // namespace kanspec
