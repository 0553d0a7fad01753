// Number-conserving atom-photon product basis for a chain of L cavities,
// each holding one two-level atom and one photon mode, at fixed total
// excitation number.

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace jch {

// One atom-photon configuration. photons[i] is the Fock occupation of
// cavity i, atoms[i] is 0 (ground) or 1 (excited).
struct BasisState {
    std::vector<int> photons;
    std::vector<int> atoms;

    int total_excitations() const;
    std::size_t sites() const { return photons.size(); }

    friend auto operator<=>(const BasisState&, const BasisState&) = default;
};

// All configurations of `sites` cavities with total excitation number
// `excitations`. States are ordered lexicographically by
// (photons[0], atoms[0], photons[1], atoms[1], ...), which fixes the
// matrix representation and eigenvector sign conventions.
class Sector {
public:
    Sector(std::size_t sites, int excitations);

    std::size_t sites() const { return sites_; }
    int excitations() const { return excitations_; }
    std::size_t dimension() const { return states_.size(); }
    const std::vector<BasisState>& states() const { return states_; }
    const BasisState& state(std::size_t k) const { return states_[k]; }

    // Position of `state` in the canonical ordering. Throws
    // std::invalid_argument if the state does not belong to this sector.
    std::size_t index_of(const BasisState& state) const;

    // JSON array of {"photons": [...], "atoms": [...]} in canonical order.
    std::string to_json() const;

private:
    std::size_t sites_;
    int excitations_;
    std::vector<BasisState> states_;
    std::map<BasisState, std::size_t> index_;
};

Sector enumerate_sector(std::size_t sites, int excitations);

}  // namespace jch
