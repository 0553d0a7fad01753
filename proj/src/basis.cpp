#include "jch/basis.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace jch {

int BasisState::total_excitations() const {
    int total = std::accumulate(photons.begin(), photons.end(), 0);
    return std::accumulate(atoms.begin(), atoms.end(), total);
}

namespace {

void enumerate_rec(std::size_t site, std::size_t sites, int remaining,
                   std::vector<int>& photons, std::vector<int>& atoms,
                   std::vector<BasisState>& out) {
    if (site == sites) {
        if (remaining == 0) out.push_back({photons, atoms});
        return;
    }
    for (int p = 0; p <= remaining; ++p) {
        for (int a = 0; a <= 1; ++a) {
            if (p + a > remaining) continue;
            photons[site] = p;
            atoms[site] = a;
            enumerate_rec(site + 1, sites, remaining - p - a, photons, atoms, out);
        }
    }
    photons[site] = 0;
    atoms[site] = 0;
}

// Lexicographic in (photons[0], atoms[0], photons[1], atoms[1], ...).
bool canonical_less(const BasisState& a, const BasisState& b) {
    for (std::size_t i = 0; i < a.sites(); ++i) {
        if (a.photons[i] != b.photons[i]) return a.photons[i] < b.photons[i];
        if (a.atoms[i] != b.atoms[i]) return a.atoms[i] < b.atoms[i];
    }
    return false;
}

}  // namespace

Sector::Sector(std::size_t sites, int excitations)
    : sites_(sites), excitations_(excitations) {
    if (sites == 0) throw std::invalid_argument("Sector: need at least one site");
    if (excitations < 0) throw std::invalid_argument("Sector: negative excitation number");

    std::vector<int> photons(sites, 0), atoms(sites, 0);
    enumerate_rec(0, sites, excitations, photons, atoms, states_);
    std::sort(states_.begin(), states_.end(), canonical_less);

    for (std::size_t k = 0; k < states_.size(); ++k) index_[states_[k]] = k;
}

std::size_t Sector::index_of(const BasisState& state) const {
    auto it = index_.find(state);
    if (it == index_.end())
        throw std::invalid_argument("Sector::index_of: state not in sector");
    return it->second;
}

std::string Sector::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : states_)
        arr.push_back({{"photons", s.photons}, {"atoms", s.atoms}});
    return arr.dump();
}

Sector enumerate_sector(std::size_t sites, int excitations) {
    return Sector(sites, excitations);
}

}  // namespace jch
