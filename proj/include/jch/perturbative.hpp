// Small-coupling picture of the dimer: closed-form g = 0 spectrum and
// regime classification, the 4x4 degenerate block at A = -Delta, and the
// comparison of its closed-form ground state with exact numerics.

#pragma once

#include <array>
#include <string>
#include <vector>

#include "jch/basis.hpp"
#include "jch/operators.hpp"

namespace jch {

enum class SmallGRegime { atomic_insulator, photonic_superfluid, degenerate_line };

std::string to_string(SmallGRegime regime);

struct LabeledEnergy {
    double energy;
    int multiplicity;
    std::string label;
};

struct SmallGSpectrum {
    std::vector<LabeledEnergy> eigenenergies;  // eight levels with multiplicities
    SmallGRegime regime;
    std::vector<double> ground_vector;  // canonical dimer basis
};

// The eight closed-form eigenenergies of the g = 0 dimer Hamiltonian and
// the regime determined by A versus -Delta. On the degenerate line the
// ground vector is the coupling-resolved combination of the four
// degenerate states.
SmallGSpectrum small_g_spectrum(const ModelParams& params);

struct DegenerateBlockResult {
    // 4x4 projection of the full Hamiltonian onto the ordered basis
    // (psi'_c1, psi_a, psi'_i1, psi'_i2), evaluated at Delta = -A.
    std::array<std::array<double, 4>, 4> block{};
    double ground_energy = 0.0;          // 2 omega_c - 2A - sqrt(3) g
    std::array<double, 4> ground_block{};  // amplitudes in the block basis
    std::vector<double> ground_vector_sector;  // 8-dim canonical basis
};

// Caller supplies A (params.hop) and g; Delta is set to -A.
DegenerateBlockResult degenerate_block(const ModelParams& params);

struct PerturbativeComparison {
    std::vector<double> exact_probs;   // per canonical basis state
    std::vector<double> approx_probs;
    double max_prob_deviation = 0.0;
    double overlap = 0.0;  // |<phi_g | psi_exact>|
    double exact_energy = 0.0;
    double approx_energy = 0.0;
};

// Exact dimer ground state at Delta = -A versus the closed-form
// degenerate-block ground state.
PerturbativeComparison compare_to_exact(const ModelParams& params);

// Named basis vectors of the dimer sector in the canonical ordering:
// psi'_c1 = (1/sqrt 2) psi_c1 - (1/2)(psi_c2 + psi_c3),
// psi'_i1 = (1/sqrt 2)(psi_i2 - psi_i4),
// psi'_i2 = (1/sqrt 2)(psi_i1 - psi_i3).
std::vector<double> delocalized_photon_pair(const Sector& sector);
std::vector<double> atomic_pair_state(const Sector& sector);
std::vector<double> mixed_antisymmetric_1(const Sector& sector);
std::vector<double> mixed_antisymmetric_2(const Sector& sector);

}  // namespace jch
