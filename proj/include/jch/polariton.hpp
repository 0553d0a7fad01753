// Single-cavity polariton eigenstates and the decomposition of dimer
// states into product-polariton subspace probabilities.

#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "jch/basis.hpp"

namespace jch {

enum class Branch { zero, minus, plus };

// Polariton with n excitations. For n >= 1 the state lives in the
// two-dimensional block span{|e, n-1>, |g, n>}; the zero branch is the
// bare ground state |g, 0> with energy 0.
struct PolaritonState {
    int n = 0;
    Branch branch = Branch::zero;
    double amp_excited = 0.0;  // coefficient on |e, n-1>
    double amp_ground = 1.0;   // coefficient on |g, n>
    double energy = 0.0;       // relative to |g, 0> at omega_c
};

// Mixing angle theta_n = atan2(2 g sqrt(n), delta), in (0, pi).
double mixing_angle(int n, double delta, double g);

PolaritonState polariton(int n, Branch branch, double omega_c, double delta,
                         double g);

struct ProductLabel {
    int n = 0;
    Branch branch = Branch::zero;
};

// Unit vector for |pol_1> (x) |pol_2> in the sector's canonical basis.
// The pair's total excitation must match the sector.
std::vector<double> product_polariton_vector(const Sector& sector,
                                             ProductLabel first,
                                             ProductLabel second, double delta,
                                             double g);

// The eight product-polariton states of the two-cavity, two-excitation
// sector, grouped into the five degenerate subspaces in ascending energy
// order: {1-1-}, {2-0, 0 2-}, {1-1+, 1+1-}, {2+0, 0 2+}, {1+1+}.
struct DimerProductBasis {
    static constexpr std::size_t kProducts = 8;
    static constexpr std::size_t kSubspaces = 5;
    std::array<std::pair<ProductLabel, ProductLabel>, kProducts> labels;
    std::array<std::size_t, kProducts> subspace_of;
    std::array<std::vector<double>, kProducts> vectors;
    std::array<std::string, kProducts> names;
};

DimerProductBasis dimer_product_basis(const Sector& sector, double delta,
                                      double g);

struct PolaritonDecomposition {
    std::array<double, 5> subspace_probs{};
    std::array<double, 8> product_probs{};
    std::array<std::string, 8> product_names;
    // Probabilities by excitation character of the atom-photon basis
    // states: purely photonic, purely atomic, mixed.
    double photonic = 0.0;
    double atomic = 0.0;
    double mixed = 0.0;
};

// Defined for the dimer sector (L = 2, N = 2) only; throws otherwise.
PolaritonDecomposition decompose(const std::vector<double>& state,
                                 const Sector& sector, double delta, double g);

}  // namespace jch
