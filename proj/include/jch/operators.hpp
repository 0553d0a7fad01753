// Hamiltonian and number operators as real symmetric sparse matrices
// acting on a fixed-excitation Sector.

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "jch/basis.hpp"

namespace jch {

// Model parameters (hbar = 1). The atom frequency is omega_c + delta.
struct ModelParams {
    double omega_c = 1e4;  // default keeps g / omega_a = 1e-4 at g = 1, delta = 0
    double delta = 0.0;    // omega_a - omega_c
    double g = 1.0;        // atom-cavity coupling
    double hop = 0.0;      // photon hopping strength A, >= 0
    // Undirected hopping pairs; empty means nearest-neighbor chain.
    std::vector<std::pair<std::size_t, std::size_t>> hop_graph;

    double omega_a() const { return omega_c + delta; }
};

// Real symmetric sparse matrix, upper triangle stored once (row <= col).
struct SparseOperator {
    std::size_t dim = 0;
    struct Entry {
        std::size_t row, col;
        double value;
    };
    std::vector<Entry> entries;

    // Symmetric matrix-vector product. Throws on dimension mismatch.
    std::vector<double> apply(const std::vector<double>& v) const;

    std::vector<std::vector<double>> to_dense() const;

    // Coordinate-format dump, one "row col value" line per stored entry.
    std::string to_coordinate_text() const;

    // Infinity norm of the full symmetric matrix.
    double norm_inf() const;
};

SparseOperator build_hamiltonian(const Sector& sector, const ModelParams& params);

// N_j = photon number + atomic excitation at `site` (diagonal).
SparseOperator build_number_operator(const Sector& sector, std::size_t site);

// Projector onto the excited atomic state at `site` (diagonal).
SparseOperator build_atomic_number_operator(const Sector& sector, std::size_t site);

}  // namespace jch
