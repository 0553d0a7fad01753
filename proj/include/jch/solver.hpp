// Symmetric eigensolvers: cyclic Jacobi for small dimensions, Lanczos with
// full reorthogonalization for large ones. The dense path doubles as the
// oracle for the iterative one.

#pragma once

#include <cstdint>
#include <vector>

#include "jch/operators.hpp"

namespace jch {

struct SolverConfig {
    std::size_t dense_limit = 512;
    double tol = 1e-12;
    std::size_t max_iter = 0;  // 0 means 10 * dim
    std::uint64_t seed = 20080521;
    // Gap below threshold * spectral width flags a degenerate ground level.
    double degeneracy_rel_threshold = 1e-9;
};

struct GroundStateResult {
    double energy = 0.0;
    std::vector<double> vector;
    bool degenerate = false;
    double degeneracy_gap = 0.0;  // E1 - E0
    std::size_t iterations = 0;
    double residual = 0.0;  // ||H v - E v||
};

struct SpectrumResult {
    std::vector<double> eigenvalues;               // ascending
    std::vector<std::vector<double>> eigenvectors; // eigenvectors[k] pairs with eigenvalues[k]
};

// Full spectrum by cyclic Jacobi rotations. Throws if dim exceeds the
// dense limit. Eigenvectors are sign-canonicalized: first nonzero
// component positive.
SpectrumResult dense_eigh(const SparseOperator& op,
                          std::size_t dense_limit = 512);

// Lowest eigenpair by Lanczos iteration, deterministic for a given seed.
GroundStateResult lanczos_ground(const SparseOperator& op, double tol,
                                 std::size_t max_iter, std::uint64_t seed);

// Dispatches dense vs Lanczos by dimension and fills the degeneracy flag
// from the second eigenvalue (deflated second pass on the Lanczos path).
GroundStateResult ground_state(const SparseOperator& op,
                               const SolverConfig& cfg = {});

}  // namespace jch
