// Variance-based order parameters of a dimer state: total excitation
// number variance, atomic excitation variance, and their product.

#pragma once

#include <vector>

#include "jch/basis.hpp"

namespace jch {

struct VarianceReport {
    double mean_n1 = 0.0;
    double var_n1 = 0.0;    // total excitation number variance at site 1
    double mean_na1 = 0.0;
    double var_na1 = 0.0;   // atomic excitation variance at site 1
    double product = 0.0;   // var_n1 * var_na1
    double var_photon1 = 0.0;  // photon number variance (not plotted in refs)
    bool degenerate_ground = false;
};

// Expectation values are diagonal in the canonical basis. Throws if the
// input norm deviates from 1 by more than 1e-8.
VarianceReport variances(const std::vector<double>& state, const Sector& sector,
                         bool degenerate_ground = false);

}  // namespace jch
