#include "jch/observables.hpp"

#include <cmath>
#include <stdexcept>

namespace jch {

VarianceReport variances(const std::vector<double>& state, const Sector& sector,
                         bool degenerate_ground) {
    if (state.size() != sector.dimension())
        throw std::invalid_argument("variances: state dimension mismatch");

    double norm2 = 0.0;
    for (double x : state) norm2 += x * x;
    if (std::abs(std::sqrt(norm2) - 1.0) > 1e-8)
        throw std::invalid_argument("variances: state is not normalized");

    double mn = 0.0, mn2 = 0.0, ma = 0.0, mp = 0.0, mp2 = 0.0;
    for (std::size_t i = 0; i < state.size(); ++i) {
        const BasisState& s = sector.state(i);
        double p = state[i] * state[i];
        double n1 = s.photons[0] + s.atoms[0];
        mn += p * n1;
        mn2 += p * n1 * n1;
        ma += p * s.atoms[0];
        mp += p * s.photons[0];
        mp2 += p * s.photons[0] * s.photons[0];
    }

    VarianceReport r;
    r.mean_n1 = mn;
    r.var_n1 = std::max(0.0, mn2 - mn * mn);
    r.mean_na1 = ma;
    r.var_na1 = std::max(0.0, ma - ma * ma);  // projector: <NA1^2> = <NA1>
    r.product = r.var_n1 * r.var_na1;
    r.var_photon1 = std::max(0.0, mp2 - mp * mp);
    r.degenerate_ground = degenerate_ground;
    return r;
}

}  // namespace jch
