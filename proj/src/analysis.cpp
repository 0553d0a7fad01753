#include "jch/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace jch {

std::string to_string(Mobility m) {
    return m == Mobility::insulator ? "insulator" : "superfluid";
}

std::string to_string(Particle p) {
    switch (p) {
        case Particle::atomic: return "atomic";
        case Particle::photonic: return "photonic";
        case Particle::polaritonic: return "polaritonic";
    }
    return "unknown";
}

PhaseLabel classify(const VarianceReport& report, double eps_mobility,
                    double eps_particle) {
    if (report.degenerate_ground)
        throw std::invalid_argument(
            "classify: degenerate ground state, classification refused");

    PhaseLabel label;
    label.eps_mobility = eps_mobility;
    label.eps_particle = eps_particle;
    label.mobility = report.var_n1 < eps_mobility ? Mobility::insulator
                                                  : Mobility::superfluid;
    if (report.var_na1 >= eps_particle) {
        label.particle = Particle::polaritonic;
    } else {
        label.particle =
            report.mean_na1 > 0.5 ? Particle::atomic : Particle::photonic;
    }
    label.boundary_distance = std::min(std::abs(report.var_n1 - eps_mobility),
                                       std::abs(report.var_na1 - eps_particle));
    return label;
}

}  // namespace jch
