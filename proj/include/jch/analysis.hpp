// Ground-state classification by mobility (insulator vs superfluid) and
// particle character (atomic, photonic, polaritonic).

#pragma once

#include <optional>
#include <string>

#include "jch/observables.hpp"

namespace jch {

enum class Mobility { insulator, superfluid };
enum class Particle { atomic, photonic, polaritonic };

std::string to_string(Mobility m);
std::string to_string(Particle p);

struct PhaseLabel {
    Mobility mobility;
    Particle particle;
    double eps_mobility;
    double eps_particle;
    // Minimum distance of either variance to its threshold; small values
    // mean the point sits near a crossover.
    double boundary_distance;
};

inline constexpr double kDefaultEpsMobility = 0.05;
inline constexpr double kDefaultEpsParticle = 0.05;

// Throws std::invalid_argument when the report carries the degenerate
// ground flag: classification needs a well-defined state.
PhaseLabel classify(const VarianceReport& report,
                    double eps_mobility = kDefaultEpsMobility,
                    double eps_particle = kDefaultEpsParticle);

}  // namespace jch
