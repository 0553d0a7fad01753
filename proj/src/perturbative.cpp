#include "jch/perturbative.hpp"

#include <cmath>
#include <stdexcept>

#include "jch/solver.hpp"

namespace jch {

std::string to_string(SmallGRegime regime) {
    switch (regime) {
        case SmallGRegime::atomic_insulator: return "atomic_insulator";
        case SmallGRegime::photonic_superfluid: return "photonic_superfluid";
        case SmallGRegime::degenerate_line: return "degenerate_line";
    }
    return "unknown";
}

namespace {

std::vector<double> basis_vector(const Sector& sector, const BasisState& s) {
    std::vector<double> v(sector.dimension(), 0.0);
    v[sector.index_of(s)] = 1.0;
    return v;
}

void check_dimer(const Sector& sector) {
    if (sector.sites() != 2 || sector.excitations() != 2)
        throw std::invalid_argument("perturbative limits: L = 2, N = 2 only");
}

void add_scaled(std::vector<double>& y, double a, const std::vector<double>& x) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

}  // namespace

std::vector<double> delocalized_photon_pair(const Sector& sector) {
    check_dimer(sector);
    std::vector<double> v(sector.dimension(), 0.0);
    add_scaled(v, 1.0 / std::sqrt(2.0), basis_vector(sector, {{1, 1}, {0, 0}}));
    add_scaled(v, -0.5, basis_vector(sector, {{2, 0}, {0, 0}}));
    add_scaled(v, -0.5, basis_vector(sector, {{0, 2}, {0, 0}}));
    return v;
}

std::vector<double> atomic_pair_state(const Sector& sector) {
    check_dimer(sector);
    return basis_vector(sector, {{0, 0}, {1, 1}});
}

std::vector<double> mixed_antisymmetric_1(const Sector& sector) {
    check_dimer(sector);
    std::vector<double> v(sector.dimension(), 0.0);
    // psi_i2 = |g 0> (x) |e 1>,  psi_i4 = |g 1> (x) |e 0>
    add_scaled(v, 1.0 / std::sqrt(2.0), basis_vector(sector, {{0, 1}, {0, 1}}));
    add_scaled(v, -1.0 / std::sqrt(2.0), basis_vector(sector, {{1, 0}, {0, 1}}));
    return v;
}

std::vector<double> mixed_antisymmetric_2(const Sector& sector) {
    check_dimer(sector);
    std::vector<double> v(sector.dimension(), 0.0);
    // psi_i1 = |e 1> (x) |g 0>,  psi_i3 = |e 0> (x) |g 1>
    add_scaled(v, 1.0 / std::sqrt(2.0), basis_vector(sector, {{1, 0}, {1, 0}}));
    add_scaled(v, -1.0 / std::sqrt(2.0), basis_vector(sector, {{0, 1}, {1, 0}}));
    return v;
}

SmallGSpectrum small_g_spectrum(const ModelParams& params) {
    if (params.hop < 0.0)
        throw std::invalid_argument("small_g_spectrum: hopping must be >= 0");
    const double wc = params.omega_c, d = params.delta, A = params.hop;

    SmallGSpectrum s;
    s.eigenenergies = {
        {2 * wc - 2 * A, 1, "photonic, delocalized (psi'_c1)"},
        {2 * wc, 1, "photonic, antisymmetric pair"},
        {2 * wc + 2 * A, 1, "photonic, localized pair"},
        {2 * wc + 2 * d, 1, "atomic pair (psi_a)"},
        {2 * wc - A + d, 2, "mixed, photon delocalized (-)"},
        {2 * wc + A + d, 2, "mixed, photon delocalized (+)"},
    };

    Sector sector = enumerate_sector(2, 2);
    double scale = std::max({A, std::abs(d), params.g});
    if (std::abs(A + d) < 1e-9 * std::max(scale, 1e-300)) {
        s.regime = SmallGRegime::degenerate_line;
        // Any g > 0 resolves the fourfold degeneracy toward the
        // degenerate-block ground state.
        ModelParams p = params;
        p.delta = -A;
        s.ground_vector = degenerate_block(p).ground_vector_sector;
    } else if (A < -d) {
        s.regime = SmallGRegime::atomic_insulator;
        s.ground_vector = atomic_pair_state(sector);
    } else {
        s.regime = SmallGRegime::photonic_superfluid;
        s.ground_vector = delocalized_photon_pair(sector);
    }
    return s;
}

DegenerateBlockResult degenerate_block(const ModelParams& params) {
    Sector sector = enumerate_sector(2, 2);
    ModelParams p = params;
    p.delta = -params.hop;

    SparseOperator h = build_hamiltonian(sector, p);
    std::array<std::vector<double>, 4> basis = {
        delocalized_photon_pair(sector), atomic_pair_state(sector),
        mixed_antisymmetric_1(sector), mixed_antisymmetric_2(sector)};

    DegenerateBlockResult r;
    for (std::size_t i = 0; i < 4; ++i) {
        std::vector<double> hv = h.apply(basis[i]);
        for (std::size_t j = 0; j < 4; ++j) {
            double x = 0.0;
            for (std::size_t k = 0; k < hv.size(); ++k) x += basis[j][k] * hv[k];
            r.block[j][i] = x;
        }
    }

    // Closed form: eigenvalues of the block are 2wc - 2A + {-sqrt3 g, 0, 0,
    // +sqrt3 g}; the unique ground combination is
    // (1/sqrt3, 1/sqrt6, 1/2, 1/2) in the block basis.
    r.ground_energy = 2.0 * p.omega_c - 2.0 * p.hop - std::sqrt(3.0) * p.g;
    r.ground_block = {1.0 / std::sqrt(3.0), 1.0 / std::sqrt(6.0), 0.5, 0.5};
    r.ground_vector_sector.assign(sector.dimension(), 0.0);
    for (std::size_t i = 0; i < 4; ++i)
        add_scaled(r.ground_vector_sector, r.ground_block[i], basis[i]);
    return r;
}

PerturbativeComparison compare_to_exact(const ModelParams& params) {
    Sector sector = enumerate_sector(2, 2);
    ModelParams p = params;
    p.delta = -params.hop;

    SparseOperator h = build_hamiltonian(sector, p);
    GroundStateResult exact = ground_state(h);
    DegenerateBlockResult block = degenerate_block(params);

    PerturbativeComparison c;
    c.exact_energy = exact.energy;
    c.approx_energy = block.ground_energy;
    c.exact_probs.resize(sector.dimension());
    c.approx_probs.resize(sector.dimension());
    double ov = 0.0;
    for (std::size_t i = 0; i < sector.dimension(); ++i) {
        c.exact_probs[i] = exact.vector[i] * exact.vector[i];
        c.approx_probs[i] =
            block.ground_vector_sector[i] * block.ground_vector_sector[i];
        c.max_prob_deviation = std::max(
            c.max_prob_deviation, std::abs(c.exact_probs[i] - c.approx_probs[i]));
        ov += exact.vector[i] * block.ground_vector_sector[i];
    }
    c.overlap = std::abs(ov);
    return c;
}

}  // namespace jch
