#include "jch/polariton.hpp"

#include <cmath>
#include <stdexcept>

namespace jch {

double mixing_angle(int n, double delta, double g) {
    if (n < 1) throw std::invalid_argument("mixing_angle: n must be >= 1");
    if (g <= 0.0) throw std::invalid_argument("mixing_angle: g must be > 0");
    return std::atan2(2.0 * g * std::sqrt(double(n)), delta);
}

PolaritonState polariton(int n, Branch branch, double omega_c, double delta,
                         double g) {
    PolaritonState p;
    p.n = n;
    p.branch = branch;
    if (branch == Branch::zero) {
        if (n != 0)
            throw std::invalid_argument("polariton: zero branch requires n = 0");
        return p;
    }
    if (n < 1)
        throw std::invalid_argument("polariton: +/- branch requires n >= 1");

    double theta = mixing_angle(n, delta, g);
    double root = std::sqrt(delta * delta + 4.0 * n * g * g);
    if (branch == Branch::minus) {
        p.amp_excited = std::sin(theta / 2.0);
        p.amp_ground = -std::cos(theta / 2.0);
        p.energy = n * omega_c + delta / 2.0 - root / 2.0;
    } else {
        p.amp_excited = std::cos(theta / 2.0);
        p.amp_ground = std::sin(theta / 2.0);
        p.energy = n * omega_c + delta / 2.0 + root / 2.0;
    }
    return p;
}

namespace {

struct SiteComponent {
    int photons;
    int atom;
    double amp;
};

std::vector<SiteComponent> site_components(ProductLabel label, double delta,
                                           double g) {
    if (label.branch == Branch::zero) {
        if (label.n != 0)
            throw std::invalid_argument("product_polariton_vector: zero branch with n != 0");
        return {{0, 0, 1.0}};
    }
    PolaritonState p = polariton(label.n, label.branch, 0.0, delta, g);
    return {{label.n - 1, 1, p.amp_excited}, {label.n, 0, p.amp_ground}};
}

}  // namespace

std::vector<double> product_polariton_vector(const Sector& sector,
                                             ProductLabel first,
                                             ProductLabel second, double delta,
                                             double g) {
    if (sector.sites() != 2)
        throw std::invalid_argument("product_polariton_vector: two-site sectors only");
    if (first.n + second.n != sector.excitations())
        throw std::invalid_argument(
            "product_polariton_vector: pair excitation does not match sector");

    std::vector<double> v(sector.dimension(), 0.0);
    for (const auto& c1 : site_components(first, delta, g)) {
        for (const auto& c2 : site_components(second, delta, g)) {
            BasisState s{{c1.photons, c2.photons}, {c1.atom, c2.atom}};
            v[sector.index_of(s)] = c1.amp * c2.amp;
        }
    }
    return v;
}

DimerProductBasis dimer_product_basis(const Sector& sector, double delta,
                                      double g) {
    if (sector.sites() != 2 || sector.excitations() != 2)
        throw std::invalid_argument("dimer_product_basis: L = 2, N = 2 only");

    const ProductLabel vac{0, Branch::zero};
    const ProductLabel one_m{1, Branch::minus}, one_p{1, Branch::plus};
    const ProductLabel two_m{2, Branch::minus}, two_p{2, Branch::plus};

    DimerProductBasis b;
    b.labels = {{{one_m, one_m},
                 {two_m, vac},
                 {vac, two_m},
                 {one_m, one_p},
                 {one_p, one_m},
                 {two_p, vac},
                 {vac, two_p},
                 {one_p, one_p}}};
    b.subspace_of = {0, 1, 1, 2, 2, 3, 3, 4};
    b.names = {"|1-,1->", "|2-,0>", "|0,2->", "|1-,1+>",
               "|1+,1->", "|2+,0>", "|0,2+>", "|1+,1+>"};
    for (std::size_t k = 0; k < DimerProductBasis::kProducts; ++k)
        b.vectors[k] = product_polariton_vector(sector, b.labels[k].first,
                                                b.labels[k].second, delta, g);
    return b;
}

PolaritonDecomposition decompose(const std::vector<double>& state,
                                 const Sector& sector, double delta, double g) {
    if (sector.sites() != 2 || sector.excitations() != 2)
        throw std::invalid_argument("decompose: defined for the dimer sector only");
    if (state.size() != sector.dimension())
        throw std::invalid_argument("decompose: state dimension mismatch");

    DimerProductBasis basis = dimer_product_basis(sector, delta, g);
    PolaritonDecomposition d;
    d.product_names = basis.names;
    for (std::size_t k = 0; k < DimerProductBasis::kProducts; ++k) {
        double overlap = 0.0;
        for (std::size_t i = 0; i < state.size(); ++i)
            overlap += basis.vectors[k][i] * state[i];
        d.product_probs[k] = overlap * overlap;
        d.subspace_probs[basis.subspace_of[k]] += d.product_probs[k];
    }

    for (std::size_t i = 0; i < sector.dimension(); ++i) {
        const BasisState& s = sector.state(i);
        int excited_atoms = s.atoms[0] + s.atoms[1];
        double p = state[i] * state[i];
        if (excited_atoms == 0) d.photonic += p;
        else if (excited_atoms == sector.excitations()) d.atomic += p;
        else d.mixed += p;
    }
    return d;
}

}  // namespace jch
