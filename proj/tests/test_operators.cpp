#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "jch/operators.hpp"
#include "jch/solver.hpp"

using jch::BasisState;
using jch::ModelParams;
using jch::Sector;
using jch::SparseOperator;

namespace {

const double kSqrt2 = std::sqrt(2.0);

// Hand-coded dense dimer Hamiltonian, written term by term in the
// canonical state order:
//   0 |g0,e1>  1 |g0,g2>  2 |e0,e0>  3 |e0,g1>
//   4 |g1,e0>  5 |g1,g1>  6 |e1,g0>  7 |g2,g0>
std::vector<std::vector<double>> dense_dimer_oracle(const ModelParams& p) {
    const double wc = p.omega_c, wa = p.omega_a(), g = p.g, A = p.hop;
    std::vector<std::vector<double>> h(8, std::vector<double>(8, 0.0));

    const double diag[8] = {wc + wa, 2 * wc, 2 * wa, wc + wa,
                            wc + wa, 2 * wc, wc + wa, 2 * wc};
    for (int i = 0; i < 8; ++i) h[i][i] = diag[i];

    auto sym = [&](int i, int j, double v) { h[i][j] = h[j][i] = v; };
    // atom-field: |e,n> <-> |g,n+1> with g sqrt(n+1), per site
    sym(0, 1, g * kSqrt2);  // |g0,e1> <-> |g0,g2>
    sym(2, 4, g);           // |e0,e0> <-> |g1,e0>
    sym(2, 3, g);           // |e0,e0> <-> |e0,g1>
    sym(3, 5, g);           // |e0,g1> <-> |g1,g1>
    sym(4, 5, g);           // |g1,e0> <-> |g1,g1>
    sym(6, 7, g * kSqrt2);  // |e1,g0> <-> |g2,g0>
    // hopping: single photon transfer, atoms unchanged
    sym(1, 5, A * kSqrt2);  // |g0,g2> <-> |g1,g1>
    sym(5, 7, A * kSqrt2);  // |g1,g1> <-> |g2,g0>
    sym(0, 4, A);           // |g0,e1> <-> |g1,e0>
    sym(3, 6, A);           // |e0,g1> <-> |e1,g0>
    return h;
}

std::vector<double> random_unit(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    std::vector<double> v(n);
    double s = 0.0;
    for (double& x : v) {
        x = gauss(rng);
        s += x * x;
    }
    for (double& x : v) x /= std::sqrt(s);
    return v;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

TEST_CASE("dimer Hamiltonian matches the hand-coded dense oracle") {
    Sector sector = jch::enumerate_sector(2, 2);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> uni(-10.0, 10.0);
    for (int trial = 0; trial < 20; ++trial) {
        ModelParams p;
        p.omega_c = uni(rng);
        p.delta = uni(rng);
        p.g = std::abs(uni(rng)) + 0.1;
        p.hop = std::abs(uni(rng));
        auto dense = jch::build_hamiltonian(sector, p).to_dense();
        auto oracle = dense_dimer_oracle(p);
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                CHECK(dense[i][j] == doctest::Approx(oracle[i][j]).epsilon(1e-14));
    }
}

TEST_CASE("decoupled dimer (g = 0, A = 0) spectrum is read off the diagonal") {
    Sector sector = jch::enumerate_sector(2, 2);
    ModelParams p;
    p.omega_c = 3.0;
    p.delta = -0.7;
    p.g = 0.0;
    p.hop = 0.0;
    auto s = jch::dense_eigh(jch::build_hamiltonian(sector, p));
    std::vector<double> expected = {2 * p.omega_c,     2 * p.omega_c,
                                    2 * p.omega_c,     2 * p.omega_c + 2 * p.delta,
                                    2 * p.omega_c + p.delta, 2 * p.omega_c + p.delta,
                                    2 * p.omega_c + p.delta, 2 * p.omega_c + p.delta};
    std::sort(expected.begin(), expected.end());
    REQUIRE(s.eigenvalues.size() == 8);
    for (int i = 0; i < 8; ++i)
        CHECK(s.eigenvalues[i] == doctest::Approx(expected[i]).epsilon(1e-12));
}

TEST_CASE("g = 0 spectrum with hopping matches the closed-form list") {
    Sector sector = jch::enumerate_sector(2, 2);
    ModelParams p;
    p.omega_c = 1.5;
    p.delta = -2.3;
    p.g = 0.0;
    p.hop = 0.9;
    auto s = jch::dense_eigh(jch::build_hamiltonian(sector, p));
    const double wc = p.omega_c, d = p.delta, A = p.hop;
    std::vector<double> expected = {2 * wc - 2 * A, 2 * wc,         2 * wc + 2 * A,
                                    2 * wc + 2 * d, 2 * wc - A + d, 2 * wc - A + d,
                                    2 * wc + A + d, 2 * wc + A + d};
    std::sort(expected.begin(), expected.end());
    for (int i = 0; i < 8; ++i)
        CHECK(s.eigenvalues[i] == doctest::Approx(expected[i]).epsilon(1e-12));
}

TEST_CASE("single cavity, one excitation: Jaynes-Cummings doublet") {
    Sector sector = jch::enumerate_sector(1, 1);
    REQUIRE(sector.dimension() == 2);
    ModelParams p;
    p.omega_c = 2.0;
    p.delta = 0.8;
    p.g = 0.5;
    auto s = jch::dense_eigh(jch::build_hamiltonian(sector, p));
    double root = std::sqrt(p.delta * p.delta + 4 * p.g * p.g);
    CHECK(s.eigenvalues[0] ==
          doctest::Approx(p.omega_c + p.delta / 2 - root / 2).epsilon(1e-13));
    CHECK(s.eigenvalues[1] ==
          doctest::Approx(p.omega_c + p.delta / 2 + root / 2).epsilon(1e-13));
}

TEST_CASE("number operators sum to N times the identity") {
    Sector sector = jch::enumerate_sector(3, 2);
    std::vector<double> total(sector.dimension(), 0.0);
    for (std::size_t site = 0; site < 3; ++site) {
        auto op = jch::build_number_operator(sector, site);
        for (const auto& e : op.entries) {
            REQUIRE(e.row == e.col);
            total[e.row] += e.value;
        }
    }
    for (double t : total) CHECK(t == doctest::Approx(2.0));
}

TEST_CASE("number operator eigenvalues on named dimer states") {
    Sector sector = jch::enumerate_sector(2, 2);
    auto n1 = jch::build_number_operator(sector, 0).to_dense();
    std::size_t psi_i1 = sector.index_of(BasisState{{1, 0}, {1, 0}});
    std::size_t psi_c3 = sector.index_of(BasisState{{0, 2}, {0, 0}});
    CHECK(n1[psi_i1][psi_i1] == 2.0);
    CHECK(n1[psi_c3][psi_c3] == 0.0);
}

TEST_CASE("atomic number operator is a projector") {
    Sector sector = jch::enumerate_sector(2, 2);
    auto na = jch::build_atomic_number_operator(sector, 0);
    for (const auto& e : na.entries) {
        REQUIRE(e.row == e.col);
        CHECK(e.value * e.value == e.value);
    }
    std::size_t psi_a = sector.index_of(BasisState{{0, 0}, {1, 1}});
    std::size_t psi_c1 = sector.index_of(BasisState{{1, 1}, {0, 0}});
    auto dense = na.to_dense();
    CHECK(dense[psi_a][psi_a] == 1.0);
    CHECK(dense[psi_c1][psi_c1] == 0.0);
}

TEST_CASE("site index out of range is rejected") {
    Sector sector = jch::enumerate_sector(2, 2);
    CHECK_THROWS_AS(jch::build_number_operator(sector, 2), std::invalid_argument);
    CHECK_THROWS_AS(jch::build_atomic_number_operator(sector, 5),
                    std::invalid_argument);
}

TEST_CASE("apply: identity and diagonal behavior") {
    Sector sector = jch::enumerate_sector(2, 2);
    auto n1 = jch::build_number_operator(sector, 0);
    std::vector<double> e5(sector.dimension(), 0.0);
    e5[5] = 1.0;
    auto out = n1.apply(e5);
    double expected = sector.state(5).photons[0] + sector.state(5).atoms[0];
    CHECK(out[5] == doctest::Approx(expected));
    CHECK_THROWS_AS(n1.apply(std::vector<double>(3, 0.0)), std::invalid_argument);
}

TEST_CASE("apply is symmetric: <v|Hw> == <w|Hv> for random vectors") {
    Sector sector = jch::enumerate_sector(3, 3);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> uni(-5.0, 5.0);
    for (int trial = 0; trial < 100; ++trial) {
        ModelParams p;
        p.omega_c = uni(rng);
        p.delta = uni(rng);
        p.g = std::abs(uni(rng)) + 0.1;
        p.hop = std::abs(uni(rng));
        auto h = jch::build_hamiltonian(sector, p);
        auto v = random_unit(h.dim, rng);
        auto w = random_unit(h.dim, rng);
        double lhs = dot(v, h.apply(w));
        double rhs = dot(w, h.apply(v));
        CHECK(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, h.norm_inf()));
    }
}

TEST_CASE("Hamiltonian commutes with the total number operator") {
    Sector sector = jch::enumerate_sector(2, 2);
    ModelParams p;
    p.delta = -3.0;
    p.hop = 2.0;
    auto h = jch::build_hamiltonian(sector, p);

    SparseOperator ntot{sector.dimension(), {}};
    for (std::size_t site = 0; site < 2; ++site)
        for (const auto& e : jch::build_number_operator(sector, site).entries)
            ntot.entries.push_back(e);

    std::mt19937_64 rng(3);
    auto v = random_unit(h.dim, rng);
    auto hn = h.apply(ntot.apply(v));
    auto nh = ntot.apply(h.apply(v));
    double err = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) err += (hn[i] - nh[i]) * (hn[i] - nh[i]);
    CHECK(std::sqrt(err) < 1e-12 * h.norm_inf());
}

TEST_CASE("omega_c shift moves every eigenvalue by N * shift") {
    Sector sector = jch::enumerate_sector(2, 2);
    ModelParams p;
    p.omega_c = 2.0;
    p.delta = 1.3;
    p.g = 0.7;
    p.hop = 0.4;
    auto base = jch::dense_eigh(jch::build_hamiltonian(sector, p));
    double shift = 5.7;
    p.omega_c += shift;
    auto shifted = jch::dense_eigh(jch::build_hamiltonian(sector, p));
    for (std::size_t i = 0; i < base.eigenvalues.size(); ++i) {
        CHECK(shifted.eigenvalues[i] ==
              doctest::Approx(base.eigenvalues[i] + 2 * shift).epsilon(1e-11));
        // eigenvectors unchanged up to sign convention (spectrum nondegenerate)
        double ov = std::abs(dot(base.eigenvectors[i], shifted.eigenvectors[i]));
        CHECK(ov == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("hop graph validation") {
    Sector sector = jch::enumerate_sector(2, 2);
    ModelParams p;
    p.hop = 1.0;
    p.hop_graph = {{0, 0}};
    CHECK_THROWS_AS(jch::build_hamiltonian(sector, p), std::invalid_argument);
    p.hop_graph = {{0, 3}};
    CHECK_THROWS_AS(jch::build_hamiltonian(sector, p), std::invalid_argument);
}

TEST_CASE("coordinate dump has one upper-triangle entry per line") {
    Sector sector = jch::enumerate_sector(2, 2);
    ModelParams p;
    p.g = 1.0;
    p.hop = 0.5;
    auto h = jch::build_hamiltonian(sector, p);
    std::string text = h.to_coordinate_text();
    std::size_t lines = std::count(text.begin(), text.end(), '\n');
    CHECK(lines == h.entries.size());
    for (const auto& e : h.entries) CHECK(e.row <= e.col);
}
