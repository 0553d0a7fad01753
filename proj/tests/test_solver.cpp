#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>
#include <vector>

#include "jch/operators.hpp"
#include "jch/solver.hpp"

using jch::ModelParams;
using jch::Sector;
using jch::SparseOperator;

namespace {

SparseOperator diagonal_op(std::vector<double> diag) {
    SparseOperator op;
    op.dim = diag.size();
    for (std::size_t i = 0; i < diag.size(); ++i) op.entries.push_back({i, i, diag[i]});
    return op;
}

ModelParams random_dimer_params(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(-15.0, 15.0);
    ModelParams p;
    p.omega_c = 5.0;
    p.delta = uni(rng);
    p.g = 1.0;
    p.hop = std::abs(uni(rng));
    return p;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

TEST_CASE("dense_eigh: 2x2 Jaynes-Cummings block") {
    double delta = 1.7, g = 0.6, wc = 3.0;
    SparseOperator op;
    op.dim = 2;
    op.entries = {{0, 0, wc + delta}, {0, 1, g}, {1, 1, wc}};
    auto s = jch::dense_eigh(op);
    double root = std::sqrt(delta * delta + 4 * g * g);
    CHECK(s.eigenvalues[0] == doctest::Approx(wc + delta / 2 - root / 2).epsilon(1e-13));
    CHECK(s.eigenvalues[1] == doctest::Approx(wc + delta / 2 + root / 2).epsilon(1e-13));
}

TEST_CASE("dense_eigh: diagonal matrix returns its sorted diagonal") {
    auto s = jch::dense_eigh(diagonal_op({3.0, -1.0, 2.5, 0.0}));
    std::vector<double> expected = {-1.0, 0.0, 2.5, 3.0};
    for (int i = 0; i < 4; ++i) CHECK(s.eigenvalues[i] == doctest::Approx(expected[i]));
}

TEST_CASE("dense_eigh: 3x3 fixture against characteristic-polynomial roots") {
    // [[2,1,0],[1,3,1],[0,1,4]]: det(A - x I) = -x^3 + 9x^2 - 24x + 18
    SparseOperator op;
    op.dim = 3;
    op.entries = {{0, 0, 2}, {0, 1, 1}, {1, 1, 3}, {1, 2, 1}, {2, 2, 4}};
    auto s = jch::dense_eigh(op);
    for (double x : s.eigenvalues) {
        double p = -x * x * x + 9 * x * x - 24 * x + 18;
        CHECK(std::abs(p) < 1e-10);
    }
}

TEST_CASE("dense_eigh: eigenvectors orthonormal, signs canonical") {
    Sector sector = jch::enumerate_sector(2, 2);
    ModelParams p;
    p.delta = -4.0;
    p.hop = 3.0;
    auto s = jch::dense_eigh(jch::build_hamiltonian(sector, p));
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 8; ++j) {
            double expect = i == j ? 1.0 : 0.0;
            CHECK(std::abs(dot(s.eigenvectors[i], s.eigenvectors[j]) - expect) < 1e-10);
        }
        for (double x : s.eigenvectors[i]) {
            if (std::abs(x) > 1e-12) {
                CHECK(x > 0.0);
                break;
            }
        }
    }
}

TEST_CASE("dense_eigh rejects dimensions beyond the dense limit") {
    CHECK_THROWS_AS(jch::dense_eigh(diagonal_op(std::vector<double>(10, 1.0)), 4),
                    std::invalid_argument);
}

TEST_CASE("lanczos_ground: exact minimum on an already-diagonal operator") {
    auto r = jch::lanczos_ground(diagonal_op({4.0, 1.0, -2.0, 7.0, 0.5}), 1e-12,
                                 100, 42);
    CHECK(r.energy == doctest::Approx(-2.0).epsilon(1e-11));
    CHECK(std::abs(r.vector[2]) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("lanczos_ground input validation") {
    CHECK_THROWS_AS(jch::lanczos_ground(diagonal_op({1.0}), 1e-12, 10, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(jch::lanczos_ground(diagonal_op({1.0, 2.0}), 0.0, 10, 1),
                    std::invalid_argument);
}

TEST_CASE("lanczos agrees with dense on random dimer instances") {
    Sector sector = jch::enumerate_sector(2, 2);
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 40; ++trial) {
        auto h = jch::build_hamiltonian(sector, random_dimer_params(rng));
        auto dense = jch::dense_eigh(h);
        auto lz = jch::lanczos_ground(h, 1e-12, 200, 7 + trial);
        CHECK(std::abs(lz.energy - dense.eigenvalues[0]) < 1e-10);
        // variational bound
        CHECK(lz.energy >= dense.eigenvalues[0] - 1e-10);
    }
}

TEST_CASE("lanczos matches dense on the L=4, N=4 sector") {
    Sector sector = jch::enumerate_sector(4, 4);
    ModelParams p;
    p.omega_c = 4.0;
    p.delta = -2.0;
    p.g = 1.0;
    p.hop = 1.5;
    auto h = jch::build_hamiltonian(sector, p);
    auto dense = jch::dense_eigh(h);
    auto lz = jch::lanczos_ground(h, 1e-12, 0, 99);
    CHECK(std::abs(lz.energy - dense.eigenvalues[0]) < 1e-10);
}

TEST_CASE("lanczos is deterministic for a fixed seed") {
    Sector sector = jch::enumerate_sector(2, 2);
    ModelParams p;
    p.delta = 2.0;
    p.hop = 1.0;
    auto h = jch::build_hamiltonian(sector, p);
    auto a = jch::lanczos_ground(h, 1e-12, 200, 5);
    auto b = jch::lanczos_ground(h, 1e-12, 200, 5);
    CHECK(a.energy == b.energy);
    CHECK(a.vector == b.vector);
    CHECK(a.iterations == b.iterations);
}

TEST_CASE("ground_state: Rayleigh-quotient consistency and unit norm") {
    Sector sector = jch::enumerate_sector(2, 2);
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 20; ++trial) {
        auto h = jch::build_hamiltonian(sector, random_dimer_params(rng));
        auto r = jch::ground_state(h);
        double nrm = std::sqrt(dot(r.vector, r.vector));
        CHECK(std::abs(nrm - 1.0) < 1e-12);
        double rq = dot(r.vector, h.apply(r.vector));
        CHECK(std::abs(r.energy - rq) < 1e-11 * std::max(1.0, std::abs(r.energy)));
    }
}

TEST_CASE("ground_state: unique ground state in the polaritonic insulator") {
    Sector sector = jch::enumerate_sector(2, 2);
    ModelParams p;
    p.delta = 0.0;
    p.g = 1.0;
    p.hop = 0.01;
    auto r = jch::ground_state(jch::build_hamiltonian(sector, p));
    CHECK_FALSE(r.degenerate);
    CHECK(r.degeneracy_gap > 0.01);
}

TEST_CASE("ground_state: fourfold degeneracy at g -> 0 on the A = -delta line") {
    Sector sector = jch::enumerate_sector(2, 2);
    ModelParams p;
    p.delta = -5.0;
    p.hop = 5.0;
    p.g = 0.0;
    auto r = jch::ground_state(jch::build_hamiltonian(sector, p));
    CHECK(r.degenerate);
    auto s = jch::dense_eigh(jch::build_hamiltonian(sector, p));
    int count = 0;
    for (double e : s.eigenvalues)
        if (std::abs(e - s.eigenvalues[0]) < 1e-9) ++count;
    CHECK(count == 4);
}

TEST_CASE("ground_state: A = 0 ground energy is twice the lower polariton") {
    Sector sector = jch::enumerate_sector(2, 2);
    std::mt19937_64 rng(202);
    std::uniform_real_distribution<double> uni(-12.0, 12.0);
    for (int trial = 0; trial < 25; ++trial) {
        ModelParams p;
        p.omega_c = 3.0;
        p.delta = uni(rng);
        p.g = 1.0;
        p.hop = 0.0;
        auto r = jch::ground_state(jch::build_hamiltonian(sector, p));
        double e1m = p.omega_c + p.delta / 2 -
                     std::sqrt(p.delta * p.delta + 4 * p.g * p.g) / 2;
        CHECK(std::abs(r.energy - 2 * e1m) < 1e-10);
    }
}

TEST_CASE("ground_state on the Lanczos path matches the dense path") {
    Sector sector = jch::enumerate_sector(2, 2);
    ModelParams p;
    p.delta = -7.0;
    p.hop = 4.0;
    auto h = jch::build_hamiltonian(sector, p);

    jch::SolverConfig dense_cfg;
    auto dense = jch::ground_state(h, dense_cfg);

    jch::SolverConfig lz_cfg;
    lz_cfg.dense_limit = 4;  // force the iterative path
    auto lz = jch::ground_state(h, lz_cfg);

    CHECK(std::abs(lz.energy - dense.energy) < 1e-10);
    CHECK(std::abs(lz.degeneracy_gap - dense.degeneracy_gap) < 1e-8);
    CHECK(lz.degenerate == dense.degenerate);
    CHECK(std::abs(std::abs(dot(lz.vector, dense.vector)) - 1.0) < 1e-8);
}
