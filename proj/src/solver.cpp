#include "jch/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace jch {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

void axpy(double alpha, const std::vector<double>& x, std::vector<double>& y) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

void scale(std::vector<double>& x, double alpha) {
    for (double& v : x) v *= alpha;
}

// First nonzero component positive.
void canonicalize_sign(std::vector<double>& v) {
    for (double x : v) {
        if (std::abs(x) > 1e-12) {
            if (x < 0.0) scale(v, -1.0);
            return;
        }
    }
}

double off_diagonal_frobenius(const std::vector<std::vector<double>>& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) s += 2.0 * a[i][j] * a[i][j];
    return std::sqrt(s);
}

double frobenius(const std::vector<std::vector<double>>& a) {
    double s = 0.0;
    for (const auto& row : a)
        for (double x : row) s += x * x;
    return std::sqrt(s);
}

// Cyclic Jacobi on a dense symmetric matrix; rotations accumulated in vecs
// (rows of vecs are the eigenvectors on exit, unsorted).
void jacobi(std::vector<std::vector<double>>& a,
            std::vector<std::vector<double>>& vecs) {
    const std::size_t n = a.size();
    vecs.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) vecs[i][i] = 1.0;
    if (n < 2) return;

    const double fnorm = frobenius(a);
    const double target = std::max(1e-13 * fnorm,
                                   std::numeric_limits<double>::min());
    const std::size_t max_sweeps = 100;

    for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
        if (off_diagonal_frobenius(a) <= target) return;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double apq = a[p][q];
                if (apq == 0.0) continue;
                double app = a[p][p], aqq = a[q][q];
                double tau = (aqq - app) / (2.0 * apq);
                double t = (tau >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double vpk = vecs[p][k], vqk = vecs[q][k];
                    vecs[p][k] = c * vpk - s * vqk;
                    vecs[q][k] = s * vpk + c * vqk;
                }
            }
        }
    }
}

SpectrumResult dense_eigh_matrix(std::vector<std::vector<double>> a) {
    const std::size_t n = a.size();
    std::vector<std::vector<double>> vecs;
    jacobi(a, vecs);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a[i][i] < a[j][j]; });

    SpectrumResult res;
    res.eigenvalues.reserve(n);
    res.eigenvectors.reserve(n);
    for (std::size_t k : order) {
        res.eigenvalues.push_back(a[k][k]);
        canonicalize_sign(vecs[k]);
        res.eigenvectors.push_back(std::move(vecs[k]));
    }
    return res;
}

struct TridiagEig {
    double value;
    std::vector<double> vector;
};

// Lowest eigenpair of the symmetric tridiagonal (alpha, beta).
TridiagEig tridiag_lowest(const std::vector<double>& alpha,
                          const std::vector<double>& beta) {
    const std::size_t m = alpha.size();
    std::vector<std::vector<double>> t(m, std::vector<double>(m, 0.0));
    for (std::size_t i = 0; i < m; ++i) {
        t[i][i] = alpha[i];
        if (i + 1 < m) t[i][i + 1] = t[i + 1][i] = beta[i];
    }
    SpectrumResult s = dense_eigh_matrix(std::move(t));
    return {s.eigenvalues.front(), s.eigenvectors.front()};
}

std::vector<double> random_unit_vector(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> v(n);
    for (double& x : v) x = gauss(rng);
    double nv = norm(v);
    scale(v, 1.0 / nv);
    return v;
}

// Apply with rank-one deflation: A + shift |w><w|.
std::vector<double> apply_deflated(const SparseOperator& op,
                                   const std::vector<double>& w, double shift,
                                   const std::vector<double>& v) {
    std::vector<double> out = op.apply(v);
    axpy(shift * dot(w, v), w, out);
    return out;
}

GroundStateResult lanczos_lowest(
    const SparseOperator& op, double tol, std::size_t max_iter,
    std::uint64_t seed, const std::vector<double>* deflate, double shift,
    double* ritz_width_out) {
    const std::size_t n = op.dim;
    if (n < 2) throw std::invalid_argument("lanczos_ground: dim must be >= 2");
    if (tol <= 0.0) throw std::invalid_argument("lanczos_ground: tol must be > 0");
    if (max_iter == 0) max_iter = 10 * n;

    const double scale_norm = std::max(1.0, op.norm_inf());
    const double eff_tol = tol * scale_norm;
    const double breakdown_tol = 1e-14 * scale_norm;

    std::mt19937_64 rng(seed);
    std::vector<std::vector<double>> basis;
    std::vector<double> alpha, beta;

    auto matvec = [&](const std::vector<double>& v) {
        return deflate ? apply_deflated(op, *deflate, shift, v) : op.apply(v);
    };

    std::vector<double> v = random_unit_vector(n, rng);
    if (deflate) {
        axpy(-dot(*deflate, v), *deflate, v);
        scale(v, 1.0 / norm(v));
    }
    basis.push_back(v);

    GroundStateResult best;
    best.residual = std::numeric_limits<double>::infinity();

    for (std::size_t iter = 0; iter < max_iter && basis.size() <= n; ++iter) {
        std::vector<double> w = matvec(basis.back());
        double a = dot(w, basis.back());
        alpha.push_back(a);

        axpy(-a, basis.back(), w);
        if (basis.size() >= 2) axpy(-beta.back(), basis[basis.size() - 2], w);
        // Full reorthogonalization, repeated once.
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& u : basis) axpy(-dot(u, w), u, w);
            if (deflate) axpy(-dot(*deflate, w), *deflate, w);
        }

        TridiagEig te = tridiag_lowest(alpha, beta);
        double b = norm(w);
        double est_residual = b * std::abs(te.vector.back());

        auto finalize = [&](bool force) -> bool {
            if (!force && est_residual > eff_tol) return false;
            std::vector<double> x(n, 0.0);
            for (std::size_t k = 0; k < basis.size(); ++k)
                axpy(te.vector[k], basis[k], x);
            scale(x, 1.0 / norm(x));
            std::vector<double> hx = matvec(x);
            std::vector<double> r = hx;
            axpy(-te.value, x, r);
            double res = norm(r);
            if (res < best.residual) {
                best.energy = te.value;
                best.vector = std::move(x);
                best.residual = res;
            }
            return best.residual <= eff_tol;
        };

        best.iterations = iter + 1;
        if (b <= breakdown_tol || basis.size() == n) {
            bool done = finalize(true);
            if (!done && basis.size() < n) {
                // Krylov breakdown before convergence: continue in the
                // orthogonal complement with a fresh random direction.
                std::vector<double> fresh = random_unit_vector(n, rng);
                for (const auto& u : basis) axpy(-dot(u, fresh), u, fresh);
                if (deflate) axpy(-dot(*deflate, fresh), *deflate, fresh);
                double nf = norm(fresh);
                if (nf < 1e-10) break;  // subspace exhausted
                scale(fresh, 1.0 / nf);
                beta.push_back(0.0);
                basis.push_back(std::move(fresh));
                continue;
            }
            break;
        }
        if (finalize(false)) break;
        scale(w, 1.0 / b);
        beta.push_back(b);
        basis.push_back(std::move(w));
    }

    if (ritz_width_out && !alpha.empty()) {
        std::vector<std::vector<double>> t(alpha.size(),
                                           std::vector<double>(alpha.size(), 0.0));
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            t[i][i] = alpha[i];
            if (i + 1 < alpha.size()) t[i][i + 1] = t[i + 1][i] = beta[i];
        }
        SpectrumResult s = dense_eigh_matrix(std::move(t));
        *ritz_width_out = s.eigenvalues.back() - s.eigenvalues.front();
    }

    if (best.vector.empty())
        throw std::runtime_error("lanczos_ground: no Ritz pair produced");
    canonicalize_sign(best.vector);
    return best;
}

}  // namespace

SpectrumResult dense_eigh(const SparseOperator& op, std::size_t dense_limit) {
    if (op.dim > dense_limit)
        throw std::invalid_argument("dense_eigh: dimension exceeds dense limit");
    return dense_eigh_matrix(op.to_dense());
}

GroundStateResult lanczos_ground(const SparseOperator& op, double tol,
                                 std::size_t max_iter, std::uint64_t seed) {
    return lanczos_lowest(op, tol, max_iter, seed, nullptr, 0.0, nullptr);
}

GroundStateResult ground_state(const SparseOperator& op, const SolverConfig& cfg) {
    GroundStateResult res;
    double gap = std::numeric_limits<double>::infinity();
    double width = 0.0;

    if (op.dim <= cfg.dense_limit) {
        SpectrumResult s = dense_eigh(op, cfg.dense_limit);
        res.energy = s.eigenvalues.front();
        res.vector = s.eigenvectors.front();
        if (op.dim >= 2) {
            gap = s.eigenvalues[1] - s.eigenvalues[0];
            width = s.eigenvalues.back() - s.eigenvalues.front();
        }
        std::vector<double> r = op.apply(res.vector);
        axpy(-res.energy, res.vector, r);
        res.residual = norm(r);
    } else {
        double ritz_width = 0.0;
        res = lanczos_lowest(op, cfg.tol, cfg.max_iter, cfg.seed, nullptr, 0.0,
                             &ritz_width);
        // Deflated second pass for the gap: push the ground vector up by a
        // shift well above the spectrum.
        double shift = 4.0 * std::max(1.0, op.norm_inf());
        GroundStateResult excited =
            lanczos_lowest(op, cfg.tol, cfg.max_iter, cfg.seed + 1, &res.vector,
                           shift, nullptr);
        gap = excited.energy - res.energy;
        width = std::max(ritz_width, excited.energy - res.energy);
    }

    res.degeneracy_gap = gap;
    double threshold =
        cfg.degeneracy_rel_threshold * std::max(width, std::numeric_limits<double>::min());
    res.degenerate = std::isfinite(gap) && gap < threshold;
    return res;
}

}  // namespace jch
