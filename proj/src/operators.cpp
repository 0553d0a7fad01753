#include "jch/operators.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace jch {

std::vector<double> SparseOperator::apply(const std::vector<double>& v) const {
    if (v.size() != dim)
        throw std::invalid_argument("SparseOperator::apply: dimension mismatch");
    std::vector<double> out(dim, 0.0);
    for (const auto& e : entries) {
        out[e.row] += e.value * v[e.col];
        if (e.row != e.col) out[e.col] += e.value * v[e.row];
    }
    return out;
}

std::vector<std::vector<double>> SparseOperator::to_dense() const {
    std::vector<std::vector<double>> m(dim, std::vector<double>(dim, 0.0));
    for (const auto& e : entries) {
        m[e.row][e.col] += e.value;
        if (e.row != e.col) m[e.col][e.row] += e.value;
    }
    return m;
}

std::string SparseOperator::to_coordinate_text() const {
    std::ostringstream out;
    out.precision(17);
    for (const auto& e : entries)
        out << e.row << ' ' << e.col << ' ' << e.value << '\n';
    return out.str();
}

double SparseOperator::norm_inf() const {
    std::vector<double> row_sum(dim, 0.0);
    for (const auto& e : entries) {
        row_sum[e.row] += std::abs(e.value);
        if (e.row != e.col) row_sum[e.col] += std::abs(e.value);
    }
    double m = 0.0;
    for (double r : row_sum) m = std::max(m, r);
    return m;
}

namespace {

class EntryAccumulator {
public:
    void add(std::size_t i, std::size_t j, double value) {
        if (value == 0.0) return;
        if (i > j) std::swap(i, j);
        map_[{i, j}] += value;
    }

    SparseOperator build(std::size_t dim) const {
        SparseOperator op;
        op.dim = dim;
        op.entries.reserve(map_.size());
        for (const auto& [key, value] : map_)
            op.entries.push_back({key.first, key.second, value});
        return op;
    }

private:
    std::map<std::pair<std::size_t, std::size_t>, double> map_;
};

std::vector<std::pair<std::size_t, std::size_t>> resolve_hop_graph(
    const ModelParams& params, std::size_t sites) {
    auto pairs = params.hop_graph;
    if (pairs.empty()) {
        for (std::size_t i = 0; i + 1 < sites; ++i) pairs.emplace_back(i, i + 1);
    }
    for (const auto& [a, b] : pairs) {
        if (a == b) throw std::invalid_argument("hop_graph: self-loop");
        if (a >= sites || b >= sites)
            throw std::invalid_argument("hop_graph: site out of range");
    }
    return pairs;
}

}  // namespace

SparseOperator build_hamiltonian(const Sector& sector, const ModelParams& params) {
    if (sector.dimension() == 0)
        throw std::invalid_argument("build_hamiltonian: empty sector");
    if (params.hop < 0.0)
        throw std::invalid_argument("build_hamiltonian: negative hopping");

    const double omega_a = params.omega_a();
    const auto hop_pairs = resolve_hop_graph(params, sector.sites());

    EntryAccumulator acc;
    for (std::size_t i = 0; i < sector.dimension(); ++i) {
        const BasisState& s = sector.state(i);

        double diag = 0.0;
        for (std::size_t j = 0; j < sector.sites(); ++j)
            diag += params.omega_c * s.photons[j] + omega_a * s.atoms[j];
        acc.add(i, i, diag);

        // Atom-field coupling: |e, n> <-> |g, n+1> with element g sqrt(n+1).
        for (std::size_t j = 0; j < sector.sites(); ++j) {
            if (s.atoms[j] != 1) continue;
            BasisState t = s;
            t.atoms[j] = 0;
            t.photons[j] += 1;
            // t > s in canonical order (photon count at site j increased), so k > i.
            std::size_t k = sector.index_of(t);
            acc.add(i, k, params.g * std::sqrt(double(s.photons[j] + 1)));
        }

        // Photon hopping: move one photon src -> dst, element A sqrt(n_src (n_dst+1)).
        for (const auto& [a, b] : hop_pairs) {
            for (auto [src, dst] : {std::pair{a, b}, std::pair{b, a}}) {
                if (s.photons[src] == 0) continue;
                BasisState t = s;
                t.photons[src] -= 1;
                t.photons[dst] += 1;
                std::size_t k = sector.index_of(t);
                if (k <= i) continue;  // the reverse transfer adds this entry
                double value =
                    params.hop *
                    std::sqrt(double(s.photons[src]) * double(t.photons[dst]));
                acc.add(i, k, value);
            }
        }
    }
    return acc.build(sector.dimension());
}

SparseOperator build_number_operator(const Sector& sector, std::size_t site) {
    if (site >= sector.sites())
        throw std::invalid_argument("build_number_operator: site out of range");
    EntryAccumulator acc;
    for (std::size_t i = 0; i < sector.dimension(); ++i) {
        const BasisState& s = sector.state(i);
        acc.add(i, i, double(s.photons[site] + s.atoms[site]));
    }
    return acc.build(sector.dimension());
}

SparseOperator build_atomic_number_operator(const Sector& sector, std::size_t site) {
    if (site >= sector.sites())
        throw std::invalid_argument("build_atomic_number_operator: site out of range");
    EntryAccumulator acc;
    for (std::size_t i = 0; i < sector.dimension(); ++i)
        acc.add(i, i, double(sector.state(i).atoms[site]));
    return acc.build(sector.dimension());
}

}  // namespace jch
