// Parallel parameter-sweep engine over the (Delta/g, A/g) plane for the
// two-cavity, two-excitation system.

#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace jch {

struct AxisSpec {
    double min = 0.0;
    double max = 0.0;
    std::size_t steps = 1;  // number of grid points

    double value(std::size_t k) const;
};

struct SweepSpec {
    AxisSpec delta_over_g{-20.0, 20.0, 101};
    AxisSpec hop_over_g{0.0, 20.0, 101};
    double g_over_omega_a = 1e-4;
    bool absolute_energies = false;
    std::size_t workers = 1;
    double eps_mobility;
    double eps_particle;

    SweepSpec();
    void validate() const;
};

struct SweepRecord {
    double delta_over_g = 0.0;
    double a_over_g = 0.0;
    double energy_over_g = 0.0;
    double dn1 = 0.0;
    double dna1 = 0.0;
    double product = 0.0;
    double photon_var = 0.0;
    double mean_na1 = 0.0;
    std::string label_mobility;  // "degenerate" or "error" when not classified
    std::string label_particle;
    bool degenerate = false;
    bool error = false;
};

// Row-major grid, Delta outer; records are returned in that order
// regardless of worker count. Per-point solver failures are recorded
// in-row, they do not abort the sweep.
std::vector<SweepRecord> run_sweep(const SweepSpec& spec);

// Fixed column order, header always emitted, 12 significant digits.
void write_csv(const std::vector<SweepRecord>& records, std::ostream& out);
void write_jsonl(const std::vector<SweepRecord>& records, std::ostream& out);

// Default worker count: JCH_WORKERS environment variable, else 1.
std::size_t default_workers();

}  // namespace jch
