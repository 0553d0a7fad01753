#include "jch/sweep.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "jch/analysis.hpp"
#include "jch/observables.hpp"
#include "jch/operators.hpp"
#include "jch/solver.hpp"

namespace jch {

double AxisSpec::value(std::size_t k) const {
    if (steps == 1) return min;
    return min + (max - min) * double(k) / double(steps - 1);
}

SweepSpec::SweepSpec()
    : workers(default_workers()),
      eps_mobility(kDefaultEpsMobility),
      eps_particle(kDefaultEpsParticle) {}

void SweepSpec::validate() const {
    auto check_axis = [](const AxisSpec& a, const char* name) {
        if (a.steps < 1)
            throw std::invalid_argument(std::string(name) + ": steps must be >= 1");
        if (a.min > a.max)
            throw std::invalid_argument(std::string(name) + ": min > max");
    };
    check_axis(delta_over_g, "delta_over_g");
    check_axis(hop_over_g, "hop_over_g");
    if (hop_over_g.min < 0.0)
        throw std::invalid_argument("hop_over_g: must be nonnegative");
    if (g_over_omega_a <= 0.0)
        throw std::invalid_argument("g_over_omega_a: must be positive");
    if (workers < 1) throw std::invalid_argument("workers: must be >= 1");
}

std::size_t default_workers() {
    if (const char* env = std::getenv("JCH_WORKERS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return std::size_t(v);
    }
    return 1;
}

namespace {

SweepRecord evaluate_point(const Sector& sector, const SweepSpec& spec,
                           double delta_over_g, double a_over_g) {
    SweepRecord rec;
    rec.delta_over_g = delta_over_g;
    rec.a_over_g = a_over_g;
    try {
        // Work in units of g.
        ModelParams params;
        params.g = 1.0;
        params.delta = delta_over_g;
        params.hop = a_over_g;
        params.omega_c = params.g / spec.g_over_omega_a - params.delta;

        SparseOperator h = build_hamiltonian(sector, params);
        GroundStateResult ground = ground_state(h);
        VarianceReport vr = variances(ground.vector, sector, ground.degenerate);

        double energy = ground.energy;
        if (!spec.absolute_energies)
            energy -= sector.excitations() * params.omega_c;
        rec.energy_over_g = energy;
        rec.dn1 = vr.var_n1;
        rec.dna1 = vr.var_na1;
        rec.product = vr.product;
        rec.photon_var = vr.var_photon1;
        rec.mean_na1 = vr.mean_na1;
        rec.degenerate = ground.degenerate;
        if (ground.degenerate) {
            rec.label_mobility = "degenerate";
            rec.label_particle = "degenerate";
        } else {
            PhaseLabel label = classify(vr, spec.eps_mobility, spec.eps_particle);
            rec.label_mobility = to_string(label.mobility);
            rec.label_particle = to_string(label.particle);
        }
    } catch (const std::exception&) {
        rec.error = true;
        rec.label_mobility = "error";
        rec.label_particle = "error";
    }
    return rec;
}

}  // namespace

std::vector<SweepRecord> run_sweep(const SweepSpec& spec) {
    spec.validate();
    const Sector sector = enumerate_sector(2, 2);
    const std::size_t nd = spec.delta_over_g.steps;
    const std::size_t na = spec.hop_over_g.steps;
    const std::size_t total = nd * na;

    std::vector<SweepRecord> records(total);
    auto work = [&](std::size_t worker, std::size_t workers) {
        for (std::size_t idx = worker; idx < total; idx += workers) {
            std::size_t di = idx / na, ai = idx % na;
            records[idx] = evaluate_point(sector, spec, spec.delta_over_g.value(di),
                                          spec.hop_over_g.value(ai));
        }
    };

    std::size_t workers = std::min(spec.workers, total);
    if (workers <= 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w)
            threads.emplace_back(work, w, workers);
        for (auto& t : threads) t.join();
    }
    return records;
}

namespace {

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

}  // namespace

void write_csv(const std::vector<SweepRecord>& records, std::ostream& out) {
    out << "delta_over_g,a_over_g,energy_over_g,dn1,dna1,product,photon_var,"
           "mean_na1,label_mobility,label_particle,degenerate\r\n";
    for (const auto& r : records) {
        out << fmt(r.delta_over_g) << ',' << fmt(r.a_over_g) << ','
            << fmt(r.energy_over_g) << ',' << fmt(r.dn1) << ',' << fmt(r.dna1)
            << ',' << fmt(r.product) << ',' << fmt(r.photon_var) << ','
            << fmt(r.mean_na1) << ',' << r.label_mobility << ','
            << r.label_particle << ',' << (r.degenerate ? "true" : "false")
            << "\r\n";
    }
}

void write_jsonl(const std::vector<SweepRecord>& records, std::ostream& out) {
    for (const auto& r : records) {
        nlohmann::json j{{"delta_over_g", r.delta_over_g},
                         {"a_over_g", r.a_over_g},
                         {"energy_over_g", r.energy_over_g},
                         {"dn1", r.dn1},
                         {"dna1", r.dna1},
                         {"product", r.product},
                         {"photon_var", r.photon_var},
                         {"mean_na1", r.mean_na1},
                         {"label_mobility", r.label_mobility},
                         {"label_particle", r.label_particle},
                         {"degenerate", r.degenerate},
                         {"error", r.error}};
        out << j.dump() << '\n';
    }
}

}  // namespace jch
