// Command-line front end: basis dumps, single-point reports, polariton
// decompositions, spectra, parameter sweeps, and the degenerate-line
// perturbative limit. All energies are in units of g unless noted.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "jch/analysis.hpp"
#include "jch/basis.hpp"
#include "jch/observables.hpp"
#include "jch/operators.hpp"
#include "jch/perturbative.hpp"
#include "jch/polariton.hpp"
#include "jch/solver.hpp"
#include "jch/sweep.hpp"

namespace {

using nlohmann::json;

struct PointOptions {
    double delta = 0.0;
    double hop = 0.0;
    double g_over_omega_a = 1e-4;
    bool absolute_energies = false;
    double eps_mobility = jch::kDefaultEpsMobility;
    double eps_particle = jch::kDefaultEpsParticle;
};

struct SolverOptions {
    std::size_t dense_limit = 512;
    double tol = 1e-12;
    std::size_t max_iter = 0;
    std::uint64_t seed = 20080521;

    jch::SolverConfig to_config() const {
        jch::SolverConfig cfg;
        cfg.dense_limit = dense_limit;
        cfg.tol = tol;
        cfg.max_iter = max_iter;
        cfg.seed = seed;
        return cfg;
    }
};

void add_solver_flags(CLI::App* app, SolverOptions& opt) {
    app->add_option("--dense-limit", opt.dense_limit,
                    "Largest dimension solved densely");
    app->add_option("--tol", opt.tol, "Iterative solver residual tolerance");
    app->add_option("--max-iter", opt.max_iter,
                    "Lanczos iteration cap (0 = 10 * dim)");
    app->add_option("--seed", opt.seed, "Lanczos start-vector seed");
}

jch::ModelParams point_params(const PointOptions& opt) {
    jch::ModelParams p;
    p.g = 1.0;
    p.delta = opt.delta;
    p.hop = opt.hop;
    p.omega_c = p.g / opt.g_over_omega_a - p.delta;
    return p;
}

json params_json(const jch::ModelParams& p) {
    return {{"omega_c", p.omega_c}, {"omega_a", p.omega_a()},
            {"delta", p.delta},     {"g", p.g},
            {"hop", p.hop}};
}

json decomposition_json(const jch::PolaritonDecomposition& d) {
    json products = json::object();
    for (std::size_t k = 0; k < d.product_probs.size(); ++k)
        products[d.product_names[k]] = d.product_probs[k];
    return {{"subspace_probs", d.subspace_probs},
            {"product_probs", products},
            {"character_probs",
             {{"photonic", d.photonic}, {"atomic", d.atomic}, {"mixed", d.mixed}}}};
}

int run_point(const PointOptions& opt, const SolverOptions& solver) {
    jch::Sector sector = jch::enumerate_sector(2, 2);
    jch::ModelParams params = point_params(opt);
    jch::SparseOperator h = jch::build_hamiltonian(sector, params);
    jch::GroundStateResult gs = jch::ground_state(h, solver.to_config());
    jch::VarianceReport vr = jch::variances(gs.vector, sector, gs.degenerate);

    double energy = gs.energy;
    if (!opt.absolute_energies) energy -= sector.excitations() * params.omega_c;

    json out{{"params", params_json(params)},
             {"energy_over_g", energy},
             {"degenerate", gs.degenerate},
             {"degeneracy_gap", gs.degeneracy_gap},
             {"variances",
              {{"mean_n1", vr.mean_n1},
               {"dn1", vr.var_n1},
               {"mean_na1", vr.mean_na1},
               {"dna1", vr.var_na1},
               {"product", vr.product},
               {"photon_var", vr.var_photon1}}},
             {"decomposition",
              decomposition_json(
                  jch::decompose(gs.vector, sector, params.delta, params.g))}};
    if (gs.degenerate) {
        out["label"] = "degenerate";
    } else {
        jch::PhaseLabel label =
            jch::classify(vr, opt.eps_mobility, opt.eps_particle);
        out["label"] = {{"mobility", jch::to_string(label.mobility)},
                        {"particle", jch::to_string(label.particle)},
                        {"boundary_distance", label.boundary_distance}};
    }
    std::cout << out.dump(2) << '\n';
    return 0;
}

int run_decompose(const PointOptions& opt, const SolverOptions& solver) {
    jch::Sector sector = jch::enumerate_sector(2, 2);
    jch::ModelParams params = point_params(opt);
    jch::SparseOperator h = jch::build_hamiltonian(sector, params);
    jch::GroundStateResult gs = jch::ground_state(h, solver.to_config());

    json out = decomposition_json(
        jch::decompose(gs.vector, sector, params.delta, params.g));
    out["params"] = params_json(params);
    out["degenerate"] = gs.degenerate;
    std::cout << out.dump(2) << '\n';
    return 0;
}

int run_spectrum(const PointOptions& opt, std::size_t sites, int excitations,
                 const SolverOptions& solver) {
    jch::Sector sector = jch::enumerate_sector(sites, excitations);
    jch::ModelParams params = point_params(opt);
    jch::SparseOperator h = jch::build_hamiltonian(sector, params);
    jch::SpectrumResult s = jch::dense_eigh(h, solver.dense_limit);

    double offset =
        opt.absolute_energies ? 0.0 : sector.excitations() * params.omega_c;
    json values = json::array();
    for (double e : s.eigenvalues) values.push_back(e - offset);
    json out{{"params", params_json(params)},
             {"dimension", sector.dimension()},
             {"eigenvalues_over_g", values}};
    std::cout << out.dump(2) << '\n';
    return 0;
}

int run_degenerate_limit(double hop, double g, double omega_c) {
    jch::ModelParams params;
    params.g = g;
    params.hop = hop;
    params.delta = -hop;
    params.omega_c = omega_c;

    jch::DegenerateBlockResult block = jch::degenerate_block(params);
    jch::PerturbativeComparison cmp = jch::compare_to_exact(params);

    json block_rows = json::array();
    for (const auto& row : block.block) block_rows.push_back(row);
    json out{{"params", params_json(params)},
             {"block", block_rows},
             {"block_basis", {"psi'_c1", "psi_a", "psi'_i1", "psi'_i2"}},
             {"ground_energy", block.ground_energy},
             {"ground_block", block.ground_block},
             {"ground_vector_sector", block.ground_vector_sector},
             {"comparison",
              {{"exact_energy", cmp.exact_energy},
               {"approx_energy", cmp.approx_energy},
               {"exact_probs", cmp.exact_probs},
               {"approx_probs", cmp.approx_probs},
               {"max_prob_deviation", cmp.max_prob_deviation},
               {"overlap", cmp.overlap}}}};
    std::cout << out.dump(2) << '\n';
    return 0;
}

int run_sweep_cmd(const jch::SweepSpec& spec, const std::string& output,
                  const std::string& format) {
    std::vector<jch::SweepRecord> records = jch::run_sweep(spec);

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (output != "-") {
        file.open(output, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open output file: " << output << '\n';
            return 1;
        }
        out = &file;
    }
    if (format == "csv") jch::write_csv(records, *out);
    else jch::write_jsonl(records, *out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-cavity Jaynes-Cummings-Hubbard ground-state explorer"};
    app.require_subcommand(1);

    // basis
    std::size_t basis_sites = 2;
    int basis_excitations = 2;
    CLI::App* basis = app.add_subcommand(
        "basis", "Dump the number-conserving basis as JSON");
    basis->add_option("--sites", basis_sites, "Number of cavities");
    basis->add_option("--excitations", basis_excitations,
                      "Total excitation number");
    basis->set_config("--config");

    // shared point-style options
    auto add_point_flags = [](CLI::App* cmd, PointOptions& opt) {
        cmd->add_option("--delta", opt.delta, "Detuning in units of g");
        cmd->add_option("--hop", opt.hop, "Hopping strength A in units of g")
            ->check(CLI::NonNegativeNumber);
        cmd->add_option("--g-over-omega-a", opt.g_over_omega_a,
                        "Sets the absolute energy scale")
            ->check(CLI::PositiveNumber);
        cmd->add_flag("--absolute-energies", opt.absolute_energies,
                      "Report energies without the N * omega_c offset");
        cmd->set_config("--config");
    };

    PointOptions point_opt;
    SolverOptions point_solver;
    CLI::App* point = app.add_subcommand(
        "point", "Ground-state report at one (delta, hop) point");
    add_point_flags(point, point_opt);
    point->add_option("--eps-mobility", point_opt.eps_mobility,
                      "Insulator/superfluid variance threshold");
    point->add_option("--eps-particle", point_opt.eps_particle,
                      "Polaritonic-character variance threshold");
    add_solver_flags(point, point_solver);

    PointOptions dec_opt;
    SolverOptions dec_solver;
    CLI::App* dec = app.add_subcommand(
        "decompose", "Polariton decomposition of the ground state");
    add_point_flags(dec, dec_opt);
    add_solver_flags(dec, dec_solver);

    PointOptions spec_opt;
    SolverOptions spec_solver;
    std::size_t spec_sites = 2;
    int spec_excitations = 2;
    CLI::App* spectrum =
        app.add_subcommand("spectrum", "Full dense spectrum of a sector");
    add_point_flags(spectrum, spec_opt);
    spectrum->add_option("--sites", spec_sites, "Number of cavities");
    spectrum->add_option("--excitations", spec_excitations,
                         "Total excitation number");
    add_solver_flags(spectrum, spec_solver);

    jch::SweepSpec sweep_spec;
    std::string sweep_output = "-";
    std::string sweep_format = "csv";
    CLI::App* sweep = app.add_subcommand(
        "sweep", "Grid sweep over (delta/g, A/g) with CSV or JSON-lines output");
    sweep->add_option("--delta-min", sweep_spec.delta_over_g.min, "Delta/g minimum");
    sweep->add_option("--delta-max", sweep_spec.delta_over_g.max, "Delta/g maximum");
    sweep->add_option("--delta-steps", sweep_spec.delta_over_g.steps,
                      "Grid points along delta");
    sweep->add_option("--hop-min", sweep_spec.hop_over_g.min, "A/g minimum");
    sweep->add_option("--hop-max", sweep_spec.hop_over_g.max, "A/g maximum");
    sweep->add_option("--hop-steps", sweep_spec.hop_over_g.steps,
                      "Grid points along A");
    sweep->add_option("--g-over-omega-a", sweep_spec.g_over_omega_a,
                      "Sets the absolute energy scale");
    sweep->add_flag("--absolute-energies", sweep_spec.absolute_energies,
                    "Report energies without the N * omega_c offset");
    sweep->add_option("--workers", sweep_spec.workers,
                      "Concurrent point workers (default: JCH_WORKERS or 1)");
    sweep->add_option("--eps-mobility", sweep_spec.eps_mobility,
                      "Insulator/superfluid variance threshold");
    sweep->add_option("--eps-particle", sweep_spec.eps_particle,
                      "Polaritonic-character variance threshold");
    sweep->add_option("--output,-o", sweep_output, "Output path ('-' = stdout)");
    sweep->add_option("--format", sweep_format, "csv or jsonl")
        ->check(CLI::IsMember({"csv", "jsonl"}));
    sweep->set_config("--config");

    double deg_hop = 10.0, deg_g = 1.0, deg_omega_c = 0.0;
    CLI::App* deg = app.add_subcommand(
        "degenerate-limit",
        "4x4 degenerate block at A = -delta and comparison with exact numerics");
    deg->add_option("--hop", deg_hop, "Hopping strength A in units of g")
        ->check(CLI::NonNegativeNumber);
    deg->add_option("--g", deg_g, "Atom-cavity coupling")->check(CLI::PositiveNumber);
    deg->add_option("--omega-c", deg_omega_c, "Cavity frequency offset");
    deg->set_config("--config");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*basis) {
            std::cout << jch::enumerate_sector(basis_sites, basis_excitations)
                             .to_json()
                      << '\n';
            return 0;
        }
        if (*point) return run_point(point_opt, point_solver);
        if (*dec) return run_decompose(dec_opt, dec_solver);
        if (*spectrum)
            return run_spectrum(spec_opt, spec_sites, spec_excitations,
                                spec_solver);
        if (*sweep) return run_sweep_cmd(sweep_spec, sweep_output, sweep_format);
        if (*deg) return run_degenerate_limit(deg_hop, deg_g, deg_omega_c);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
