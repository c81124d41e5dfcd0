// Command-line front end: parameter parsing, solver dispatch, CSV/JSON
// emission. Exit codes: 0 success, 1 failed check or empty result,
// 2 usage/config error, 3 internal solver error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "diracsq/crosscheck.hpp"
#include "diracsq/csv.hpp"
#include "diracsq/json_io.hpp"

namespace {

using namespace diracsq;

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
    return g;
}

struct Output {
    std::optional<std::string> path;

    int emit(const std::string& body) const {
        if (!path) {
            std::cout << body;
            return 0;
        }
        std::ofstream f(*path, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot open output path " << *path << "\n";
            return 3;
        }
        f << body;
        return 0;
    }
};

int run_figure(const std::string& id, ModelParams p, bool user_cs, bool user_cp,
               const Output& out) {
    std::ostringstream os;
    std::size_t rows = 0;
    if (id == "fig2") {
        // transmission along the r = 0 locus vs C_p, C_sigma = 2
        if (!user_cs) p.c_sigma = 2.0;
        os << "c_p,energy,transmission,reflection\n";
        for (double cp : linspace(-5.0, 5.0, 1001)) {
            ModelParams q = p;
            q.c_p = cp;
            const R0Energy e0 = r0_fixed_energy(q);
            os << csv::num(cp) << ',';
            if (e0.energy && std::abs(*e0.energy) > std::abs(q.mass)) {
                const ScatteringResult r = solve_amplitudes(q, *e0.energy);
                os << csv::num(*e0.energy) << ',' << csv::num(r.T) << ',' << csv::num(r.R);
                ++rows;
            } else if (e0.energy) {
                os << csv::num(*e0.energy) << ",,";  // gap point, flagged absent
            } else {
                os << ",,";
            }
            os << '\n';
        }
    } else if (id == "fig3") {
        os << "c_p,c_sigma,energy,transmission,reflection\n";
        for (auto [cp, cs] : checks::profile_sets()) {
            ModelParams q = p;
            if (!user_cp) q.c_p = cp;
            if (!user_cs) q.c_sigma = cs;
            for (const auto& pt : transmission_scan(q, linspace(-10.0, 10.0, 2001))) {
                os << csv::num(q.c_p) << ',' << csv::num(q.c_sigma) << ','
                   << csv::num(pt.energy) << ',' << csv::num(pt.transmission) << ','
                   << csv::num(pt.reflection) << '\n';
                if (pt.transmission) ++rows;
            }
        }
    } else if (id == "fig4") {
        if (!user_cp) p.c_p = 0.0;
        os << "c_sigma,level_index,energy\n";
        for (const auto& r : spectrum_sweep(p, SweepVariable::CSigma, linspace(0.0, 5.0, 501))) {
            os << csv::num(r.sweep_value) << ',' << r.level_index << ',' << csv::num(r.energy)
               << '\n';
            ++rows;
        }
    } else if (id == "fig5") {
        if (!user_cs) p.c_sigma = 2.0;
        os << "c_p,level_index,energy\n";
        for (const auto& r : spectrum_sweep(p, SweepVariable::Cp, linspace(-2.5, 2.5, 501))) {
            os << csv::num(r.sweep_value) << ',' << r.level_index << ',' << csv::num(r.energy)
               << '\n';
            ++rows;
        }
    } else {
        std::cerr << "error: unknown figure id " << id << " (use fig2|fig3|fig4|fig5)\n";
        return 2;
    }
    if (rows == 0) {
        std::cerr << "error: figure dataset is empty\n";
        return 1;
    }
    return out.emit(os.str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dirac equation in 1+1 dimensions with mixed vector-scalar-pseudoscalar "
                 "square potentials: scattering, resonances, bound states, cross-checks"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    ModelParams params;  // defaults m = a = 1
    std::string case_str = "delta_zero", conv_str = "paper_half";
    std::string config_path;
    Output out;
    std::string out_path;

    auto* opt_mass = app.add_option("--mass", params.mass, "Fermion rest mass m");
    auto* opt_width = app.add_option("--half-width", params.half_width, "Well half-width a");
    auto* opt_cs = app.add_option("--c-sigma", params.c_sigma, "Coupling C_Sigma");
    auto* opt_cp = app.add_option("--c-p", params.c_p, "Coupling C_p");
    auto* opt_case = app.add_option("--case", case_str, "Coupling case")
                         ->check(CLI::IsMember({"delta_zero", "sigma_zero"}));
    auto* opt_conv = app.add_option("--convention", conv_str, "Boundary delta convention")
                         ->check(CLI::IsMember({"paper_half", "dirac_full"}));
    app.add_option("--config", config_path, "JSON file with parameter keys");
    auto* opt_out = app.add_option("--out", out_path, "Output path (default: stdout)");

    auto* cmd_trans = app.add_subcommand("transmission", "T and R over an energy grid");
    double e_min = 1.05, e_max = 10.0;
    int steps = 200;
    cmd_trans->add_option("--e-min", e_min, "Grid start");
    cmd_trans->add_option("--e-max", e_max, "Grid end");
    cmd_trans->add_option("--steps", steps, "Grid size")->check(CLI::Range(2, 10000000));

    auto* cmd_res = app.add_subcommand("resonances", "Resonance energies up to N = n-max");
    int n_max = 5;
    cmd_res->add_option("--n-max", n_max, "Largest resonance index")
        ->check(CLI::Range(0, 100000));

    auto* cmd_bound = app.add_subcommand("bound", "Bound-state spectrum");

    auto* cmd_sweep = app.add_subcommand("sweep", "Bound spectrum vs one coupling");
    std::string vary = "c_sigma";
    double sw_from = 0.0, sw_to = 5.0;
    int sw_steps = 101;
    cmd_sweep->add_option("--vary", vary, "Coupling to sweep")
        ->check(CLI::IsMember({"c_sigma", "c_p"}));
    cmd_sweep->add_option("--from", sw_from, "Sweep start");
    cmd_sweep->add_option("--to", sw_to, "Sweep end");
    cmd_sweep->add_option("--steps", sw_steps, "Sweep size")->check(CLI::Range(2, 1000000));

    auto* cmd_wave = app.add_subcommand("wavefunction", "Spinor components and currents");
    double wf_energy = 0.0;
    int wf_level = 0;
    double x_min = -5.0, x_max = 5.0;
    int points = 1001;
    auto* opt_energy = cmd_wave->add_option("--energy", wf_energy, "Scattering energy");
    auto* opt_level = cmd_wave->add_option("--level", wf_level, "Bound level index");
    opt_energy->excludes(opt_level);
    cmd_wave->add_option("--x-min", x_min, "Grid start");
    cmd_wave->add_option("--x-max", x_max, "Grid end");
    cmd_wave->add_option("--points", points, "Grid size")->check(CLI::Range(2, 10000000));

    auto* cmd_fig = app.add_subcommand("figure", "Reference dataset presets");
    std::string fig_id;
    cmd_fig->add_option("id", fig_id, "fig2|fig3|fig4|fig5")->required();

    auto* cmd_check = app.add_subcommand("crosscheck", "Run the validation battery");
    std::uint64_t seed = 20240817ULL;
    double lambda_scale = 1.0;
    cmd_check->add_option("--seed", seed, "RNG seed for random draws");
    cmd_check->add_option("--lambda-scale", lambda_scale,
                          "Diagnostic coupling perturbation (1.0 = none)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // --help and friends exit 0
    }

    try {
        if (!config_path.empty()) {
            std::ifstream f(config_path);
            if (!f) {
                std::cerr << "error: cannot read config file " << config_path << "\n";
                return 2;
            }
            ModelParams file_params;
            try {
                from_json(nlohmann::json::parse(f), file_params);
            } catch (const std::exception& e) {
                std::cerr << "error: bad config: " << e.what() << "\n";
                return 2;
            }
            // flags override file values
            if (!*opt_mass) params.mass = file_params.mass;
            if (!*opt_width) params.half_width = file_params.half_width;
            if (!*opt_cs) params.c_sigma = file_params.c_sigma;
            if (!*opt_cp) params.c_p = file_params.c_p;
            if (!*opt_case) params.coupling_case = file_params.coupling_case;
            if (!*opt_conv) params.delta_convention = file_params.delta_convention;
        }
        if (*opt_case) params.coupling_case = coupling_case_from_string(case_str);
        if (*opt_conv) params.delta_convention = delta_convention_from_string(conv_str);
        try {
            params.validate();
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
        if (*opt_out) out.path = out_path;

        if (*cmd_trans) {
            if (e_max <= e_min) {
                std::cerr << "error: --e-max must exceed --e-min\n";
                return 2;
            }
            std::ostringstream os;
            const auto scan = transmission_scan(params, linspace(e_min, e_max, steps));
            csv::write_scan(os, scan);
            const int rc = out.emit(os.str());
            if (rc != 0) return rc;
            if (std::none_of(scan.begin(), scan.end(),
                             [](const ScanPoint& p) { return p.transmission.has_value(); })) {
                std::cerr << "error: every grid point lies inside the gap |E| <= |m|\n";
                return 1;
            }
            return 0;
        }
        if (*cmd_res) {
            std::ostringstream os;
            const ResonanceTable table = resonance_energies(params, n_max);
            csv::write_resonances(os, table);
            const int rc = out.emit(os.str());
            if (rc != 0) return rc;
            if (std::all_of(table.entries.begin(), table.entries.end(),
                            [](const ResonanceEntry& e) { return e.energies.empty(); })) {
                std::cerr << "error: no resonance energy outside the gap\n";
                return 1;
            }
            return 0;
        }
        if (*cmd_bound) {
            std::ostringstream os;
            const BoundSpectrum spec = find_bound_states(params);
            csv::write_bound(os, spec);
            const int rc = out.emit(os.str());
            if (rc != 0) return rc;
            if (spec.energies.empty()) {
                std::cerr << "error: no bound state for these couplings\n";
                return 1;
            }
            return 0;
        }
        if (*cmd_sweep) {
            std::ostringstream os;
            const auto var = vary == "c_p" ? SweepVariable::Cp : SweepVariable::CSigma;
            const auto rows = spectrum_sweep(params, var, linspace(sw_from, sw_to, sw_steps));
            csv::write_sweep(os, rows);
            const int rc = out.emit(os.str());
            if (rc != 0) return rc;
            if (rows.empty()) {
                std::cerr << "error: sweep produced no bound levels\n";
                return 1;
            }
            return 0;
        }
        if (*cmd_wave) {
            if (!*opt_energy && !*opt_level) {
                std::cerr << "error: wavefunction needs --energy or --level\n";
                return 2;
            }
            std::ostringstream os;
            const auto grid = linspace(x_min, x_max, points);
            csv::write_spinor(os, *opt_energy
                                      ? spinor_eval_scattering(params, wf_energy, grid)
                                      : spinor_eval_bound(params, wf_level, grid));
            return out.emit(os.str());
        }
        if (*cmd_fig)
            return run_figure(fig_id, params, opt_cs->count() > 0, opt_cp->count() > 0, out);
        if (*cmd_check) {
            const CrosscheckReport rep = run_crosscheck(seed, lambda_scale);
            const nlohmann::json j = rep;
            const int rc = out.emit(j.dump(2) + "\n");
            if (rc != 0) return rc;
            return rep.pass ? 0 : 1;
        }
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
