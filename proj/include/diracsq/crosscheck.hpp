#pragma once

// Cross-validation battery: every closed-form result is checked against the
// independent first-order oracle, plus the unitarity, symmetry and
// conservation properties the model guarantees. Deterministic for a fixed
// seed.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "diracsq/bound.hpp"
#include "diracsq/core.hpp"
#include "diracsq/oracle.hpp"
#include "diracsq/scattering.hpp"

namespace diracsq {

struct CheckRecord {
    std::string name;
    double max_dev = 0.0;
    double tol = 0.0;
    bool pass = false;
};

struct CrosscheckReport {
    std::vector<CheckRecord> checks;
    bool pass = false;
};

namespace checks {

/// The four scattering parameter sets (c_p, c_sigma) used for the published
/// transmission profiles at m = a = 1.
inline std::vector<std::pair<double, double>> profile_sets() {
    return {{0.0, 1.0}, {1.0, 0.0}, {1.0, 0.5}, {1.0, -0.5}};
}

/// n energies per sign outside the gap, in [-hi, -lo] and [lo, hi].
inline std::vector<double> scattering_grid(double mass, int n = 100, double lo_off = 0.05,
                                           double hi = 10.0) {
    std::vector<double> g;
    const double m = std::abs(mass);
    const double lo = m + lo_off;
    for (int i = 0; i < n; ++i) {
        const double e = lo + (hi - lo) * i / (n - 1);
        g.push_back(-e);
        g.push_back(e);
    }
    return g;
}

inline ModelParams base_params(double c_sigma, double c_p,
                               DeltaConvention conv = DeltaConvention::PaperHalf) {
    ModelParams p;
    p.c_sigma = c_sigma;
    p.c_p = c_p;
    p.delta_convention = conv;
    return p;
}

inline CheckRecord unitarity_random(std::uint64_t seed, int draws = 1000) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> um(0.5, 2.0), ua(0.5, 2.0), uc(-2.0, 2.0),
        ue(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < draws; ++i) {
        ModelParams p;
        p.mass = um(rng);
        p.half_width = ua(rng);
        p.c_sigma = uc(rng);
        p.c_p = uc(rng);
        p.delta_convention = (i % 2) ? DeltaConvention::PaperHalf : DeltaConvention::DiracFull;
        const double mag = p.mass * (1.0 + 9.0 * ue(rng)) + 1e-6;
        const double e = (ue(rng) < 0.5) ? -mag : mag;
        const ScatteringResult r = solve_amplitudes(p, e);
        worst = std::max(worst, std::abs(r.R + r.T - 1.0));
    }
    return CheckRecord{"unitarity_random", worst, 1e-10, worst < 1e-10};
}

inline CheckRecord closed_form_agreement() {
    double worst = 0.0;
    for (auto [cp, cs] : profile_sets()) {
        const ModelParams p = base_params(cs, cp, DeltaConvention::PaperHalf);
        for (double e : scattering_grid(p.mass))
            worst = std::max(worst,
                             std::abs(transmission_closed_form(p, e) - solve_amplitudes(p, e).T));
    }
    return CheckRecord{"closed_form_agreement", worst, 1e-10, worst < 1e-10};
}

inline CheckRecord oracle_transmission_agreement(double lambda_scale = 1.0) {
    double worst = 0.0;
    for (auto [cp, cs] : profile_sets()) {
        const ModelParams p = base_params(cs, cp, DeltaConvention::DiracFull);
        ModelParams solver = p;
        solver.c_p *= lambda_scale;
        for (double e : scattering_grid(p.mass))
            worst = std::max(worst,
                             std::abs(oracle_transmission(p, e) - solve_amplitudes(solver, e).T));
    }
    return CheckRecord{"oracle_transmission_agreement", worst, 1e-8, worst < 1e-8};
}

inline CheckRecord oracle_bound_agreement(double lambda_scale = 1.0) {
    double worst = 0.0;
    for (double cp : {0.0, 1.0, 1.9}) {
        const ModelParams p = base_params(2.0, cp, DeltaConvention::DiracFull);
        ModelParams solver = p;
        solver.c_p *= lambda_scale;
        const auto oracle = oracle_bound_states(p);
        const auto found = find_bound_states(solver).energies;
        if (oracle.size() != found.size()) {
            worst = std::max(worst, 1.0);
            continue;
        }
        for (std::size_t i = 0; i < oracle.size(); ++i)
            worst = std::max(worst, std::abs(oracle[i] - found[i]));
    }
    return CheckRecord{"oracle_bound_agreement", worst, 1e-9, worst < 1e-9};
}

inline CheckRecord resonance_exactness(int n_max = 5) {
    const ModelParams p = base_params(1.0, 0.0);
    const ResonanceTable t = resonance_energies(p, n_max);
    double worst = 0.0;
    for (const auto& e : t.entries)
        for (double tt : e.t_check) worst = std::max(worst, std::abs(tt - 1.0));
    return CheckRecord{"resonance_exactness", worst, 1e-9, worst < 1e-9};
}

inline CheckRecord cp_sign_symmetry() {
    double worst = 0.0;
    for (auto conv : {DeltaConvention::PaperHalf, DeltaConvention::DiracFull}) {
        for (auto [cp, cs] : profile_sets()) {
            const ModelParams plus = base_params(cs, cp, conv);
            const ModelParams minus = base_params(cs, -cp, conv);
            for (double e : scattering_grid(plus.mass))
                worst = std::max(worst, std::abs(solve_amplitudes(plus, e).T -
                                                 solve_amplitudes(minus, e).T));
        }
        for (double cp : {0.7, 1.5}) {
            const auto sp = find_bound_states(base_params(2.0, cp, conv)).energies;
            const auto sm = find_bound_states(base_params(2.0, -cp, conv)).energies;
            if (sp.size() != sm.size()) {
                worst = std::max(worst, 1.0);
                continue;
            }
            for (std::size_t i = 0; i < sp.size(); ++i)
                worst = std::max(worst, std::abs(sp[i] - sm[i]));
        }
    }
    return CheckRecord{"cp_sign_symmetry", worst, 1e-14, worst < 1e-14};
}

inline CheckRecord critical_threshold() {
    double dev = 0.0;
    for (auto conv : {DeltaConvention::PaperHalf, DeltaConvention::DiracFull}) {
        if (find_bound_states(base_params(2.0, 1.99, conv)).energies.empty()) dev = 1.0;
        if (!find_bound_states(base_params(2.0, 2.01, conv)).energies.empty()) dev = 1.0;
        if (!find_bound_states(base_params(-1.0, 0.5, conv)).energies.empty()) dev = 1.0;
    }
    return CheckRecord{"critical_threshold", dev, 0.5, dev < 0.5};
}

inline CheckRecord parity_equivalence_cp0() {
    double worst = 0.0;
    for (double cs : {0.5, 1.0, 2.0, 3.0}) {
        const ModelParams p = base_params(cs, 0.0);
        const auto unified = find_bound_states(p).energies;
        auto [even, odd] = parity_split_cp0(p);
        std::vector<double> merged = even;
        merged.insert(merged.end(), odd.begin(), odd.end());
        std::sort(merged.begin(), merged.end());
        if (merged.size() != unified.size()) {
            worst = std::max(worst, 1.0);
            continue;
        }
        for (std::size_t i = 0; i < merged.size(); ++i)
            worst = std::max(worst, std::abs(merged[i] - unified[i]));
    }
    return CheckRecord{"parity_equivalence_cp0", worst, 1e-10, worst < 1e-10};
}

/// No bound state at the r = 0 locus energy itself. (The double-delta
/// condition does have nonzero roots off that locus; see r0_bound_check.)
inline CheckRecord r0_locus_no_bound() {
    const auto v = r0_bound_check(base_params(2.0, 2.0));
    const double dev = v.bound_at_fixed_energy ? 1.0 : 0.0;
    return CheckRecord{"r0_locus_no_bound", dev, 0.5, dev < 0.5};
}

inline CheckRecord current_conservation_amplitudes() {
    double worst = 0.0;
    for (auto [cp, cs] : profile_sets()) {
        const ModelParams p = base_params(cs, cp);
        for (double e : scattering_grid(p.mass, 40))
            if (const ScatteringResult r = solve_amplitudes(p, e); true)
                worst = std::max(worst, std::abs(r.j_inc - r.j_ref - r.j_trans) /
                                            std::max(1.0, r.j_inc));
    }
    return CheckRecord{"current_conservation_amplitudes", worst, 1e-10, worst < 1e-10};
}

inline std::vector<double> uniform_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
    return g;
}

inline CheckRecord current_uniformity_spinor() {
    double worst = 0.0;
    const auto grid = uniform_grid(-3.0, 3.0, 301);
    for (auto [cp, cs] : profile_sets()) {
        const ModelParams p = base_params(cs, cp, DeltaConvention::DiracFull);
        for (double e : {1.4, 2.5, -1.7, -4.0}) {
            const SpinorSample s = spinor_eval_scattering(p, e, grid);
            for (double j : s.j1) worst = std::max(worst, std::abs(j - s.j1.front()));
        }
    }
    return CheckRecord{"current_uniformity_spinor", worst, 1e-8, worst < 1e-8};
}

inline CheckRecord bound_normalization() {
    double worst = 0.0;
    const int n = 4001;  // odd, for composite Simpson
    for (double cp : {0.0, 1.0, 1.9}) {
        const ModelParams p = base_params(2.0, cp, DeltaConvention::DiracFull);
        const auto energies = oracle_bound_states(p);
        for (int lvl = 0; lvl < static_cast<int>(energies.size()); ++lvl) {
            // composite Simpson across the cell, exact exponential tails
            const auto grid = uniform_grid(-p.half_width, p.half_width, n);
            const SpinorSample s = spinor_eval_bound(p, lvl, grid);
            const double h = grid[1] - grid[0];
            double integral = s.j0.front() + s.j0.back();
            for (int i = 1; i < n - 1; ++i) integral += s.j0[i] * (i % 2 ? 4.0 : 2.0);
            integral *= h / 3.0;
            const double kk = std::sqrt(p.mass * p.mass - energies[lvl] * energies[lvl]);
            integral += (s.j0.front() + s.j0.back()) / (2.0 * kk);  // analytic tails
            worst = std::max(worst, std::abs(integral - 1.0));
        }
    }
    return CheckRecord{"bound_normalization", worst, 1e-8, worst < 1e-8};
}

inline CheckRecord bound_current_zero() {
    double worst = 0.0;
    const auto grid = uniform_grid(-4.0, 4.0, 801);
    for (double cp : {0.0, 1.0, 1.9}) {
        const ModelParams p = base_params(2.0, cp, DeltaConvention::DiracFull);
        const auto energies = oracle_bound_states(p);
        for (int lvl = 0; lvl < static_cast<int>(energies.size()); ++lvl) {
            const SpinorSample s = spinor_eval_bound(p, lvl, grid);
            for (double j : s.j1) worst = std::max(worst, std::abs(j));
        }
    }
    return CheckRecord{"bound_current_zero", worst, 1e-10, worst < 1e-10};
}

inline CheckRecord charge_conjugation_spectrum() {
    double worst = 0.0;
    for (double cp : {0.0, 1.0, 1.9}) {
        const ModelParams p = base_params(2.0, cp, DeltaConvention::DiracFull);
        const auto original = oracle_bound_states(p);
        auto conjugated = oracle_bound_states(charge_conjugate(p).params);
        for (double& e : conjugated) e = ConjugateProblem::map_energy(e);
        std::sort(conjugated.begin(), conjugated.end());
        if (original.size() != conjugated.size()) {
            worst = std::max(worst, 1.0);
            continue;
        }
        for (std::size_t i = 0; i < original.size(); ++i)
            worst = std::max(worst, std::abs(original[i] - conjugated[i]));
    }
    return CheckRecord{"charge_conjugation_spectrum", worst, 1e-9, worst < 1e-9};
}

inline CheckRecord chiral_substitution_spectrum() {
    double worst = 0.0;
    for (double cp : {0.0, 1.0, 1.9}) {
        const ModelParams p = base_params(2.0, cp, DeltaConvention::DiracFull);
        // SigmaZero image solved natively by the first-order oracle...
        const auto image = oracle_bound_states(chiral_transform(p));
        // ...must coincide with the DeltaZero solution (substitution rule).
        const auto direct = oracle_bound_states(p);
        if (image.size() != direct.size()) {
            worst = std::max(worst, 1.0);
            continue;
        }
        for (std::size_t i = 0; i < image.size(); ++i)
            worst = std::max(worst, std::abs(image[i] - direct[i]));
    }
    return CheckRecord{"chiral_substitution_spectrum", worst, 1e-9, worst < 1e-9};
}

}  // namespace checks

/// Full battery. lambda_scale != 1 injects a deliberate coupling fault into
/// the second-order solvers (diagnostic; the oracle-agreement checks must
/// then fail).
inline CrosscheckReport run_crosscheck(std::uint64_t seed = 20240817ULL,
                                       double lambda_scale = 1.0) {
    CrosscheckReport rep;
    rep.checks.push_back(checks::unitarity_random(seed));
    rep.checks.push_back(checks::closed_form_agreement());
    rep.checks.push_back(checks::oracle_transmission_agreement(lambda_scale));
    rep.checks.push_back(checks::oracle_bound_agreement(lambda_scale));
    rep.checks.push_back(checks::resonance_exactness());
    rep.checks.push_back(checks::cp_sign_symmetry());
    rep.checks.push_back(checks::critical_threshold());
    rep.checks.push_back(checks::parity_equivalence_cp0());
    rep.checks.push_back(checks::r0_locus_no_bound());
    rep.checks.push_back(checks::current_conservation_amplitudes());
    rep.checks.push_back(checks::current_uniformity_spinor());
    rep.checks.push_back(checks::bound_normalization());
    rep.checks.push_back(checks::bound_current_zero());
    rep.checks.push_back(checks::charge_conjugation_spectrum());
    rep.checks.push_back(checks::chiral_substitution_spectrum());
    rep.pass = std::all_of(rep.checks.begin(), rep.checks.end(),
                           [](const CheckRecord& c) { return c.pass; });
    return rep;
}

}  // namespace diracsq
