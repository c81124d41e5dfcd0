#pragma once

// Bound sector |E| < |m|: quantization condition roots, parity labels at
// C_p = 0, critical pseudoscalar coupling and spectrum sweeps.

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "diracsq/core.hpp"
#include "diracsq/rootfind.hpp"

namespace diracsq {

enum class Parity { Even, Odd };

struct BoundSpectrum {
    ModelParams params_snapshot;
    std::vector<double> energies;                   // ascending, inside the gap
    std::optional<std::vector<Parity>> parities;    // only when C_p = 0
    int bracket_count = 0;
    int grid_points = 0;
};

namespace detail {

inline void require_gap(const ModelParams& p, double energy, const char* who) {
    if (!(std::abs(energy) < std::abs(p.mass)))
        throw std::domain_error(std::string(who) + ": requires |E| < |m|");
}

}  // namespace detail

/// Pole-free quantization residual, zero exactly at the bound energies:
/// the multiplied-through form of 2 eta |k| / (eta^2 + lambda^2 - |k|^2)
/// = tan(2 eta a), divided by eta so it stays real and smooth through the
/// hyperbolic branch (eta^2 < 0) and the eta = 0 crossover.
inline double quantization_residual(const ModelParams& params, double energy) {
    const ModelParams p = to_delta_zero(params);
    detail::require_gap(p, energy, "quantization_residual");
    if (energy == -p.mass)
        throw std::domain_error("quantization_residual: E = -m is the isolated-solution sector");
    const double kk = std::sqrt(p.mass * p.mass - energy * energy);  // |k|
    const double r = r_parameter(p, energy);
    const double eta2 = -kk * kk - r;
    const cplx eta = std::sqrt(cplx(eta2, 0.0));
    const double a = p.half_width;
    const double lam = p.delta_strength();
    const cplx sin_over_eta = 2.0 * a * detail::sinc(2.0 * eta * a);
    const cplx res =
        2.0 * kk * std::cos(2.0 * eta * a) - (eta2 + lam * lam - kk * kk) * sin_over_eta;
    return res.real();  // imaginary part is rounding noise by construction
}

/// |d| continued to the gap with the prescription k = +i|k|; vanishes at
/// the bound energies (poles of the transmission amplitude).
inline double transmission_pole_indicator(const ModelParams& params, double energy) {
    const ModelParams p = to_delta_zero(params);
    detail::require_gap(p, energy, "transmission_pole_indicator");
    const Kinematics kin = kinematics(p, energy);
    const cplx I(0.0, 1.0);
    const double a = p.half_width;
    const double lam = p.delta_strength();
    const cplx eta = kin.eta, k = kin.k;
    const cplx sin_over_eta = 2.0 * a * detail::sinc(2.0 * eta * a);
    const cplx d = std::cos(2.0 * eta * a) -
                   sin_over_eta * I * (k * k + lam * lam + eta * eta) / (2.0 * k);
    return std::abs(d);
}

struct CriticalCoupling {
    std::optional<double> c_p_critical;  // sqrt(2 m C_sigma); absent otherwise
};

inline CriticalCoupling critical_pseudoscalar(const ModelParams& params) {
    const ModelParams p = to_delta_zero(params);
    const double prod = 2.0 * p.mass * p.c_sigma;
    if (prod > 0.0) return CriticalCoupling{std::sqrt(prod)};
    return CriticalCoupling{std::nullopt};
}

namespace detail {

// Even/odd finite-well residuals at C_p = 0, in forms even in eta (hence
// real and smooth through the hyperbolic branch):
//   even: eta tan(eta a) = |k|   ->  eta sin(eta a) - |k| cos(eta a)
//   odd:  -eta cot(eta a) = |k|  ->  cos(eta a) + |k| a sinc(eta a)
inline double parity_residual(const ModelParams& p, double energy, Parity parity) {
    const double kk = std::sqrt(p.mass * p.mass - energy * energy);
    const double eta2 = -kk * kk - r_parameter(p, energy);
    const cplx eta = std::sqrt(cplx(eta2, 0.0));
    const double a = p.half_width;
    if (parity == Parity::Even) {
        const cplx res = eta2 * a * sinc(eta * a) - kk * std::cos(eta * a);
        return res.real();
    }
    const cplx res = std::cos(eta * a) + kk * a * sinc(eta * a);
    return res.real();
}

inline std::pair<double, double> gap_interval(const ModelParams& p) {
    const double m = std::abs(p.mass);
    const double eps = 1e-9 * std::max(1.0, m);
    return {-m + eps, m - eps};
}

}  // namespace detail

/// All quantization-condition roots in the gap. Empty by the source model's
/// existence condition whenever C_p^2 >= 2 m C_sigma (which subsumes
/// C_sigma <= 0 for positive mass): r >= 0 throughout the gap.
inline BoundSpectrum find_bound_states(const ModelParams& params) {
    const ModelParams p = to_delta_zero(params);
    BoundSpectrum spec;
    spec.params_snapshot = params;
    if (!(p.c_p * p.c_p < 2.0 * p.mass * p.c_sigma)) return spec;
    const auto [lo, hi] = detail::gap_interval(p);
    auto scan = detail::bracketed_roots(
        [&](double e) { return quantization_residual(p, e); }, lo, hi);
    spec.energies = std::move(scan.roots);
    spec.bracket_count = scan.bracket_count;
    spec.grid_points = scan.grid_points;
    if (p.c_p == 0.0) {
        std::vector<Parity> labels;
        labels.reserve(spec.energies.size());
        for (double e : spec.energies) {
            const double re = std::abs(detail::parity_residual(p, e, Parity::Even));
            const double ro = std::abs(detail::parity_residual(p, e, Parity::Odd));
            labels.push_back(re <= ro ? Parity::Even : Parity::Odd);
        }
        spec.parities = std::move(labels);
    }
    return spec;
}

/// Branch-by-branch roots at C_p = 0; the union equals find_bound_states.
inline std::pair<std::vector<double>, std::vector<double>> parity_split_cp0(
    const ModelParams& params) {
    const ModelParams p = to_delta_zero(params);
    if (p.c_p != 0.0)
        throw std::invalid_argument("parity_split_cp0: requires C_p = 0 (parity undefined otherwise)");
    const auto [lo, hi] = detail::gap_interval(p);
    auto even = detail::bracketed_roots(
        [&](double e) { return detail::parity_residual(p, e, Parity::Even); }, lo, hi);
    auto odd = detail::bracketed_roots(
        [&](double e) { return detail::parity_residual(p, e, Parity::Odd); }, lo, hi);
    return {std::move(even.roots), std::move(odd.roots)};
}

/// Scan of the double-delta (r = 0) condition
/// 2|k|^2/(lambda^2 - 2|k|^2) = tanh(2|k|a) over |k| in (0, k_max], in the
/// multiplied-through form 2|k|^2 cosh - (lambda^2 - 2|k|^2) sinh. Reports
/// whether the residual is single-signed and whether the fixed r = 0 energy
/// itself is a solution.
struct R0BoundVerdict {
    bool single_signed = true;
    std::vector<double> sign_change_k;   // |k| locations of residual roots
    double fixed_energy = 0.0;           // E with r = 0
    double k_at_fixed_energy = 0.0;      // |k| at that energy
    bool bound_at_fixed_energy = false;  // condition satisfied there (|k| > 0)
};

inline R0BoundVerdict r0_bound_check(const ModelParams& params, double k_max = 0.0,
                                     int scan_points = 10000) {
    const ModelParams p = to_delta_zero(params);
    const R0Energy e0 = r0_fixed_energy(p);
    if (!e0.energy)
        throw std::invalid_argument("r0_bound_check: parameters never reach r = 0 at a single energy");
    const double lam = p.delta_strength();
    const double a = p.half_width;
    if (k_max <= 0.0) k_max = std::abs(p.mass);
    auto residual = [&](double kk) {
        return 2.0 * kk * kk * std::cosh(2.0 * kk * a) -
               (lam * lam - 2.0 * kk * kk) * std::sinh(2.0 * kk * a);
    };
    R0BoundVerdict v;
    v.fixed_energy = *e0.energy;
    const double gap2 = p.mass * p.mass - v.fixed_energy * v.fixed_energy;
    v.k_at_fixed_energy = gap2 > 0.0 ? std::sqrt(gap2) : 0.0;
    auto scan = detail::bracketed_roots(residual, k_max / scan_points, k_max,
                                        scan_points, scan_points);
    v.sign_change_k = std::move(scan.roots);
    v.single_signed = v.sign_change_k.empty();
    if (v.k_at_fixed_energy > 0.0)
        v.bound_at_fixed_energy =
            std::any_of(v.sign_change_k.begin(), v.sign_change_k.end(), [&](double kk) {
                return std::abs(kk - v.k_at_fixed_energy) < 1e-9;
            });
    return v;
}

enum class SweepVariable { CSigma, Cp };

struct SweepRow {
    double sweep_value = 0.0;
    int level_index = 0;
    double energy = 0.0;
};

/// Full spectrum per grid point of the chosen coupling; rows ordered by
/// grid index then level index.
inline std::vector<SweepRow> spectrum_sweep(const ModelParams& params, SweepVariable vary,
                                            const std::vector<double>& grid) {
    if (grid.empty()) throw std::invalid_argument("spectrum_sweep: empty grid");
    std::vector<SweepRow> rows;
    for (double v : grid) {
        ModelParams p = params;
        (vary == SweepVariable::CSigma ? p.c_sigma : p.c_p) = v;
        const BoundSpectrum s = find_bound_states(p);
        for (std::size_t i = 0; i < s.energies.size(); ++i)
            rows.push_back(SweepRow{v, static_cast<int>(i), s.energies[i]});
    }
    return rows;
}

}  // namespace diracsq
