#pragma once

// Scattering sector |E| > |m|: the four-equation matching system at x = -+a,
// reflection/transmission amplitudes and coefficients, the closed-form
// transmission 1/|d|^2, resonance energies and grid scans.

#include <algorithm>
#include <optional>
#include <vector>

#include "diracsq/core.hpp"
#include "diracsq/linsolve.hpp"

namespace diracsq {

struct ScatteringResult {
    double energy = 0.0;
    cplx b_plus, b_minus;   // interior amplitudes B_+-
    cplx refl_amp;          // r_+- = A_-+ / A_+-
    cplx trans_amp;         // t_+- = D_+- / A_+-
    double R = 0.0, T = 0.0;
    double j_inc = 0.0, j_ref = 0.0, j_trans = 0.0;
};

/// The 4x4 complex matching system. Unknown ordering: [B_+, B_-, refl, trans]
/// with the incident amplitude normalized to 1 (A_+ for E+m>0, A_- for
/// E+m<0). Continuity of psi_+ at x = -+a plus the derivative jumps
/// -+lambda psi_+(-+a).
struct MatchingSystem {
    detail::Mat<4> lhs{};
    detail::Vec<4> rhs{};
    bool incident_positive = true;  // A_+ branch (E + m > 0)
};

namespace detail {

inline void require_scattering(const ModelParams& p, double energy, const char* who) {
    if (!(std::abs(energy) > std::abs(p.mass)))
        throw std::domain_error(std::string(who) + ": scattering requires |E| > |m|");
}

}  // namespace detail

inline MatchingSystem matching_system(const ModelParams& params, double energy) {
    const ModelParams p = to_delta_zero(params);
    detail::require_scattering(p, energy, "matching_system");
    const Kinematics kin = kinematics(p, energy);
    const double k = kin.k.real();
    const cplx eta = kin.eta;
    const double a = p.half_width;
    const double lam = p.delta_strength();
    const cplx I(0.0, 1.0);

    const cplx ep = std::exp(I * eta * a);   // e^{+i eta a}
    const cplx em = 1.0 / ep;                // e^{-i eta a}
    const cplx fp = std::exp(I * k * a);     // e^{+i k a}
    const cplx fm = 1.0 / fp;                // e^{-i k a}

    MatchingSystem sys;
    sys.incident_positive = (energy + p.mass) > 0.0;
    auto& A = sys.lhs;
    auto& b = sys.rhs;

    if (sys.incident_positive) {
        // incident A_+ e^{ikx}, reflected A_- e^{-ikx}, transmitted D_+ e^{ikx}
        // continuity at -a
        A[0] = {em, ep, -fp, 0.0};
        b[0] = fm;
        // continuity at +a
        A[1] = {ep, em, 0.0, -fp};
        b[1] = 0.0;
        // jump at +a: ik D e^{ika} - i eta (B+ e^{i eta a} - B- e^{-i eta a})
        //            = lambda (B+ e^{i eta a} + B- e^{-i eta a})
        A[2] = {-(I * eta + lam) * ep, (I * eta - lam) * em, 0.0, I * k * fp};
        b[2] = 0.0;
        // jump at -a: i eta (B+ e^{-i eta a} - B- e^{i eta a})
        //             - ik (e^{-ika} - A_- e^{ika}) = -lambda (B+ e^{-i eta a} + B- e^{i eta a})
        A[3] = {(I * eta + lam) * em, -(I * eta - lam) * ep, I * k * fp, 0.0};
        b[3] = I * k * fm;
    } else {
        // incident A_- e^{-ikx}, reflected A_+ e^{ikx}, transmitted D_- e^{-ikx}
        A[0] = {em, ep, -fm, 0.0};
        b[0] = fp;
        A[1] = {ep, em, 0.0, -fm};
        b[1] = 0.0;
        A[2] = {-(I * eta + lam) * ep, (I * eta - lam) * em, 0.0, -I * k * fm};
        b[2] = 0.0;
        A[3] = {(I * eta + lam) * em, -(I * eta - lam) * ep, -I * k * fm, 0.0};
        b[3] = -I * k * fp;
    }
    return sys;
}

inline ScatteringResult solve_amplitudes(const ModelParams& params, double energy) {
    const ModelParams p = to_delta_zero(params);
    const MatchingSystem sys = matching_system(p, energy);
    detail::Vec<4> x;
    try {
        x = detail::solve(sys.lhs, sys.rhs);
    } catch (const detail::SingularSystemError&) {
        throw detail::SingularSystemError(
            "solve_amplitudes: singular matching system (real-axis pole or "
            "degenerate interior basis)");
    }
    ScatteringResult res;
    res.energy = energy;
    res.b_plus = x[0];
    res.b_minus = x[1];
    res.refl_amp = x[2];
    res.trans_amp = x[3];
    res.R = std::norm(res.refl_amp);
    res.T = std::norm(res.trans_amp);
    const double k = kinematics(p, energy).k.real();
    const double c0 = 2.0 * k / std::abs(energy + p.mass);
    res.j_inc = c0;
    res.j_ref = c0 * res.R;
    res.j_trans = c0 * res.T;
    return res;
}

/// Closed-form transmission T = 1/|d|^2 with
/// d = cos(2 eta a) - sin(2 eta a) f(k), f(k) = i (k^2 + lambda^2 + eta^2)/(2 eta k),
/// evaluated through sin(2 eta a)/eta so that eta = 0 is regular.
inline double transmission_closed_form(const ModelParams& params, double energy) {
    const ModelParams p = to_delta_zero(params);
    detail::require_scattering(p, energy, "transmission_closed_form");
    const Kinematics kin = kinematics(p, energy);
    const double k = kin.k.real();
    const cplx eta = kin.eta;
    const double a = p.half_width;
    const double lam = p.delta_strength();
    const cplx I(0.0, 1.0);
    const cplx eta2 = eta * eta;
    // sin(2 eta a) * f(k) = [sin(2 eta a)/eta] * i (k^2+lam^2+eta^2)/(2k)
    const cplx sin_over_eta = 2.0 * a * detail::sinc(2.0 * eta * a);
    const cplx d = std::cos(2.0 * eta * a) -
                   sin_over_eta * I * (k * k + lam * lam + eta2) / (2.0 * k);
    return 1.0 / std::norm(d);
}

/// Diagnostic: the expanded real-form denominator printed in the source
/// derivation, valid for real eta where Re f = 0. Agrees with 1/|d|^2 there.
inline double transmission_printed_form(const ModelParams& params, double energy) {
    const ModelParams p = to_delta_zero(params);
    detail::require_scattering(p, energy, "transmission_printed_form");
    const Kinematics kin = kinematics(p, energy);
    if (kin.eta.imag() != 0.0)
        throw std::domain_error("transmission_printed_form: requires real eta");
    const double k = kin.k.real();
    const double eta = kin.eta.real();
    const double a = p.half_width;
    const double lam = p.delta_strength();
    const double s = std::sin(2.0 * eta * a);
    const double abs_f2 = std::pow((k * k + lam * lam + eta * eta) / (2.0 * eta * k), 2);
    // Re f = 0 for real eta, so the printed sin(4 eta a) Re f term drops out.
    return 1.0 / (1.0 + s * s * (abs_f2 - 1.0));
}

/// Diagnostic: the printed interior-amplitude ratio
/// B_+/A = i eta k (eta + k + i C_p/2) e^{-i(k+eta)a} / (2d), which carries
/// uncancelled energy dimensions; compare against the linear-system solution.
inline cplx printed_ratio_b_plus(const ModelParams& params, double energy) {
    const ModelParams p = to_delta_zero(params);
    detail::require_scattering(p, energy, "printed_ratio_b_plus");
    const Kinematics kin = kinematics(p, energy);
    const double k = kin.k.real();
    const cplx eta = kin.eta;
    const double a = p.half_width;
    const double lam = p.delta_strength();
    const cplx I(0.0, 1.0);
    const cplx sin_over_eta = 2.0 * a * detail::sinc(2.0 * eta * a);
    const cplx d = std::cos(2.0 * eta * a) -
                   sin_over_eta * I * (k * k + lam * lam + eta * eta) / (2.0 * k);
    return I * eta * k * (eta + k + I * lam) * std::exp(-I * (k + eta) * a) / (2.0 * d);
}

struct ResonanceEntry {
    int n = 0;               // index N >= 0
    double eta_res = 0.0;    // (N+1) pi / (2a)
    std::vector<double> energies;  // roots with |E| > |m|, ascending
    std::vector<double> t_check;   // transmission at each kept root
};

struct ResonanceTable {
    std::vector<ResonanceEntry> entries;
};

/// Resonance energies: sin(2 eta a) = 0 at eta = (N+1) pi/(2a) gives T = 1
/// exactly; invert the quadratic eta^2(E) = eta_res^2 and keep |E| > |m|.
inline ResonanceTable resonance_energies(const ModelParams& params, int n_max) {
    const ModelParams p = to_delta_zero(params);
    if (n_max < 0) throw std::invalid_argument("resonance_energies: n_max >= 0");
    const double a = p.half_width, m = p.mass;
    ResonanceTable table;
    for (int n = 0; n <= n_max; ++n) {
        ResonanceEntry e;
        e.n = n;
        e.eta_res = (n + 1) * M_PI / (2.0 * a);
        // E^2 + C_sigma E + (C_sigma m - m^2 - C_p^2 - eta_res^2) = 0
        const double c = p.c_sigma * m - m * m - p.c_p * p.c_p - e.eta_res * e.eta_res;
        const double disc = p.c_sigma * p.c_sigma - 4.0 * c;
        if (disc >= 0.0) {
            const double s = std::sqrt(disc);
            for (double root : {(-p.c_sigma - s) / 2.0, (-p.c_sigma + s) / 2.0}) {
                if (std::abs(root) > std::abs(m)) {
                    e.energies.push_back(root);
                    e.t_check.push_back(transmission_closed_form(p, root));
                }
            }
        }
        table.entries.push_back(std::move(e));
    }
    return table;
}

struct ScanPoint {
    double energy = 0.0;
    std::optional<double> transmission;  // absent inside the gap
    std::optional<double> reflection;
};

/// Per-point amplitude solve over an energy grid; gap points (|E| <= |m|)
/// are reported as absent values, never as zeros. Grid points with eta ~ 0,
/// where the interior exponential basis degenerates and the 4x4 system is
/// singular, take the (regular) closed form instead.
inline std::vector<ScanPoint> transmission_scan(const ModelParams& params,
                                                const std::vector<double>& grid) {
    const ModelParams p = to_delta_zero(params);
    std::vector<ScanPoint> out;
    out.reserve(grid.size());
    for (double energy : grid) {
        ScanPoint pt;
        pt.energy = energy;
        if (std::abs(energy) > std::abs(p.mass)) {
            if (std::abs(kinematics(p, energy).eta) < 1e-6) {
                pt.transmission = transmission_closed_form(p, energy);
                pt.reflection = 1.0 - *pt.transmission;
            } else {
                const ScatteringResult r = solve_amplitudes(p, energy);
                pt.transmission = r.T;
                pt.reflection = r.R;
            }
        }
        out.push_back(pt);
    }
    return out;
}

}  // namespace diracsq
