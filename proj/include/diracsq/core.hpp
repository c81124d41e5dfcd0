#pragma once

// Physical parameter model, square potential profile, kinematic quantities,
// regime classification and the discrete symmetry maps of the 1+1 Dirac
// Hamiltonian H = sigma1 p + sigma3 m + (1+sigma3)/2 Sigma + (1-sigma3)/2 Delta
// + sigma2 Vp with square couplings Sigma = C_sigma g(x), Vp = C_p g(x).

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>

namespace diracsq {

using cplx = std::complex<double>;

/// Which second-order reduction applies: Delta = 0 (spin symmetry) or
/// Sigma = 0 (pseudospin symmetry, reached through the chiral map).
enum class CouplingCase { DeltaZero, SigmaZero };

/// Strength of the boundary delta functions in the effective potential.
/// PaperHalf uses lambda = C_p/2, DiracFull uses lambda = C_p (the value
/// forced by continuity of the first-order spinor).
enum class DeltaConvention { PaperHalf, DiracFull };

enum class RegimeKind { WellLike, DoubleDelta, BarrierLike };

enum class Direction { Right, Left };

struct ModelParams {
    double mass = 1.0;        // rest mass m; negative only as a chiral image
    double half_width = 1.0;  // a > 0
    double c_sigma = 0.0;     // C_Sigma coupling
    double c_p = 0.0;         // C_p pseudoscalar coupling
    CouplingCase coupling_case = CouplingCase::DeltaZero;
    DeltaConvention delta_convention = DeltaConvention::PaperHalf;

    /// Boundary delta strength lambda per convention.
    double delta_strength() const {
        return delta_convention == DeltaConvention::PaperHalf ? c_p / 2.0 : c_p;
    }

    void validate() const {
        if (!(half_width > 0.0))
            throw std::invalid_argument("ModelParams: half_width must be > 0");
        if (!std::isfinite(mass) || !std::isfinite(c_sigma) || !std::isfinite(c_p))
            throw std::invalid_argument("ModelParams: couplings must be finite");
    }

    bool operator==(const ModelParams&) const = default;
};

/// sgn with sgn(0) = 0, so g(+-a) = -+1/2 at the measure-zero edge points.
inline double sgn(double x) { return (x > 0.0) - (x < 0.0); }

/// Square profile g(x) = [sgn(x-a) - sgn(x+a)]/2: -1 inside |x|<a, 0 outside.
inline double profile_g(double x, double a) {
    if (!(a > 0.0)) throw std::invalid_argument("profile_g: a must be > 0");
    return 0.5 * (sgn(x - a) - sgn(x + a));
}

/// Chiral (gamma5) image: toggles the coupling case and negates m and C_p.
/// Spectra are invariant; applying twice is the identity.
inline ModelParams chiral_transform(const ModelParams& p) {
    ModelParams q = p;
    q.coupling_case = (p.coupling_case == CouplingCase::DeltaZero)
                          ? CouplingCase::SigmaZero
                          : CouplingCase::DeltaZero;
    q.mass = -p.mass;
    q.c_p = -p.c_p;
    return q;
}

/// Canonical DeltaZero form of a parameter set (identity when already
/// DeltaZero). Energies are unchanged under the chiral map.
inline ModelParams to_delta_zero(const ModelParams& p) {
    return p.coupling_case == CouplingCase::DeltaZero ? p : chiral_transform(p);
}

/// Charge-conjugate problem: Sigma -> -Delta, Delta -> -Sigma, Vp fixed.
/// Every energy E of the original corresponds to -E of the image.
struct ConjugateProblem {
    ModelParams params;
    static double map_energy(double e) { return -e; }
};

inline ConjugateProblem charge_conjugate(const ModelParams& p) {
    ModelParams q = p;
    q.coupling_case = (p.coupling_case == CouplingCase::DeltaZero)
                          ? CouplingCase::SigmaZero
                          : CouplingCase::DeltaZero;
    q.c_sigma = -p.c_sigma;
    return ConjugateProblem{q};
}

namespace detail {
inline void require_delta_zero(const ModelParams& p, const char* who) {
    if (p.coupling_case != CouplingCase::DeltaZero)
        throw std::logic_error(std::string(who) +
                               ": requires the DeltaZero case; canonicalize with to_delta_zero()");
}
}  // namespace detail

/// Effective flat depth r = C_p^2 - C_Sigma (E + m) inside the well.
/// Its sign selects the well-like / double-delta / barrier-like regimes.
inline double r_parameter(const ModelParams& p, double energy) {
    detail::require_delta_zero(p, "r_parameter");
    return p.c_p * p.c_p - p.c_sigma * (energy + p.mass);
}

struct Regime {
    RegimeKind kind;
    double r_value;
};

inline Regime classify_regime(const ModelParams& p, double energy) {
    const double r = r_parameter(to_delta_zero(p), energy);
    RegimeKind k = r < 0.0   ? RegimeKind::WellLike
                   : r > 0.0 ? RegimeKind::BarrierLike
                             : RegimeKind::DoubleDelta;
    return Regime{k, r};
}

/// Complex wavenumbers at energy E. Outside the well k^2 = E^2 - m^2 with
/// k real >= 0 for |E| >= |m| and k = +i|k| for |E| < |m| (bound-state
/// prescription); inside eta^2 = k^2 - r, principal branch.
struct Kinematics {
    double energy;
    cplx k;
    cplx eta;
    double r;
};

inline Kinematics kinematics(const ModelParams& params, double energy) {
    const ModelParams p = to_delta_zero(params);
    if (energy == -p.mass)
        throw std::domain_error(
            "kinematics: E = -m is the isolated-solution sector, outside the "
            "Sturm-Liouville reduction");
    const double k2 = energy * energy - p.mass * p.mass;
    const cplx k = k2 >= 0.0 ? cplx(std::sqrt(k2), 0.0) : cplx(0.0, std::sqrt(-k2));
    const double r = r_parameter(p, energy);
    const cplx eta = std::sqrt(cplx(k2 - r, 0.0));
    return Kinematics{energy, k, eta, r};
}

/// Flat depth plus boundary delta strengths (-lambda at x=-a, +lambda at
/// x=+a) of the effective Sturm-Liouville potential.
struct EffectivePotential {
    double flat_depth;
    double delta_at_minus_a;
    double delta_at_plus_a;
};

inline EffectivePotential effective_potential(const ModelParams& p, double energy) {
    detail::require_delta_zero(p, "effective_potential");
    const double lam = p.delta_strength();
    return EffectivePotential{r_parameter(p, energy), -lam, +lam};
}

/// The unique energy with r = 0: E = C_p^2 / C_Sigma - m. Absent when
/// C_Sigma = 0 and C_p != 0 (r never vanishes); when both couplings vanish
/// r is identically zero and the flag is set instead.
struct R0Energy {
    std::optional<double> energy;
    bool r_vanishes_everywhere = false;
};

inline R0Energy r0_fixed_energy(const ModelParams& params) {
    const ModelParams p = to_delta_zero(params);
    if (p.c_sigma == 0.0) {
        if (p.c_p == 0.0) return R0Energy{std::nullopt, true};
        return R0Energy{std::nullopt, false};
    }
    return R0Energy{p.c_p * p.c_p / p.c_sigma - p.mass, false};
}

/// Group velocity dE/dk = k / sqrt(k^2 + m^2), signed by propagation
/// direction; defined only outside the gap.
inline double group_velocity(double energy, double mass, Direction dir = Direction::Right) {
    const double k2 = energy * energy - mass * mass;
    if (!(k2 > 0.0))
        throw std::domain_error("group_velocity: requires |E| > |m|");
    const double v = std::sqrt(k2) / std::abs(energy);
    return dir == Direction::Right ? v : -v;
}

namespace detail {

/// sin(z)/z, stable at z -> 0.
inline cplx sinc(cplx z) {
    if (std::abs(z) < 1e-4) {
        const cplx z2 = z * z;
        return 1.0 - z2 / 6.0 + z2 * z2 / 120.0 - z2 * z2 * z2 / 5040.0;
    }
    return std::sin(z) / z;
}

}  // namespace detail

}  // namespace diracsq
