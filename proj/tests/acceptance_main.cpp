// Acceptance battery: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Each check is self-contained and uses library entry
// points only (criterion 13 shells out to the command-line binary).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "diracsq/crosscheck.hpp"

using namespace diracsq;
using clock_type = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int index, const char* label, bool ok, const std::string& detail = "") {
    std::printf("%s  criterion %2d  %s%s%s\n", ok ? "PASS" : "FAIL", index, label,
                detail.empty() ? "" : "  -- ", detail.c_str());
    if (!ok) ++failures;
}

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

std::vector<double> grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
    return g;
}

ModelParams params(double cs, double cp,
                   DeltaConvention conv = DeltaConvention::PaperHalf) {
    ModelParams p;
    p.c_sigma = cs;
    p.c_p = cp;
    p.delta_convention = conv;
    return p;
}

std::string devstr(double dev, double tol) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "max_dev %.3e (tol %.0e)", dev, tol);
    return buf;
}

}  // namespace

int main() {
    // 1. unitarity on random draws, |E| in (m, 10m], under 5 s
    {
        const auto t0 = clock_type::now();
        const CheckRecord c = checks::unitarity_random(20240817ULL, 1000);
        const double dt = seconds_since(t0);
        report(1, "unitarity |R+T-1| < 1e-10 on 1000 random draws, < 5 s",
               c.pass && dt < 5.0, devstr(c.max_dev, c.tol) + ", " + std::to_string(dt) + " s");
    }

    // 2. closed-form vs amplitude solve on the four profile sets, under 2 s
    {
        const auto t0 = clock_type::now();
        const CheckRecord c = checks::closed_form_agreement();
        const double dt = seconds_since(t0);
        report(2, "closed-form transmission matches the 4x4 solve < 1e-10, < 2 s",
               c.pass && dt < 2.0, devstr(c.max_dev, c.tol) + ", " + std::to_string(dt) + " s");
    }

    // 3. first-order oracle equivalence (transmission and bound spectra)
    {
        const CheckRecord ct = checks::oracle_transmission_agreement();
        const CheckRecord cb = checks::oracle_bound_agreement();
        report(3, "oracle transmission < 1e-8 and bound spectra < 1e-9 (DiracFull)",
               ct.pass && cb.pass,
               devstr(ct.max_dev, ct.tol) + "; bound " + devstr(cb.max_dev, cb.tol));
    }

    // 4. resonances: T = 1 at the quadratic-inversion energies, pi/2 spacing
    {
        const ModelParams p = params(1.0, 0.0);
        const ResonanceTable t = resonance_energies(p, 20);
        double worst = 0.0;
        std::vector<double> positive;
        for (const auto& e : t.entries) {
            for (std::size_t i = 0; i < e.energies.size(); ++i) {
                if (e.n >= 1 && e.n <= 5) worst = std::max(worst, std::abs(e.t_check[i] - 1.0));
                if (e.energies[i] > 0.0) positive.push_back(e.energies[i]);
            }
        }
        std::sort(positive.begin(), positive.end());
        const double spacing = positive.back() - positive[positive.size() - 2];
        const bool spacing_ok = std::abs(spacing - M_PI / 2.0) < 0.02 * (M_PI / 2.0);
        report(4, "resonance energies give |T-1| < 1e-9; spacing -> pi/2 within 2% by N=20",
               worst < 1e-9 && spacing_ok, devstr(worst, 1e-9));
    }

    // 5. free particle: T = 1 to machine precision
    {
        const ModelParams p = params(0.0, 0.0);
        double worst = 0.0;
        for (double e : grid(1.01, 50.0, 100))
            worst = std::max({worst, std::abs(solve_amplitudes(p, e).T - 1.0),
                              std::abs(solve_amplitudes(p, -e).T - 1.0)});
        report(5, "free particle |T-1| < 1e-14 on a 100-point grid", worst < 1e-14,
               devstr(worst, 1e-14));
    }

    // 6. everything is even in C_p
    {
        const CheckRecord c = checks::cp_sign_symmetry();
        report(6, "transmission and spectra invariant under C_p -> -C_p (< 1e-14)", c.pass,
               devstr(c.max_dev, c.tol));
    }

    // 7. bound spectrum empties sharply at C_p = sqrt(2 m C_sigma)
    {
        const CheckRecord c = checks::critical_threshold();
        const auto crit = critical_pseudoscalar(params(2.0, 0.0));
        const bool formula = crit.c_p_critical && std::abs(*crit.c_p_critical - 2.0) < 1e-14;
        report(7, "spectrum nonempty at C_p=1.99, empty at 2.01 and for C_sigma=-1",
               c.pass && formula);
    }

    // 8. C_p = 0 equals the even/odd finite well; reference digits for C_sigma=2
    {
        const CheckRecord c = checks::parity_equivalence_cp0();
        const auto two = find_bound_states(params(2.0, 0.0)).energies;
        const bool ref = two.size() == 2 && std::abs(two[0] - (-0.14)) < 1e-2 &&
                         std::abs(two[1] - 0.85) < 1e-2;
        report(8, "C_p=0 spectra equal parity-resolved well roots < 1e-10; levels near -0.14, 0.85",
               c.pass && ref, devstr(c.max_dev, c.tol));
    }

    // 9. r = 0 no-binding: the double-delta condition residual is claimed to
    // be single-signed on |k| in (0, m]. Checked as stated; the residual in
    // fact changes sign (the pure double-delta pair does bind), so this
    // criterion records a genuine defect of the source model.
    {
        const R0BoundVerdict v = r0_bound_check(params(2.0, 2.0), 1.0, 10000);
        std::string detail = "residual single-signed: ";
        detail += v.single_signed ? "yes" : "no";
        if (!v.sign_change_k.empty())
            detail += ", sign change at |k| = " + std::to_string(v.sign_change_k.front());
        report(9, "r=0 double-delta residual single-signed on |k| in (0, m]", v.single_signed,
               detail);
    }

    // 10. no total reflection; near-unit transmission at high energy
    {
        double min_t = 1.0;
        bool high_ok = true;
        for (auto [cp, cs] : checks::profile_sets()) {
            const ModelParams p = params(cs, cp);
            for (const auto& pt : transmission_scan(p, grid(-10.0, 10.0, 2001)))
                if (pt.transmission) min_t = std::min(min_t, *pt.transmission);
            if (solve_amplitudes(p, 100.0).T <= 0.999) high_ok = false;
        }
        {  // transmission along the r = 0 locus, C_sigma = 2
            ModelParams p = params(2.0, 0.0);
            for (double cp : grid(-5.0, 5.0, 1001)) {
                p.c_p = cp;
                const R0Energy e0 = r0_fixed_energy(p);
                if (e0.energy && std::abs(*e0.energy) > 1.0)
                    min_t = std::min(min_t, solve_amplitudes(p, *e0.energy).T);
            }
        }
        report(10, "min T > 0 over all reference datasets; T(E=100) > 0.999",
               min_t > 0.0 && high_ok, "min T = " + std::to_string(min_t));
    }

    // 11. currents and normalization
    {
        const CheckRecord cj = checks::current_uniformity_spinor();
        const CheckRecord cn = checks::bound_normalization();
        const CheckRecord cz = checks::bound_current_zero();
        report(11, "J1 uniform < 1e-8; bound integral(J0) = 1 < 1e-8; bound J1 < 1e-10",
               cj.pass && cn.pass && cz.pass,
               devstr(cj.max_dev, cj.tol) + "; norm " + devstr(cn.max_dev, cn.tol));
    }

    // 12. discrete symmetry maps
    {
        const CheckRecord cc = checks::charge_conjugation_spectrum();
        const CheckRecord ch = checks::chiral_substitution_spectrum();
        report(12, "charge-conjugation and chiral-substitution spectra agree < 1e-9",
               cc.pass && ch.pass,
               devstr(cc.max_dev, cc.tol) + "; chiral " + devstr(ch.max_dev, ch.tol));
    }

    // 13. the full crosscheck command: exit 0 in under 60 s
    {
        const auto t0 = clock_type::now();
        const std::string cmd =
            std::string(DIRACSQ_CLI_PATH) + " crosscheck > /dev/null 2> /dev/null";
        const int status = std::system(cmd.c_str());
        const double dt = seconds_since(t0);
        report(13, "crosscheck command exits 0 in under 60 s",
               WEXITSTATUS(status) == 0 && dt < 60.0, std::to_string(dt) + " s");
    }

    std::printf("%d of 13 criteria passed\n", 13 - failures);
    return failures == 0 ? 0 : 1;
}
