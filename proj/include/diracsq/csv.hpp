#pragma once

// CSV emission at full double precision (17 significant digits) so plot and
// regression paths share one artifact. Absent values are empty fields.

#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "diracsq/bound.hpp"
#include "diracsq/oracle.hpp"
#include "diracsq/scattering.hpp"

namespace diracsq::csv {

inline std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string num(const std::optional<double>& v) { return v ? num(*v) : std::string(); }

inline void write_scan(std::ostream& os, const std::vector<ScanPoint>& scan) {
    os << "energy,transmission,reflection\n";
    for (const auto& p : scan)
        os << num(p.energy) << ',' << num(p.transmission) << ',' << num(p.reflection) << '\n';
}

inline void write_resonances(std::ostream& os, const ResonanceTable& table) {
    os << "N,eta_res,energy,transmission\n";
    for (const auto& e : table.entries) {
        if (e.energies.empty()) {
            os << e.n << ',' << num(e.eta_res) << ",,\n";
            continue;
        }
        for (std::size_t i = 0; i < e.energies.size(); ++i)
            os << e.n << ',' << num(e.eta_res) << ',' << num(e.energies[i]) << ','
               << num(e.t_check[i]) << '\n';
    }
}

inline void write_bound(std::ostream& os, const BoundSpectrum& spec) {
    os << "level_index,energy,parity\n";
    for (std::size_t i = 0; i < spec.energies.size(); ++i) {
        os << i << ',' << num(spec.energies[i]) << ',';
        if (spec.parities)
            os << ((*spec.parities)[i] == Parity::Even ? "even" : "odd");
        os << '\n';
    }
}

inline void write_sweep(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << "sweep_value,level_index,energy\n";
    for (const auto& r : rows)
        os << num(r.sweep_value) << ',' << r.level_index << ',' << num(r.energy) << '\n';
}

inline void write_spinor(std::ostream& os, const SpinorSample& s) {
    os << "x,re_psi_plus,im_psi_plus,re_psi_minus,im_psi_minus,j0,j1\n";
    for (std::size_t i = 0; i < s.x.size(); ++i)
        os << num(s.x[i]) << ',' << num(s.psi_plus[i].real()) << ','
           << num(s.psi_plus[i].imag()) << ',' << num(s.psi_minus[i].real()) << ','
           << num(s.psi_minus[i].imag()) << ',' << num(s.j0[i]) << ',' << num(s.j1[i])
           << '\n';
}

}  // namespace diracsq::csv
