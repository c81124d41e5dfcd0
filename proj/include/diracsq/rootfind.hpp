#pragma once

// Bracketing + bisection utilities for the transcendental conditions.
// All residuals used here are pole-free (multiplied-through forms), so a
// sign change on a fine grid always brackets a genuine root.

#include <cmath>
#include <functional>
#include <vector>

namespace diracsq::detail {

inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     double flo, double tol = 1e-12) {
    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((flo < 0.0) != (fm < 0.0)) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

struct BracketScan {
    std::vector<double> roots;
    int bracket_count = 0;
    int grid_points = 0;
};

/// Uniform sign-change scan over (lo, hi) refined by bisection. The grid
/// density doubles until the root count has been stable twice in a row.
inline BracketScan bracketed_roots(const std::function<double(double)>& f, double lo,
                                   double hi, int base_points = 4001,
                                   int max_points = 128001, double tol = 1e-12) {
    BracketScan out;
    int stable = 0;
    std::size_t last_count = static_cast<std::size_t>(-1);
    for (int n = base_points; n <= max_points; n = 2 * n - 1) {
        std::vector<double> roots;
        int brackets = 0;
        const double h = (hi - lo) / (n - 1);
        double x0 = lo, f0 = f(x0);
        for (int i = 1; i < n; ++i) {
            const double x1 = lo + i * h;
            const double f1 = f(x1);
            if (f0 == 0.0) {
                roots.push_back(x0);
                ++brackets;
            } else if ((f0 < 0.0) != (f1 < 0.0)) {
                roots.push_back(bisect(f, x0, x1, f0, tol));
                ++brackets;
            }
            x0 = x1;
            f0 = f1;
        }
        out.roots = std::move(roots);
        out.bracket_count = brackets;
        out.grid_points = n;
        if (out.roots.size() == last_count) {
            if (++stable >= 2) break;
        } else {
            stable = 0;
        }
        last_count = out.roots.size();
    }
    return out;
}

}  // namespace diracsq::detail
