#pragma once

// Small dense complex solver (Gaussian elimination, partial pivoting).
// The matching systems here are 2x2 and 4x4; a general library would be
// overkill and would not improve accuracy at these sizes.

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace diracsq::detail {

template <std::size_t N>
using Mat = std::array<std::array<std::complex<double>, N>, N>;

template <std::size_t N>
using Vec = std::array<std::complex<double>, N>;

struct SingularSystemError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <std::size_t N>
Vec<N> solve(Mat<N> a, Vec<N> b) {
    for (std::size_t col = 0; col < N; ++col) {
        std::size_t piv = col;
        double best = std::abs(a[col][col]);
        for (std::size_t row = col + 1; row < N; ++row) {
            const double m = std::abs(a[row][col]);
            if (m > best) { best = m; piv = row; }
        }
        if (!(best > 0.0))
            throw SingularSystemError("complex linear system is singular");
        if (piv != col) { std::swap(a[piv], a[col]); std::swap(b[piv], b[col]); }
        for (std::size_t row = col + 1; row < N; ++row) {
            const auto f = a[row][col] / a[col][col];
            if (f == std::complex<double>(0.0)) continue;
            for (std::size_t j = col; j < N; ++j) a[row][j] -= f * a[col][j];
            b[row] -= f * b[col];
        }
    }
    Vec<N> x{};
    for (std::size_t i = N; i-- > 0;) {
        auto s = b[i];
        for (std::size_t j = i + 1; j < N; ++j) s -= a[i][j] * x[j];
        x[i] = s / a[i][i];
    }
    return x;
}

template <std::size_t N>
std::complex<double> determinant(Mat<N> a) {
    std::complex<double> det = 1.0;
    for (std::size_t col = 0; col < N; ++col) {
        std::size_t piv = col;
        double best = std::abs(a[col][col]);
        for (std::size_t row = col + 1; row < N; ++row) {
            const double m = std::abs(a[row][col]);
            if (m > best) { best = m; piv = row; }
        }
        if (!(best > 0.0)) return 0.0;
        if (piv != col) { std::swap(a[piv], a[col]); det = -det; }
        det *= a[col][col];
        for (std::size_t row = col + 1; row < N; ++row) {
            const auto f = a[row][col] / a[col][col];
            for (std::size_t j = col; j < N; ++j) a[row][j] -= f * a[col][j];
        }
    }
    return det;
}

}  // namespace diracsq::detail
