#pragma once

// Test-only helpers: deterministic random grids and an exact rational solve
// of the moment conditions. The rational solver is deliberately independent
// of the library (different algorithm, different arithmetic backend) so it
// can serve as an oracle for the weight routines.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace testsup {

using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Exact weights w[k][m], m = 0..order, for derivatives at `center`, by
/// Gaussian elimination on the transposed Vandermonde system in exact
/// rational arithmetic. Every double is an exact rational, so this is exact
/// for any double grid.
inline std::vector<std::vector<Rational>> exact_weights_rational(
    const std::vector<double>& grid, std::size_t order, double center = 0.0) {
    const std::size_t n = grid.size();
    if (n == 0 || order > n - 1)
        throw std::invalid_argument("exact_weights_rational: bad order");

    // Augmented system: rows are moment conditions sum_k w_km x_k^p = m! d_pm.
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    std::vector<std::vector<Rational>> rhs(
        n, std::vector<Rational>(order + 1, Rational(0)));
    for (std::size_t k = 0; k < n; ++k) {
        const Rational x = Rational(grid[k]) - Rational(center);
        Rational p(1);
        for (std::size_t row = 0; row < n; ++row) {
            a[row][k] = p;
            p *= x;
        }
    }
    Rational fact(1);
    for (std::size_t m = 0; m <= order; ++m) {
        if (m > 0) fact *= Rational(static_cast<int>(m));
        rhs[m][m] = fact;
    }

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n)
            throw std::runtime_error("singular moment system (duplicates?)");
        std::swap(a[piv], a[col]);
        std::swap(rhs[piv], rhs[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            const Rational f = a[row][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
            for (std::size_t m = 0; m <= order; ++m)
                rhs[row][m] -= f * rhs[col][m];
        }
    }

    std::vector<std::vector<Rational>> w(n,
                                         std::vector<Rational>(order + 1));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t m = 0; m <= order; ++m)
            w[k][m] = rhs[k][m] / a[k][k];
    return w;
}

/// n distinct points, uniform in [lo, hi], redrawn until every pair is at
/// least min_sep apart and every point at least zero_floor away from 0.
inline std::vector<double> random_grid(std::mt19937_64& rng, std::size_t n,
                                       double lo = -2.0, double hi = 2.0,
                                       double min_sep = 1e-2,
                                       double zero_floor = 0.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<double> pts(n);
    for (;;) {
        for (double& p : pts) p = dist(rng);
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            if (std::abs(pts[i]) < zero_floor) ok = false;
            for (std::size_t j = i + 1; j < n && ok; ++j)
                if (std::abs(pts[i] - pts[j]) < min_sep) ok = false;
        }
        if (ok) return pts;
    }
}

/// "Well-scaled" grid: comfortably separated points of moderate magnitude,
/// bounded away from the expansion point at 0. The envelope where the
/// double-precision weight algorithms are expected at full accuracy.
/// Built by distributing the slack left to right (rejection would be far
/// too slow at this separation), then redrawn if a point lands near 0.
inline std::vector<double> well_scaled_grid(std::mt19937_64& rng,
                                            std::size_t n,
                                            double sep = 0.25,
                                            double zero_floor = 0.2) {
    const double lo = -2.0, hi = 2.0;
    const double slack = (hi - lo) - sep * static_cast<double>(n - 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> pts(n);
    for (;;) {
        std::vector<double> u(n);
        for (double& x : u) x = unit(rng);
        std::sort(u.begin(), u.end());
        bool ok = true;
        for (std::size_t i = 0; i < n; ++i) {
            pts[i] = lo + slack * u[i] + sep * static_cast<double>(i);
            if (std::abs(pts[i]) < zero_floor) ok = false;
        }
        if (ok) return pts;
    }
}

inline double rel_diff(double a, double b) {
    const double denom = std::max(std::abs(a), std::abs(b));
    return denom == 0.0 ? 0.0 : std::abs(a - b) / denom;
}

}  // namespace testsup
