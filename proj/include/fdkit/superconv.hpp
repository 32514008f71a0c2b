#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "fdkit/types.hpp"

// Detection of boosted order of accuracy. A stencil on N points for the m-th
// derivative is generically O(h^(N-m)); the order is boosted by b exactly
// when the elementary symmetric functions S_{N-m}, ..., S_{N-m+b-1} of the
// grid points all vanish. Real grids can never be boosted by more than 1.

namespace fdkit {

/// Relative tolerance used to call an S_p zero: |S_p| < tau * T_p.
inline constexpr double kDefaultBoostTol =
    1000.0 * std::numeric_limits<double>::epsilon();

struct BoostProbe {
    std::size_t p = 0;  // which elementary symmetric function
    double s = 0.0;
    double t = 0.0;
};

struct BoostDetection {
    int boost = 0;      // after the real-grid cap
    int raw_boost = 0;  // length of the vanishing chain before capping
    /// S_{N-m} .. S_{N-m+boost} (the vanishing chain plus the probe that
    /// ended it, when one was inspected), with their T counterparts.
    std::vector<BoostProbe> probes;
    /// The numerical test claimed a chain of length >= 2 on a real grid,
    /// which the theory rules out; treated as a tolerance artifact and
    /// clamped to 1.
    bool real_cap_applied = false;
};

/// Largest b with S_{N-m+i} numerically zero for i = 0..b-1, probed up to
/// b = m and capped at 1 for real grids. Requires 1 <= m <= N-1.
BoostDetection detect_boost(const Grid& grid, std::size_t m,
                            double tau = kDefaultBoostTol);

struct AccuracyReport {
    std::size_t m = 0;           // derivative order
    std::size_t n = 0;           // grid size
    std::size_t base_order = 0;  // N - m
    int boost = 0;
    std::size_t order = 0;       // r = N - m + boost
    double error_constant = 0.0; // C = sum_k w_{k,m} z_k^(r+m)
    std::string leading_term;    // C f^(r+m)(0)/(r+m)! h^r, rendered
    std::string mean_value_remark;
    double tau = kDefaultBoostTol;
    std::vector<BoostProbe> s_values;

    nlohmann::json to_json() const;
};

/// Order of accuracy and leading error term of a stencil, from the boost
/// test plus the error-constant sum. The weights must belong to this grid
/// and span orders >= m. Throws DegenerateConstantError when C is
/// indistinguishable from rounding noise at tolerance tau.
AccuracyReport analyze(const Grid& grid, std::size_t m,
                       const WeightTable& weights,
                       double tau = kDefaultBoostTol);

struct MomentResiduals {
    /// |sum_k w_{k,m} z_k^n - m! delta_{n,m}| for n = 0..N-1.
    std::vector<double> residuals;
    /// sum_k w_{k,m} z_k^(N-1+beta) for beta = 1..m+1 (signed); the first
    /// nonzero probe is the error constant.
    std::vector<double> probes;
};

/// Residuals of the defining moment conditions plus the boost probes.
/// Accepts m = 0 (interpolation), unlike detect_boost/analyze.
MomentResiduals moment_residuals(const Grid& grid, const WeightTable& weights,
                                 std::size_t m);

}  // namespace fdkit
