#include "fdkit/superconv.hpp"

#include <cmath>
#include <string>

#include "fdkit/kernels.hpp"
#include "fdkit/numkernel.hpp"

namespace fdkit {

namespace {

double factorial(std::size_t n) {
    double f = 1.0;
    for (std::size_t i = 2; i <= n; ++i) f *= static_cast<double>(i);
    return f;
}

// sum_k w_{k,m} z_k^p, plus the sum of absolute terms for conditioning.
struct SignedSum {
    double value;
    double magnitude;
};

SignedSum weighted_power_sum(const Grid& grid, const WeightTable& w,
                             std::size_t m, std::size_t p) {
    SignedSum out{0.0, 0.0};
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double term = w(k, m) * std::pow(grid[k], static_cast<double>(p));
        out.value += term;
        out.magnitude += std::abs(term);
    }
    return out;
}

}  // namespace

BoostDetection detect_boost(const Grid& grid, std::size_t m, double tau) {
    const std::size_t n = grid.size();
    if (n == 0 || m < 1 || m > n - 1)
        throw ArgumentError("detect_boost: need 1 <= m <= N-1");
    if (tau <= 0.0) throw ArgumentError("detect_boost: tau must be positive");

    BoostDetection result;
    // The chain can be at most m long even for complex grids; probe that far
    // and let the real-grid cap be checked rather than assumed.
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t p = n - m + i;
        const SymmetricSums sums = elementary_symmetric(grid, p);
        result.probes.push_back({p, sums.s, sums.t});
        if (std::abs(sums.s) < tau * sums.t)
            ++result.raw_boost;
        else
            break;
    }
    result.boost = result.raw_boost;
    if (result.boost > 1) {
        result.boost = 1;
        result.real_cap_applied = true;
    }
    return result;
}

AccuracyReport analyze(const Grid& grid, std::size_t m,
                       const WeightTable& weights, double tau) {
    const std::size_t n = grid.size();
    if (m < 1) throw ArgumentError("analyze: m = 0 is interpolation");
    if (weights.size() != n || weights.order() < m)
        throw ArgumentError("analyze: weights do not match grid and m");

    // The table's expansion point is the origin of the analysis.
    const Grid local =
        weights.center() == 0.0 ? grid : grid.shifted(weights.center());

    const BoostDetection detection = detect_boost(local, m, tau);
    const std::size_t r = n - m + static_cast<std::size_t>(detection.boost);

    const SignedSum c = weighted_power_sum(local, weights, m, r + m);
    if (std::abs(c.value) < tau * c.magnitude) {
        const std::string msg =
            "analyze: error constant " + to_shortest(c.value) +
            " at order r=" + std::to_string(r) +
            " is below noise (tau=" + to_shortest(tau) +
            "); candidate orders r=" + std::to_string(r) + " and r=" +
            std::to_string(r + 1) + " cannot be distinguished";
        throw DegenerateConstantError(msg);
    }

    AccuracyReport report;
    report.m = m;
    report.n = n;
    report.base_order = n - m;
    report.boost = detection.boost;
    report.order = r;
    report.error_constant = c.value;
    report.tau = tau;
    report.s_values = detection.probes;
    report.leading_term = to_shortest(c.value) + " * f^(" +
                          std::to_string(r + m) + ")(0) / " +
                          std::to_string(r + m) + "! * h^" + std::to_string(r);
    report.mean_value_remark =
        "conjecture: error equals " + to_shortest(c.value) + " * f^(" +
        std::to_string(r + m) + ")(zeta) / " + std::to_string(r + m) +
        "! * h^" + std::to_string(r) +
        " for some zeta in an interval containing 0 and the grid";
    return report;
}

nlohmann::json AccuracyReport::to_json() const {
    nlohmann::json probes = nlohmann::json::array();
    for (const BoostProbe& p : s_values)
        probes.push_back({{"p", p.p}, {"s", p.s}, {"t", p.t}});
    return {{"m", m},
            {"n", n},
            {"base_order", base_order},
            {"boost", boost},
            {"order", order},
            {"error_constant", error_constant},
            {"leading_term", leading_term},
            {"mean_value_remark", mean_value_remark},
            {"tau", tau},
            {"s_values", std::move(probes)}};
}

MomentResiduals moment_residuals(const Grid& grid, const WeightTable& weights,
                                 std::size_t m) {
    const std::size_t n = grid.size();
    if (weights.size() != n || weights.order() < m)
        throw ArgumentError("moment_residuals: weights must span orders >= m");
    const Grid local =
        weights.center() == 0.0 ? grid : grid.shifted(weights.center());

    std::vector<double> wm(n);
    for (std::size_t k = 0; k < n; ++k) wm[k] = weights(k, m);
    std::vector<double> powers(n, 1.0);

    MomentResiduals out;
    out.residuals.reserve(n);
    for (std::size_t p = 0; p < n; ++p) {
        const double target = p == m ? factorial(m) : 0.0;
        out.residuals.push_back(
            std::abs(kernels::dot(wm.data(), powers.data(), n) - target));
        for (std::size_t k = 0; k < n; ++k) powers[k] *= local[k];
    }
    // powers now holds z^N; the probe exponents are N-1+beta, beta=1..m+1.
    out.probes.reserve(m + 1);
    for (std::size_t beta = 1; beta <= m + 1; ++beta) {
        out.probes.push_back(kernels::dot(wm.data(), powers.data(), n));
        for (std::size_t k = 0; k < n; ++k) powers[k] *= local[k];
    }
    return out;
}

}  // namespace fdkit
