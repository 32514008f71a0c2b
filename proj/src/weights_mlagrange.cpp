#include "fdkit/weights_mlagrange.hpp"

#include "fdkit/kernels.hpp"
#include "fdkit/numkernel.hpp"

namespace fdkit::mlagrange {

std::vector<double> find_c(const Grid& grid, std::size_t order) {
    const std::size_t n = grid.size();
    if (n == 0 || order > n - 1)
        throw ArgumentError("find_c: need 0 <= M <= N-1");
    std::vector<double> c(order + 2, 0.0);
    c[0] = 1.0;
    for (std::size_t j = 0; j < n; ++j)
        kernels::multbinom(c.data(), c.data(), c.size(), grid[j]);
    return c;
}

std::vector<double> find_ckm(double z_k, std::span<const double> c_star) {
    if (c_star.size() < 2)
        throw ArgumentError("find_ckm: C must hold at least C_0, C_1");
    const std::size_t order = c_star.size() - 2;
    std::vector<double> c(order + 1);
    if (z_k == 0.0) {
        for (std::size_t m = 0; m <= order; ++m) c[m] = c_star[m + 1];
        return c;
    }
    const double zeta = 1.0 / z_k;
    c[0] = -zeta * c_star[0];
    for (std::size_t m = 1; m <= order; ++m)
        c[m] = zeta * (c[m - 1] - c_star[m]);
    return c;
}

std::vector<double> scale_weights(std::span<const double> ckm,
                                  double lagrange_weight) {
    std::vector<double> w(ckm.size());
    double f = lagrange_weight;
    for (std::size_t m = 0; m < ckm.size(); ++m) {
        w[m] = f * ckm[m];
        f *= static_cast<double>(m + 1);
    }
    return w;
}

WeightTable all_weights(const Grid& grid, std::size_t order, double center) {
    const Grid shifted = grid.shifted(center);
    const std::vector<double> lw = lagrange_weights(shifted);
    const std::vector<double> c_star = find_c(shifted, order);

    WeightTable table(grid.size(), order, center);
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const std::vector<double> ckm = find_ckm(shifted[k], c_star);
        const std::vector<double> wk = scale_weights(ckm, lw[k]);
        std::copy(wk.begin(), wk.end(), table.node(k).begin());
    }
    return table;
}

}  // namespace fdkit::mlagrange
