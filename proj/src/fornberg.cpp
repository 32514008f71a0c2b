#include "fdkit/fornberg.hpp"

#include <algorithm>
#include <vector>

namespace fdkit {

WeightTable fornberg_weights(const Grid& grid, std::size_t order,
                             double center) {
    const std::size_t n = grid.size();
    if (n == 0 || order > n - 1)
        throw ArgumentError("fornberg_weights: need 0 <= order <= N-1");
    const auto& x = grid.points();

    // d[nu][m]: weight at node nu for the m-th derivative using the nodes
    // seen so far; updated in place as each node joins.
    WeightTable d(n, order, center);
    d(0, 0) = 1.0;
    double c1 = 1.0;
    double c4 = x[0] - center;
    for (std::size_t i = 1; i < n; ++i) {
        const std::size_t mn = std::min(i, order);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = x[i] - center;
        for (std::size_t j = 0; j < i; ++j) {
            const double c3 = x[i] - x[j];
            c2 *= c3;
            if (j == i - 1) {
                for (std::size_t m = mn; m >= 1; --m)
                    d(i, m) = c1 *
                              (static_cast<double>(m) * d(i - 1, m - 1) -
                               c5 * d(i - 1, m)) /
                              c2;
                d(i, 0) = -c1 * c5 * d(i - 1, 0) / c2;
            }
            for (std::size_t m = mn; m >= 1; --m)
                d(j, m) =
                    (c4 * d(j, m) - static_cast<double>(m) * d(j, m - 1)) / c3;
            d(j, 0) = c4 * d(j, 0) / c3;
        }
        c1 = c2;
    }
    return d;
}

}  // namespace fdkit
