#include "fdkit/weights_partial.hpp"

#include <string>

#include "fdkit/kernels.hpp"
#include "fdkit/numkernel.hpp"

namespace fdkit {

FdWeights::FdWeights(Grid grid, std::size_t order)
    : grid_(std::move(grid)), order_(order) {
    const std::size_t n = grid_.size();
    if (n == 0 || order_ > n - 1)
        throw ArgumentError("FdWeights: need 0 <= order <= N-1");
    lagrange_ = lagrange_weights(grid_);

    const std::size_t width = order_ + 1;
    left_.assign((n + 2) * width, 0.0);
    right_.assign((n + 2) * width, 0.0);
    left_[0] = 1.0;
    right_[(n + 1) * width] = 1.0;
    shifted_.resize(n);
    conv_.resize(width);

    set_center(0.0);
}

void FdWeights::set_center(double center) {
    const std::size_t n = grid_.size();
    const std::size_t width = order_ + 1;
    for (std::size_t k = 0; k < n; ++k) shifted_[k] = grid_[k] - center;

    // Prefix rows ascending, suffix rows descending; row k of either table
    // absorbs the binomial of shifted point k-1 (rows are 1-based, with the
    // constant rows 0 and N+1 fixed).
    for (std::size_t k = 1; k <= n; ++k)
        kernels::multbinom(&left_[(k - 1) * width], &left_[k * width], width,
                           shifted_[k - 1]);
    for (std::size_t k = n; k >= 1; --k)
        kernels::multbinom(&right_[(k + 1) * width], &right_[k * width], width,
                           shifted_[k - 1]);

    table_ = WeightTable(n, order_, center);
    for (std::size_t k = 1; k <= n; ++k) {
        kernels::convolve_trunc(&left_[(k - 1) * width],
                                &right_[(k + 1) * width], conv_.data(), width);
        double f = lagrange_[k - 1];
        const auto node = table_.node(k - 1);
        for (std::size_t m = 0; m < width; ++m) {
            node[m] = f * conv_[m];
            f *= static_cast<double>(m + 1);
        }
    }
}

void FdWeights::set_center_node(std::size_t k) {
    if (k >= grid_.size())
        throw ArgumentError("set_center_node: node index " +
                            std::to_string(k) + " out of range");
    set_center(grid_[k]);
}

double FdWeights::weight(std::size_t m, std::size_t k) const {
    if (m > order_ || k >= grid_.size())
        throw ArgumentError("weight: order or node index out of range");
    return table_(k, m);
}

}  // namespace fdkit
