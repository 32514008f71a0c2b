#pragma once

#include <cstddef>
#include <vector>

#include "fdkit/types.hpp"

namespace fdkit {

// Finite difference weights from left/right partial products of binomials.
// Each cardinal polynomial is the product of a prefix and a suffix, so its
// coefficients come from one truncated convolution and no back substitution
// ever happens. The object is re-centerable: the Lagrange weights are
// computed once in the constructor (the only N divisions), and moving the
// point of differentiation costs only additions and multiplications. This is
// the accuracy workhorse; derivative orders up to 16 stay accurate.
// Instances are not safe for concurrent mutation: parallel callers get one
// engine each (the Lagrange weights may be shared read-only).
class FdWeights {
public:
    /// Computes Lagrange weights and the table for derivatives at 0.
    /// Requires 0 <= order <= N-1.
    FdWeights(Grid grid, std::size_t order);

    /// Recompute the table for derivatives at z = center. Lagrange weights
    /// are reused, never recomputed.
    void set_center(double center);

    /// Same as set_center(grid[k]).
    void set_center_node(std::size_t k);

    /// Weight of f(z_k) for the m-th derivative at the current center.
    double weight(std::size_t m, std::size_t k) const;

    const WeightTable& table() const { return table_; }
    const Grid& grid() const { return grid_; }
    std::size_t order() const { return order_; }
    const std::vector<double>& lagrange() const { return lagrange_; }

private:
    Grid grid_;
    std::size_t order_ = 0;
    std::vector<double> lagrange_;
    // Coefficient rows of the prefix products l_k and suffix products r_k,
    // k = 0..N+1, each row holding the coefficients of 1, z, ..., z^M.
    // Rows l_0 and r_{N+1} are the constant polynomial 1 and never change.
    std::vector<double> left_;
    std::vector<double> right_;
    std::vector<double> shifted_;
    std::vector<double> conv_;
    WeightTable table_;
};

}  // namespace fdkit
