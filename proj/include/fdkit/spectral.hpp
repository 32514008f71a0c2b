#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include <json.hpp>

#include "fdkit/numkernel.hpp"
#include "fdkit/types.hpp"

namespace fdkit {

enum class WeightAlgorithm { partial, mlagrange, fornberg };

const char* algorithm_name(WeightAlgorithm alg);
WeightAlgorithm algorithm_from_name(const std::string& name);

/// N x N spectral differentiation matrix of one derivative order:
/// f^(M)(z_i) ~= sum_j entry(i, j) * f(z_j). Row i is the order-M row of the
/// weight table centered at z_i.
struct DiffMatrix {
    std::size_t n = 0;
    std::size_t order = 0;
    Grid grid;
    std::vector<double> entries;  // row-major

    double operator()(std::size_t i, std::size_t j) const {
        return entries[i * n + j];
    }
    double& operator()(std::size_t i, std::size_t j) {
        return entries[i * n + j];
    }

    /// Row-major CSV, every value in shortest round-trippable form.
    void write_csv(std::ostream& out) const;
    nlohmann::json to_json() const;
};

/// Chebyshev points cos((k-1)pi/(N-1)) for k = 1..N, evaluated through the
/// equivalent sine expression so the grid is exactly antisymmetric about 0,
/// then permuted per `ordering`. Requires N >= 2.
Grid chebyshev_grid(std::size_t n,
                    RootOrdering ordering = RootOrdering::natural);

/// Differentiation matrix in the node order of `grid`. The partial-products
/// algorithm re-centers one engine per row so Lagrange weights are computed
/// once; the other algorithms compute each row independently.
DiffMatrix diff_matrix(const Grid& grid, std::size_t order,
                       WeightAlgorithm alg = WeightAlgorithm::partial);

/// Chebyshev differentiation matrix reported in natural node order.
/// Internally the points are reordered (bit reversal for power-of-two N,
/// Leja otherwise) and dilated by 2 so the Lagrange weights cannot
/// underflow; the dilation is undone through rescale_weights' identity.
DiffMatrix chebyshev_diff_matrix(std::size_t n, std::size_t order,
                                 WeightAlgorithm alg = WeightAlgorithm::partial);

/// Given the table for the dilated grid c*z, returns the table for z:
/// w_m(z) = c^m w_m(c z), center divided by c. Requires c != 0.
WeightTable rescale_weights(const WeightTable& table, double c);

}  // namespace fdkit
