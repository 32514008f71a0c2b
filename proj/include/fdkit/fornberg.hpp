#pragma once

#include <cstddef>

#include "fdkit/types.hpp"

namespace fdkit {

/// Fornberg's classical recurrences, kept as the cross-validation baseline.
/// Builds the weights up over partial grids z_1..z_k and returns the table
/// for the full grid, orders 0..M. Requires 0 <= order <= N-1.
WeightTable fornberg_weights(const Grid& grid, std::size_t order,
                             double center = 0.0);

}  // namespace fdkit
