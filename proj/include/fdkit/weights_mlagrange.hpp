#pragma once

#include <span>
#include <vector>

#include "fdkit/types.hpp"

// Finite difference weights through the modified Lagrange formula: build the
// coefficients of the full nodal polynomial once, recover each cardinal
// polynomial's coefficients by back substitution, then apply the factorial
// and Lagrange-weight scaling. Cheap (2N^2 + 6MN operations, 2N divisions)
// but the back-substitution step limits it to derivative orders M <= 4 or so.

namespace fdkit::mlagrange {

/// Coefficients C_0..C_{M+1} of prod_k (z - z_k). Requires 0 <= M <= N-1.
std::vector<double> find_c(const Grid& grid, std::size_t order);

/// Coefficients c_{k,0}..c_{k,M} of pi_k(z) = pi*(z)/(z - z_k) given the
/// C_0..C_{M+1} of pi*. The z_k = 0 node reads them off directly; any other
/// node back-substitutes with a single reciprocal of z_k.
std::vector<double> find_ckm(double z_k, std::span<const double> c_star);

/// w_{k,m} = m! * w_k * c_{k,m}, factorial kept as a running factor.
std::vector<double> scale_weights(std::span<const double> ckm,
                                  double lagrange_weight);

/// Full weight table for derivatives at `center`, orders 0..M.
WeightTable all_weights(const Grid& grid, std::size_t order,
                        double center = 0.0);

}  // namespace fdkit::mlagrange
