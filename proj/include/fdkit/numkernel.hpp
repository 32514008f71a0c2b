#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "fdkit/types.hpp"

// Scalar, grid, and polynomial primitives shared by the weight algorithms:
// binomial multiplication, truncated convolution, Lagrange weights, root
// orderings, elementary symmetric functions, and Newton-identities
// coefficients. Polynomials are coefficient vectors c_0..c_D (coefficient
// of z^j at index j). Complex scalars appear only in the root-to-coefficient
// routines; everything grid- or weight-related is real.

namespace fdkit {

enum class RootOrdering { natural, bit_reversed, leja };

/// A permutation of {0..n-1}: position i of the reordered sequence holds
/// element perm[i] of the original one.
struct OrderingResult {
    std::vector<std::size_t> perm;
    /// Bit reversal was requested for a length that is not a power of two;
    /// the permutation is a Leja ordering instead.
    bool leja_fallback = false;
};

/// w_k = 1 / prod_{j != k} (z_k - z_j). The empty product makes w = (1)
/// for a single-point grid.
std::vector<double> lagrange_weights(const Grid& grid);

/// Number of lagrange_weights evaluations so far (test instrumentation).
std::uint64_t lagrange_weight_call_count();

/// Coefficients of (z - zeta) * a truncated at the degree cap of a.
std::vector<double> multbinom(const std::vector<double>& a, double zeta);
std::vector<std::complex<double>> multbinom(
    const std::vector<std::complex<double>>& a, std::complex<double> zeta);

/// c_m = sum_{s=0..m} a_{m-s} b_s for m = 0..cap.
std::vector<double> convolve_trunc(std::span<const double> a,
                                   std::span<const double> b,
                                   std::size_t cap);

inline constexpr int kFullDegree = -1;

/// Coefficients of prod_k (z - roots[k]) up to z^cap (all N+1 of them for
/// kFullDegree), by repeated binomial multiplication after permuting the
/// roots. Duplicate roots are legal here.
template <typename T>
std::vector<T> poly_from_roots(const std::vector<T>& roots,
                               RootOrdering ordering, int cap = kFullDegree);

/// Bit-reversal permutation of {0..n-1}; its own inverse. For n that is not
/// a power of two there is no bit reversal, so the result falls back to the
/// Leja ordering (of `points` when given, of the index values otherwise)
/// and says so.
OrderingResult order_bit_reversed(std::size_t n);
template <typename T>
OrderingResult order_bit_reversed(std::span<const T> points);

/// Greedy Leja ordering: start from the point of largest magnitude, then
/// repeatedly take the point maximizing the product of distances to the
/// points already chosen. Ties break toward the lowest original index.
template <typename T>
std::vector<std::size_t> order_leja(std::span<const T> points);

/// Coefficients c_0..c_cap of prod_k (z - roots[k]) from inverse power sums
/// (compensated summation) and the Newton identities. Requires nonzero
/// roots; needs no root ordering.
template <typename T>
std::vector<T> coeffs_via_newton_identities(const std::vector<T>& roots,
                                            std::size_t cap);

struct SymmetricSums {
    double s = 1.0;  // S_p: sum of all products of p distinct grid points
    double t = 1.0;  // T_p: same sum over the absolute values
};

/// S_p and T_p by the O(N*p) coefficient recursion (never by enumerating
/// subsets). p = 0 gives the empty-product convention (1, 1).
SymmetricSums elementary_symmetric(const Grid& grid, std::size_t p);

}  // namespace fdkit
