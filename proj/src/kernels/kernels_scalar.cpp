#include <cmath>
#include <cstddef>

#include "fdkit/kernels.hpp"

// Reference kernels. These define the semantics the SIMD variants are
// tested against: multbinom is elementwise with a fused multiply-add per
// coefficient, so the AVX2 variant reproduces it bit for bit; the reductions
// (convolve, products, dot) fix only the mathematical value, not the
// association order.

namespace fdkit::kernels {
namespace {

void multbinom_scalar(const double* a, double* b, std::size_t len,
                      double zeta) {
    if (len == 0) return;
    // Descending j keeps the update correct when b aliases a.
    for (std::size_t j = len - 1; j > 0; --j)
        b[j] = std::fma(-zeta, a[j], a[j - 1]);
    b[0] = -zeta * a[0];
}

void convolve_scalar(const double* a, const double* b, double* c,
                     std::size_t len) {
    for (std::size_t m = 0; m < len; ++m) {
        double acc = 0.0;
        for (std::size_t s = 0; s <= m; ++s) acc += a[m - s] * b[s];
        c[m] = acc;
    }
}

double product_scalar(const double* z, std::size_t from, std::size_t to,
                      double x) {
    double p = 1.0;
    for (std::size_t j = from; j < to; ++j) p *= x - z[j];
    return p;
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

}  // namespace

namespace detail {
const KernelSet scalar_set = {multbinom_scalar, convolve_scalar,
                              product_scalar, dot_scalar};
}

}  // namespace fdkit::kernels
