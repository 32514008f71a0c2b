// AVX2+FMA kernel variants. Compiled with -mavx2 -mfma in a separate
// translation unit; only reached through the dispatcher after the CPU check.

#if defined(__x86_64__)

#include <immintrin.h>

#include <cmath>
#include <cstddef>

#include "fdkit/kernels.hpp"

namespace fdkit::kernels {
namespace {

double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d swap = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, swap));
}

double hprod(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_mul_pd(lo, hi);
    __m128d swap = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_mul_sd(lo, swap));
}

// fnmadd(zeta, a[j], a[j-1]) matches the scalar kernel's fma bit for bit.
// Blocks run from high indices down so in-place calls stay correct: every
// block loads a[j0-1..j0+3] before storing b[j0..j0+3], and lower blocks
// are still untouched input.
void multbinom_avx2(const double* a, double* b, std::size_t len, double zeta) {
    if (len == 0) return;
    const __m256d vz = _mm256_set1_pd(zeta);
    std::size_t j = len - 1;
    while (j >= 4) {
        const std::size_t j0 = j - 3;
        __m256d cur = _mm256_loadu_pd(a + j0);
        __m256d prev = _mm256_loadu_pd(a + j0 - 1);
        _mm256_storeu_pd(b + j0, _mm256_fnmadd_pd(vz, cur, prev));
        j = j0 - 1;
    }
    for (; j > 0; --j) b[j] = std::fma(-zeta, a[j], a[j - 1]);
    b[0] = -zeta * a[0];
}

void convolve_avx2(const double* a, const double* b, double* c,
                   std::size_t len) {
    for (std::size_t m = 0; m < len; ++m) {
        double acc_tail = 0.0;
        std::size_t s = 0;
        if (m >= 7) {
            __m256d acc = _mm256_setzero_pd();
            for (; s + 4 <= m + 1; s += 4) {
                __m256d vb = _mm256_loadu_pd(b + s);
                __m256d va = _mm256_loadu_pd(a + (m - s - 3));
                va = _mm256_permute4x64_pd(va, 0x1B);  // reverse lanes
                acc = _mm256_fmadd_pd(va, vb, acc);
            }
            acc_tail = hsum(acc);
        }
        for (; s <= m; ++s) acc_tail += a[m - s] * b[s];
        c[m] = acc_tail;
    }
}

double product_avx2(const double* z, std::size_t from, std::size_t to,
                    double x) {
    std::size_t j = from;
    double p = 1.0;
    if (to >= from + 8) {
        const __m256d vx = _mm256_set1_pd(x);
        __m256d p0 = _mm256_set1_pd(1.0);
        __m256d p1 = _mm256_set1_pd(1.0);
        for (; j + 8 <= to; j += 8) {
            p0 = _mm256_mul_pd(p0, _mm256_sub_pd(vx, _mm256_loadu_pd(z + j)));
            p1 = _mm256_mul_pd(
                p1, _mm256_sub_pd(vx, _mm256_loadu_pd(z + j + 4)));
        }
        if (j + 4 <= to) {
            p0 = _mm256_mul_pd(p0, _mm256_sub_pd(vx, _mm256_loadu_pd(z + j)));
            j += 4;
        }
        p = hprod(_mm256_mul_pd(p0, p1));
    }
    for (; j < to; ++j) p *= x - z[j];
    return p;
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    double acc_tail = 0.0;
    if (n >= 8) {
        __m256d acc0 = _mm256_setzero_pd();
        __m256d acc1 = _mm256_setzero_pd();
        for (; i + 8 <= n; i += 8) {
            acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i),
                                   _mm256_loadu_pd(b + i), acc0);
            acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4),
                                   _mm256_loadu_pd(b + i + 4), acc1);
        }
        acc_tail = hsum(_mm256_add_pd(acc0, acc1));
    }
    for (; i < n; ++i) acc_tail += a[i] * b[i];
    return acc_tail;
}

}  // namespace

namespace detail {
const KernelSet avx2_set = {multbinom_avx2, convolve_avx2, product_avx2,
                            dot_avx2};
}

}  // namespace fdkit::kernels

#endif  // __x86_64__
