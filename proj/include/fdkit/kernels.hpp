#pragma once

#include <cstddef>

// Inner-loop arithmetic kernels. Scalar reference implementations always
// exist; on x86-64 an AVX2+FMA variant is selected at runtime when the CPU
// supports it. The environment variable FDKIT_KERNEL=scalar|avx2 overrides
// the automatic choice.

namespace fdkit::kernels {

enum class Isa { scalar, avx2 };

/// Instruction set the dispatched kernels currently use.
Isa active_isa();

/// Pin the kernel set; requesting an unsupported ISA keeps the scalar set
/// and returns false.
bool force_isa(Isa isa);

const char* isa_name(Isa isa);

// b[0] = -zeta*a[0];  b[j] = a[j-1] - zeta*a[j]  for j = 1..len-1.
// Coefficient update for multiplying a truncated polynomial by (z - zeta).
// a and b may be the same array; partial overlap is not supported.
void multbinom(const double* a, double* b, std::size_t len, double zeta);

// c[m] = sum_{s=0..m} a[m-s]*b[s]  for m = 0..len-1 (truncated product).
// c must not alias a or b.
void convolve_trunc(const double* a, const double* b, double* c,
                    std::size_t len);

// prod_{j in [from, to)} (x - z[j])
double product_of_differences(const double* z, std::size_t from,
                              std::size_t to, double x);

// sum_{i < n} a[i]*b[i]
double dot(const double* a, const double* b, std::size_t n);

namespace detail {
struct KernelSet {
    void (*multbinom)(const double*, double*, std::size_t, double);
    void (*convolve_trunc)(const double*, const double*, double*, std::size_t);
    double (*product_of_differences)(const double*, std::size_t, std::size_t,
                                     double);
    double (*dot)(const double*, const double*, std::size_t);
};
extern const KernelSet scalar_set;
#if defined(__x86_64__)
extern const KernelSet avx2_set;
#endif
}  // namespace detail

}  // namespace fdkit::kernels
