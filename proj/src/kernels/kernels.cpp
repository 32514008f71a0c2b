#include "fdkit/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace fdkit::kernels {
namespace {

bool avx2_available() {
#if defined(__x86_64__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

struct Dispatch {
    const detail::KernelSet* set;
    Isa isa;
};

Dispatch initial_dispatch() {
    bool want_avx2 = avx2_available();
    if (const char* env = std::getenv("FDKIT_KERNEL")) {
        if (std::strcmp(env, "scalar") == 0) want_avx2 = false;
        // "avx2" keeps the CPU-derived answer; anything else is ignored.
    }
#if defined(__x86_64__)
    if (want_avx2) return {&detail::avx2_set, Isa::avx2};
#endif
    return {&detail::scalar_set, Isa::scalar};
}

Dispatch& dispatch() {
    static Dispatch d = initial_dispatch();
    return d;
}

}  // namespace

Isa active_isa() { return dispatch().isa; }

bool force_isa(Isa isa) {
#if defined(__x86_64__)
    if (isa == Isa::avx2 && avx2_available()) {
        dispatch() = {&detail::avx2_set, Isa::avx2};
        return true;
    }
#endif
    dispatch() = {&detail::scalar_set, Isa::scalar};
    return isa == Isa::scalar;
}

const char* isa_name(Isa isa) {
    return isa == Isa::avx2 ? "avx2" : "scalar";
}

void multbinom(const double* a, double* b, std::size_t len, double zeta) {
    dispatch().set->multbinom(a, b, len, zeta);
}

void convolve_trunc(const double* a, const double* b, double* c,
                    std::size_t len) {
    dispatch().set->convolve_trunc(a, b, c, len);
}

double product_of_differences(const double* z, std::size_t from,
                              std::size_t to, double x) {
    return dispatch().set->product_of_differences(z, from, to, x);
}

double dot(const double* a, const double* b, std::size_t n) {
    return dispatch().set->dot(a, b, n);
}

}  // namespace fdkit::kernels
