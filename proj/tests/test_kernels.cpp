#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "fdkit/kernels.hpp"

using namespace fdkit;

namespace {

constexpr double kEps = 2.220446049250313e-16;

struct IsaGuard {
    kernels::Isa saved = kernels::active_isa();
    ~IsaGuard() { kernels::force_isa(saved); }
};

std::vector<double> random_vec(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> v(n);
    for (double& x : v) x = dist(rng);
    return v;
}

}  // namespace

TEST_CASE("scalar multbinom semantics") {
    IsaGuard guard;
    REQUIRE(kernels::force_isa(kernels::Isa::scalar));

    std::vector<double> a{1.0, 0.0};
    std::vector<double> b(2);
    kernels::multbinom(a.data(), b.data(), 2, -1.0);  // (z+1) * 1
    CHECK(b == std::vector<double>{1.0, 1.0});

    a = {1.0, 1.0};
    kernels::multbinom(a.data(), b.data(), 2, 1.0);  // (z-1)(z+1), cap 1
    CHECK(b == std::vector<double>{-1.0, 0.0});

    // In-place matches out-of-place.
    std::vector<double> c{0.5, -2.0, 3.0, 1.25, -0.75};
    std::vector<double> out(5);
    kernels::multbinom(c.data(), out.data(), 5, 0.3);
    kernels::multbinom(c.data(), c.data(), 5, 0.3);
    CHECK(c == out);
}

TEST_CASE("scalar convolve and products") {
    IsaGuard guard;
    REQUIRE(kernels::force_isa(kernels::Isa::scalar));

    std::vector<double> a{1.0, 1.0};
    std::vector<double> b{-1.0, 1.0};
    std::vector<double> c(2);
    kernels::convolve_trunc(a.data(), b.data(), c.data(), 2);
    CHECK(c == std::vector<double>{-1.0, 0.0});

    a = {1.0, 2.0};
    b = {3.0, 4.0};
    kernels::convolve_trunc(a.data(), b.data(), c.data(), 2);
    CHECK(c == std::vector<double>{3.0, 10.0});

    const std::vector<double> z{-1.0, 0.0, 1.0};
    CHECK(kernels::product_of_differences(z.data(), 0, 3, 2.0) == 6.0);
    CHECK(kernels::product_of_differences(z.data(), 1, 1, 2.0) == 1.0);

    const std::vector<double> x{1.0, 2.0, 3.0};
    const std::vector<double> y{4.0, 5.0, 6.0};
    CHECK(kernels::dot(x.data(), y.data(), 3) == 32.0);
    CHECK(kernels::dot(x.data(), y.data(), 0) == 0.0);
}

TEST_CASE("avx2 kernels match the scalar reference") {
    IsaGuard guard;
    if (!kernels::force_isa(kernels::Isa::avx2)) {
        MESSAGE("AVX2 not available; skipping equivalence checks");
        return;
    }
    std::mt19937_64 rng(20240817);

    for (std::size_t len : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 17u, 33u}) {
        const std::vector<double> a = random_vec(rng, len);
        const std::vector<double> b = random_vec(rng, len);
        std::uniform_real_distribution<double> dist(-2.0, 2.0);
        const double zeta = dist(rng);

        // multbinom is elementwise with one fma per slot: bit-exact match.
        std::vector<double> simd(len), ref(len);
        kernels::force_isa(kernels::Isa::avx2);
        kernels::multbinom(a.data(), simd.data(), len, zeta);
        kernels::force_isa(kernels::Isa::scalar);
        kernels::multbinom(a.data(), ref.data(), len, zeta);
        CHECK(simd == ref);

        // In-place AVX2 multbinom.
        std::vector<double> inplace(a);
        kernels::force_isa(kernels::Isa::avx2);
        kernels::multbinom(inplace.data(), inplace.data(), len, zeta);
        CHECK(inplace == ref);

        // Reductions reassociate; bound them by the usual forward-error
        // envelope of the term magnitudes.
        kernels::force_isa(kernels::Isa::avx2);
        std::vector<double> conv_simd(len);
        kernels::convolve_trunc(a.data(), b.data(), conv_simd.data(), len);
        const double prod_simd =
            kernels::product_of_differences(a.data(), 0, len, 2.5);
        const double dot_simd = kernels::dot(a.data(), b.data(), len);

        kernels::force_isa(kernels::Isa::scalar);
        std::vector<double> conv_ref(len);
        kernels::convolve_trunc(a.data(), b.data(), conv_ref.data(), len);
        const double prod_ref =
            kernels::product_of_differences(a.data(), 0, len, 2.5);
        const double dot_ref = kernels::dot(a.data(), b.data(), len);

        for (std::size_t m = 0; m < len; ++m) {
            double mag = 0.0;
            for (std::size_t s = 0; s <= m; ++s)
                mag += std::abs(a[m - s] * b[s]);
            CHECK(std::abs(conv_simd[m] - conv_ref[m]) <=
                  4.0 * static_cast<double>(len) * kEps * mag);
        }
        CHECK(std::abs(prod_simd - prod_ref) <=
              4.0 * static_cast<double>(len) * kEps * std::abs(prod_ref));
        double dot_mag = 0.0;
        for (std::size_t i = 0; i < len; ++i) dot_mag += std::abs(a[i] * b[i]);
        CHECK(std::abs(dot_simd - dot_ref) <=
              4.0 * static_cast<double>(len) * kEps * dot_mag);
    }
}

TEST_CASE("forcing an unsupported isa reports failure and stays scalar") {
    IsaGuard guard;
    CHECK(kernels::force_isa(kernels::Isa::scalar));
    CHECK(kernels::active_isa() == kernels::Isa::scalar);
    CHECK(kernels::isa_name(kernels::active_isa()) ==
          std::string("scalar"));
}
