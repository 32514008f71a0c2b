#include <doctest.h>

#include <algorithm>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "fdkit/numkernel.hpp"
#include "support/test_support.hpp"

using namespace fdkit;
using Complex = std::complex<double>;

namespace {

// Exact integer expansion of prod (z - r_k); oracle for poly_from_roots.
std::vector<long long> expand_integer_roots(const std::vector<long long>& r) {
    std::vector<long long> c{1};
    for (long long root : r) {
        c.push_back(0);
        for (std::size_t j = c.size() - 1; j > 0; --j)
            c[j] = c[j - 1] - root * c[j];
        c[0] = -root * c[0];
    }
    return c;
}

std::vector<Complex> roots_of_unity(std::size_t n) {
    std::vector<Complex> roots(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double arg =
            2.0 * std::numbers::pi * static_cast<double>(k) / n;
        roots[k] = {std::cos(arg), std::sin(arg)};
    }
    return roots;
}

double max_error_vs_zn_minus_1(const std::vector<Complex>& coeffs) {
    double err = 0.0;
    const std::size_t n = coeffs.size() - 1;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        Complex exact{0.0, 0.0};
        if (j == 0) exact = -1.0;
        if (j == n) exact = 1.0;
        err = std::max(err, std::abs(coeffs[j] - exact));
    }
    return err;
}

}  // namespace

TEST_CASE("lagrange weights") {
    CHECK(lagrange_weights(Grid{-1.0, 0.0, 1.0}) ==
          std::vector<double>{0.5, -1.0, 0.5});
    CHECK(lagrange_weights(Grid{0.0, 1.0}) == std::vector<double>{-1.0, 1.0});
    CHECK(lagrange_weights(Grid{5.0}) == std::vector<double>{1.0});

    // Duplicate points are rejected at grid construction, naming the pair.
    try {
        Grid g{1.0, 2.0, 1.0};
        FAIL("expected DuplicateGridPointError");
    } catch (const DuplicateGridPointError& e) {
        CHECK(e.index_a == 0);
        CHECK(e.index_b == 2);
        CHECK(e.value == 1.0);
    }
    const std::vector<double> not_finite{1.0, std::nan("")};
    CHECK_THROWS_AS((void)Grid(not_finite), ArgumentError);
}

TEST_CASE("multbinom examples and inverse recursion") {
    CHECK(multbinom({1.0, 0.0}, -1.0) == std::vector<double>{1.0, 1.0});
    CHECK(multbinom({1.0, 0.0, 0.0}, 2.0) ==
          std::vector<double>{-2.0, 1.0, 0.0});
    CHECK(multbinom({1.0, 1.0}, 1.0) == std::vector<double>{-1.0, 0.0});

    // Synthetic division undoes the binomial multiplication. The inverse
    // recursion divides by zeta at every step, so the round trip is only
    // this accurate for |zeta| away from 0 (its error growth below 1 is the
    // back-substitution instability demonstrated elsewhere).
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::uniform_real_distribution<double> mag(0.75, 2.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<std::size_t> len_dist(1, 12);
        std::vector<double> a(len_dist(rng));
        for (double& x : a) x = dist(rng);
        const double zeta = mag(rng) * (dist(rng) < 0.0 ? -1.0 : 1.0);

        const std::vector<double> b = multbinom(a, zeta);
        std::vector<double> back(a.size());
        back[0] = -b[0] / zeta;
        for (std::size_t j = 1; j < a.size(); ++j)
            back[j] = (back[j - 1] - b[j]) / zeta;
        for (std::size_t j = 0; j < a.size(); ++j)
            CHECK(std::abs(back[j] - a[j]) <=
                  1e-12 * std::max(1.0, std::abs(a[j])));
    }
}

TEST_CASE("truncated convolution") {
    CHECK(convolve_trunc(std::vector<double>{1.0, 1.0},
                         std::vector<double>{-1.0, 1.0}, 1) ==
          std::vector<double>{-1.0, 0.0});
    CHECK(convolve_trunc(std::vector<double>{1.0, 2.0},
                         std::vector<double>{3.0, 4.0}, 1) ==
          std::vector<double>{3.0, 10.0});
    CHECK(convolve_trunc(std::vector<double>{1.0, 0.0},
                         std::vector<double>{1.0, 0.0}, 1) ==
          std::vector<double>{1.0, 0.0});
    CHECK_THROWS_AS(convolve_trunc(std::vector<double>{1.0},
                                   std::vector<double>{1.0, 2.0}, 1),
                    ArgumentError);
}

TEST_CASE("poly_from_roots") {
    CHECK(poly_from_roots<double>({1.0, 2.0, 3.0}, RootOrdering::natural) ==
          std::vector<double>{-6.0, 11.0, -6.0, 1.0});
    CHECK(poly_from_roots<double>({}, RootOrdering::natural) ==
          std::vector<double>{1.0});
    CHECK(poly_from_roots<double>({1.0, 2.0, 3.0}, RootOrdering::natural, 1) ==
          std::vector<double>{-6.0, 11.0});
    CHECK_THROWS_AS(
        poly_from_roots<double>({1.0, 2.0}, RootOrdering::natural, 3),
        ArgumentError);

    // Exact small-integer roots expand exactly, any ordering.
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long long> root_dist(-4, 4);
    std::uniform_int_distribution<std::size_t> n_dist(0, 8);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<long long> ints(n_dist(rng));
        for (long long& r : ints) r = root_dist(rng);
        const std::vector<long long> exact = expand_integer_roots(ints);
        std::vector<double> roots(ints.begin(), ints.end());
        for (RootOrdering ord : {RootOrdering::natural,
                                 RootOrdering::bit_reversed,
                                 RootOrdering::leja}) {
            const std::vector<double> got = poly_from_roots(roots, ord);
            REQUIRE(got.size() == exact.size());
            for (std::size_t j = 0; j < got.size(); ++j)
                CHECK(got[j] == static_cast<double>(exact[j]));
        }
    }
}

TEST_CASE("root ordering stabilizes the roots-of-unity product") {
    const std::vector<Complex> roots = roots_of_unity(128);

    const double err_natural = max_error_vs_zn_minus_1(
        poly_from_roots(roots, RootOrdering::natural));
    const double err_bitrev = max_error_vs_zn_minus_1(
        poly_from_roots(roots, RootOrdering::bit_reversed));
    CHECK(err_natural > 1e6);
    CHECK(err_bitrev <= 1e-8);
}

TEST_CASE("bit reversal") {
    CHECK(order_bit_reversed(4).perm ==
          std::vector<std::size_t>{0, 2, 1, 3});
    CHECK(order_bit_reversed(8).perm ==
          std::vector<std::size_t>{0, 4, 2, 6, 1, 5, 3, 7});
    CHECK(order_bit_reversed(2).perm == std::vector<std::size_t>{0, 1});
    CHECK_FALSE(order_bit_reversed(8).leja_fallback);

    for (std::size_t n : {1u, 2u, 4u, 8u, 16u, 32u, 64u}) {
        const auto perm = order_bit_reversed(n).perm;
        for (std::size_t i = 0; i < n; ++i) CHECK(perm[perm[i]] == i);
    }

    // Not a power of two: flagged fallback, still a permutation.
    const OrderingResult fb = order_bit_reversed(6);
    CHECK(fb.leja_fallback);
    std::vector<char> seen(6, 0);
    for (std::size_t i : fb.perm) seen.at(i) = 1;
    CHECK(std::count(seen.begin(), seen.end(), 1) == 6);
}

TEST_CASE("leja ordering") {
    const std::vector<double> pts{0.0, 1.0, -2.0};
    CHECK(order_leja(std::span<const double>(pts)) ==
          std::vector<std::size_t>{2, 1, 0});

    const std::vector<double> single{7.0};
    CHECK(order_leja(std::span<const double>(single)) ==
          std::vector<std::size_t>{0});

    const std::vector<double> tie{-1.0, 1.0};
    CHECK(order_leja(std::span<const double>(tie)) ==
          std::vector<std::size_t>{0, 1});

    // Greedy objective holds step by step against direct products.
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> p(6);
        for (double& x : p) x = dist(rng);
        const auto perm = order_leja(std::span<const double>(p));
        std::vector<char> used(p.size(), 0);
        used[perm[0]] = 1;
        for (std::size_t step = 1; step < p.size(); ++step) {
            const std::size_t chosen = perm[step];
            auto objective = [&](std::size_t i) {
                double prod = 1.0;
                for (std::size_t s = 0; s < step; ++s)
                    prod *= std::abs(p[i] - p[perm[s]]);
                return prod;
            };
            const double best = objective(chosen);
            for (std::size_t i = 0; i < p.size(); ++i) {
                if (used[i]) continue;
                CHECK(objective(i) <= best * (1.0 + 1e-9));
            }
            used[chosen] = 1;
        }
    }
}

TEST_CASE("newton identities coefficients") {
    // Sign convention fixed by exact expansion of small cases.
    CHECK(coeffs_via_newton_identities<double>({1.0, 2.0}, 2) ==
          std::vector<double>{2.0, -3.0, 1.0});
    const std::vector<double> cubic =
        coeffs_via_newton_identities<double>({1.0, 2.0, 3.0}, 3);
    const std::vector<double> exact{-6.0, 11.0, -6.0, 1.0};
    REQUIRE(cubic.size() == 4);
    for (std::size_t j = 0; j < 4; ++j)
        CHECK(cubic[j] == doctest::Approx(exact[j]).epsilon(1e-14));

    CHECK(coeffs_via_newton_identities<double>({3.0}, 1) ==
          std::vector<double>{-3.0, 1.0});
    CHECK_THROWS_AS(coeffs_via_newton_identities<double>({1.0, 0.0}, 1),
                    ZeroRootError);
    CHECK_THROWS_AS(coeffs_via_newton_identities<double>({1.0}, 2),
                    ArgumentError);

    // Roots of unity, full degree: excellent accuracy without any ordering.
    const std::vector<Complex> roots = roots_of_unity(128);
    const std::vector<Complex> coeffs =
        coeffs_via_newton_identities(roots, 128);
    CHECK(max_error_vs_zn_minus_1(coeffs) <= 1e-10);
}

TEST_CASE("elementary symmetric functions") {
    CHECK(elementary_symmetric(Grid{-3.0, 1.0, 2.0}, 1).s == 0.0);
    CHECK(std::abs(elementary_symmetric(Grid{-2.0 / 3.0, 0.0, 1.0, 2.0}, 2).s)
          <= 1e-15);

    const SymmetricSums s2 = elementary_symmetric(Grid{-2.0, -1.0, 1.0, 2.0}, 2);
    CHECK(s2.s == -5.0);
    CHECK(s2.t == 13.0);

    const SymmetricSums s0 = elementary_symmetric(Grid{0.5, 4.0}, 0);
    CHECK(s0.s == 1.0);
    CHECK(s0.t == 1.0);
    CHECK_THROWS_AS(elementary_symmetric(Grid{1.0, 2.0}, 3), ArgumentError);

    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<std::size_t> n_dist(1, 10);
        const std::size_t n = n_dist(rng);
        const std::vector<double> pts = testsup::random_grid(rng, n);
        const Grid grid(pts);
        const Grid head(std::vector<double>(pts.begin(), pts.end() - 1));

        for (std::size_t p = 0; p <= n; ++p) {
            const SymmetricSums full = elementary_symmetric(grid, p);
            CHECK(std::abs(full.s) <= full.t * (1.0 + 1e-15));

            // S_p(z_1..z_N) = s_p + z_N s_{p-1} over the first N-1 points.
            if (n < 2 || p > n - 1) continue;
            const double sp = elementary_symmetric(head, p).s;
            const double sp1 =
                p == 0 ? 0.0 : elementary_symmetric(head, p - 1).s;
            const double recombined = sp + pts.back() * sp1;
            CHECK(std::abs(full.s - recombined) <=
                  1e-12 * std::max(1.0, std::abs(full.s)));
        }
    }

    // Exact recurrence on integer grids.
    const Grid g{-3.0, 1.0, 2.0, 4.0};
    const Grid h{-3.0, 1.0, 2.0};
    for (std::size_t p = 1; p <= 3; ++p)
        CHECK(elementary_symmetric(g, p).s ==
              elementary_symmetric(h, p).s +
                  4.0 * elementary_symmetric(h, p - 1).s);
}

TEST_CASE("elementary symmetric sums match exact rational evaluation") {
    // Every double grid is an exact rational grid; the recursion's result
    // must match the exact S_p to ordinary rounding accuracy.
    using testsup::Rational;
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<std::size_t> n_dist(1, 10);
        const std::size_t n = n_dist(rng);
        const std::vector<double> pts = testsup::random_grid(rng, n);

        // Exact coefficients of prod (z - z_k) give every S_p at once:
        // S_p = (-1)^p * coeff of z^(n-p).
        std::vector<Rational> coeff{Rational(1)};
        for (double z : pts) {
            coeff.push_back(Rational(0));
            for (std::size_t j = coeff.size() - 1; j > 0; --j)
                coeff[j] = coeff[j - 1] - Rational(z) * coeff[j];
            coeff[0] = -Rational(z) * coeff[0];
        }
        for (std::size_t p = 0; p <= n; ++p) {
            Rational exact = coeff[n - p];
            if (p % 2 == 1) exact = -exact;
            const double want = testsup::to_double(exact);
            const double got = elementary_symmetric(Grid(pts), p).s;
            CHECK(std::abs(got - want) <=
                  1e-12 * std::max(1.0, std::abs(want)));
        }
    }
}
