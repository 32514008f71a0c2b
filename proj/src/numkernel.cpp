#include "fdkit/numkernel.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>

#include "fdkit/kernels.hpp"

namespace fdkit {

namespace {

std::atomic<std::uint64_t> g_lagrange_calls{0};

template <typename T>
void multbinom_generic(std::vector<T>& a, T zeta) {
    if (a.empty()) return;
    for (std::size_t j = a.size() - 1; j > 0; --j)
        a[j] = a[j - 1] - zeta * a[j];
    a[0] = -zeta * a[0];
}

}  // namespace

std::vector<double> lagrange_weights(const Grid& grid) {
    g_lagrange_calls.fetch_add(1, std::memory_order_relaxed);
    const std::size_t n = grid.size();
    const double* z = grid.points().data();
    std::vector<double> w(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double pk = kernels::product_of_differences(z, 0, k, z[k]) *
                          kernels::product_of_differences(z, k + 1, n, z[k]);
        w[k] = 1.0 / pk;
    }
    return w;
}

std::uint64_t lagrange_weight_call_count() {
    return g_lagrange_calls.load(std::memory_order_relaxed);
}

std::vector<double> multbinom(const std::vector<double>& a, double zeta) {
    std::vector<double> b(a.size());
    kernels::multbinom(a.data(), b.data(), a.size(), zeta);
    return b;
}

std::vector<std::complex<double>> multbinom(
    const std::vector<std::complex<double>>& a, std::complex<double> zeta) {
    std::vector<std::complex<double>> b(a);
    multbinom_generic(b, zeta);
    return b;
}

std::vector<double> convolve_trunc(std::span<const double> a,
                                   std::span<const double> b,
                                   std::size_t cap) {
    if (a.size() <= cap || b.size() <= cap)
        throw ArgumentError("convolve_trunc: inputs shorter than cap+1");
    std::vector<double> c(cap + 1);
    kernels::convolve_trunc(a.data(), b.data(), c.data(), cap + 1);
    return c;
}

OrderingResult order_bit_reversed(std::size_t n) {
    if (n == 0) return {{}, false};
    if (std::has_single_bit(n)) {
        const int bits = std::countr_zero(n);
        std::vector<std::size_t> perm(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t r = 0;
            for (int b = 0; b < bits; ++b) r |= ((i >> b) & 1u) << (bits - 1 - b);
            perm[i] = r;
        }
        return {std::move(perm), false};
    }
    // No bit reversal exists; Leja-order the index sequence itself.
    std::vector<double> idx(n);
    std::iota(idx.begin(), idx.end(), 0.0);
    return {order_leja(std::span<const double>(idx)), true};
}

template <typename T>
OrderingResult order_bit_reversed(std::span<const T> points) {
    if (std::has_single_bit(points.size()) || points.empty())
        return order_bit_reversed(points.size());
    return {order_leja(points), true};
}

template <typename T>
std::vector<std::size_t> order_leja(std::span<const T> points) {
    const std::size_t n = points.size();
    std::vector<std::size_t> perm;
    perm.reserve(n);
    if (n == 0) return perm;

    std::vector<char> used(n, 0);
    // Distances multiply across steps; accumulate log magnitudes so long
    // sequences neither overflow nor underflow.
    std::vector<double> logdist(n, 0.0);

    std::size_t best = 0;
    double best_key = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const double key = std::abs(points[i]);
        if (key > best_key) {
            best_key = key;
            best = i;
        }
    }
    perm.push_back(best);
    used[best] = 1;

    for (std::size_t step = 1; step < n; ++step) {
        const T& last = points[perm.back()];
        std::size_t next = n;
        double next_key = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            if (used[i]) continue;
            logdist[i] += std::log(std::abs(points[i] - last));
            if (logdist[i] > next_key) {
                next_key = logdist[i];
                next = i;
            }
        }
        if (next == n) {  // all remaining candidates at -inf (duplicates)
            for (std::size_t i = 0; i < n && next == n; ++i)
                if (!used[i]) next = i;
        }
        perm.push_back(next);
        used[next] = 1;
    }
    return perm;
}

template <typename T>
std::vector<T> poly_from_roots(const std::vector<T>& roots,
                               RootOrdering ordering, int cap) {
    const std::size_t n = roots.size();
    if (cap != kFullDegree && (cap < 0 || static_cast<std::size_t>(cap) > n))
        throw ArgumentError("poly_from_roots: cap must be in 0..N or full");
    const std::size_t degree =
        cap == kFullDegree ? n : static_cast<std::size_t>(cap);

    std::vector<std::size_t> perm;
    switch (ordering) {
        case RootOrdering::natural:
            break;
        case RootOrdering::bit_reversed:
            perm = order_bit_reversed(std::span<const T>(roots)).perm;
            break;
        case RootOrdering::leja:
            perm = order_leja(std::span<const T>(roots));
            break;
    }

    std::vector<T> coeffs(degree + 1, T(0));
    coeffs[0] = T(1);
    for (std::size_t i = 0; i < n; ++i) {
        const T zeta = perm.empty() ? roots[i] : roots[perm[i]];
        if constexpr (std::is_same_v<T, double>) {
            kernels::multbinom(coeffs.data(), coeffs.data(), coeffs.size(),
                               zeta);
        } else {
            multbinom_generic(coeffs, zeta);
        }
    }
    return coeffs;
}

template <typename T>
std::vector<T> coeffs_via_newton_identities(const std::vector<T>& roots,
                                            std::size_t cap) {
    const std::size_t n = roots.size();
    if (cap > n)
        throw ArgumentError("coeffs_via_newton_identities: cap must be <= N");
    for (std::size_t k = 0; k < n; ++k)
        if (roots[k] == T(0))
            throw ZeroRootError("coeffs_via_newton_identities: root " +
                                std::to_string(k) + " is zero");

    std::vector<T> inv(n);
    T prod = T(1);
    for (std::size_t k = 0; k < n; ++k) {
        inv[k] = T(1) / roots[k];
        prod *= roots[k];
    }

    // Power sums of the reciprocal roots, compensated (Kahan) summation.
    std::vector<T> pow(inv);
    std::vector<T> p(cap + 1, T(0));
    for (std::size_t r = 1; r <= cap; ++r) {
        T sum = T(0);
        T comp = T(0);
        for (std::size_t k = 0; k < n; ++k) {
            if (r > 1) pow[k] *= inv[k];
            const T y = pow[k] - comp;
            const T t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
        p[r] = sum;
    }

    // Newton identities: r E_r = E_{r-1} P_1 - E_{r-2} P_2 + ... +- P_r.
    std::vector<T> e(cap + 1, T(0));
    e[0] = T(1);
    for (std::size_t r = 1; r <= cap; ++r) {
        T acc = T(0);
        for (std::size_t i = 1; i <= r; ++i) {
            const T term = e[r - i] * p[i];
            acc = (i % 2 == 1) ? acc + term : acc - term;
        }
        e[r] = acc / T(static_cast<double>(r));
    }

    // c_r = (-1)^(N+r) E_r prod(roots); sign fixed against exact expansion
    // of small cases.
    std::vector<T> c(cap + 1);
    for (std::size_t r = 0; r <= cap; ++r) {
        const T value = e[r] * prod;
        c[r] = ((n + r) % 2 == 0) ? value : -value;
    }
    return c;
}

SymmetricSums elementary_symmetric(const Grid& grid, std::size_t p) {
    const std::size_t n = grid.size();
    if (p > n)
        throw ArgumentError("elementary_symmetric: p must be in 0..N");
    std::vector<double> es(p + 1, 0.0);
    std::vector<double> ts(p + 1, 0.0);
    es[0] = 1.0;
    ts[0] = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double z = grid[k];
        const double az = std::abs(z);
        const std::size_t top = std::min(p, k + 1);
        for (std::size_t j = top; j >= 1; --j) {
            es[j] = std::fma(z, es[j - 1], es[j]);
            ts[j] = std::fma(az, ts[j - 1], ts[j]);
        }
    }
    return {es[p], ts[p]};
}

template OrderingResult order_bit_reversed<double>(std::span<const double>);
template OrderingResult order_bit_reversed<std::complex<double>>(
    std::span<const std::complex<double>>);
template std::vector<std::size_t> order_leja<double>(std::span<const double>);
template std::vector<std::size_t> order_leja<std::complex<double>>(
    std::span<const std::complex<double>>);
template std::vector<double> poly_from_roots<double>(
    const std::vector<double>&, RootOrdering, int);
template std::vector<std::complex<double>> poly_from_roots<
    std::complex<double>>(const std::vector<std::complex<double>>&,
                          RootOrdering, int);
template std::vector<double> coeffs_via_newton_identities<double>(
    const std::vector<double>&, std::size_t);
template std::vector<std::complex<double>> coeffs_via_newton_identities<
    std::complex<double>>(const std::vector<std::complex<double>>&,
                          std::size_t);

}  // namespace fdkit
