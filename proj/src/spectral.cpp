#include "fdkit/spectral.hpp"

#include <cmath>
#include <numbers>
#include <ostream>

#include "fdkit/fornberg.hpp"
#include "fdkit/weights_mlagrange.hpp"
#include "fdkit/weights_partial.hpp"

namespace fdkit {

const char* algorithm_name(WeightAlgorithm alg) {
    switch (alg) {
        case WeightAlgorithm::partial: return "partial";
        case WeightAlgorithm::mlagrange: return "mlagrange";
        case WeightAlgorithm::fornberg: return "fornberg";
    }
    return "?";
}

WeightAlgorithm algorithm_from_name(const std::string& name) {
    if (name == "partial") return WeightAlgorithm::partial;
    if (name == "mlagrange") return WeightAlgorithm::mlagrange;
    if (name == "fornberg") return WeightAlgorithm::fornberg;
    throw ArgumentError("unknown algorithm '" + name + "'");
}

void DiffMatrix::write_csv(std::ostream& out) const {
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j) out << ',';
            out << to_shortest((*this)(i, j));
        }
        out << '\n';
    }
}

nlohmann::json DiffMatrix::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < n; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < n; ++j) row.push_back((*this)(i, j));
        rows.push_back(std::move(row));
    }
    return {{"n", n},
            {"order", order},
            {"grid", grid.points()},
            {"entries", std::move(rows)}};
}

Grid chebyshev_grid(std::size_t n, RootOrdering ordering) {
    if (n < 2) throw ArgumentError("chebyshev_grid: need N >= 2");
    std::vector<double> pts(n);
    for (std::size_t i = 0; i < n; ++i) {
        // sin(pi (N-2k+1) / (2(N-1))) with k = i+1; equals cos((k-1)pi/(N-1))
        // but antisymmetric about the midpoint in floating point.
        const double num = static_cast<double>(n) - 2.0 * (i + 1) + 1.0;
        pts[i] = std::sin(std::numbers::pi * num /
                          (2.0 * static_cast<double>(n - 1)));
    }
    if (ordering != RootOrdering::natural) {
        std::vector<std::size_t> perm =
            ordering == RootOrdering::bit_reversed
                ? order_bit_reversed(std::span<const double>(pts)).perm
                : order_leja(std::span<const double>(pts));
        std::vector<double> reordered(n);
        for (std::size_t i = 0; i < n; ++i) reordered[i] = pts[perm[i]];
        pts = std::move(reordered);
    }
    return Grid(std::move(pts));
}

DiffMatrix diff_matrix(const Grid& grid, std::size_t order,
                       WeightAlgorithm alg) {
    const std::size_t n = grid.size();
    if (n == 0 || order > n - 1)
        throw ArgumentError("diff_matrix: need 0 <= order <= N-1");
    DiffMatrix d{n, order, grid, std::vector<double>(n * n)};

    if (alg == WeightAlgorithm::partial) {
        FdWeights fd(grid, order);
        for (std::size_t i = 0; i < n; ++i) {
            fd.set_center_node(i);
            for (std::size_t j = 0; j < n; ++j)
                d(i, j) = fd.table()(j, order);
        }
        return d;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const WeightTable t = alg == WeightAlgorithm::mlagrange
                                  ? mlagrange::all_weights(grid, order, grid[i])
                                  : fornberg_weights(grid, order, grid[i]);
        for (std::size_t j = 0; j < n; ++j) d(i, j) = t(j, order);
    }
    return d;
}

DiffMatrix chebyshev_diff_matrix(std::size_t n, std::size_t order,
                                 WeightAlgorithm alg) {
    const Grid natural = chebyshev_grid(n);
    const OrderingResult ord =
        order_bit_reversed(std::span<const double>(natural.points()));

    std::vector<double> work(n);
    for (std::size_t i = 0; i < n; ++i) work[i] = 2.0 * natural[ord.perm[i]];
    const DiffMatrix dilated = diff_matrix(Grid(std::move(work)), order, alg);

    const double scale = std::ldexp(1.0, static_cast<int>(order));  // 2^M
    DiffMatrix out{n, order, natural, std::vector<double>(n * n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out(ord.perm[i], ord.perm[j]) = scale * dilated(i, j);
    return out;
}

WeightTable rescale_weights(const WeightTable& table, double c) {
    if (c == 0.0) throw ArgumentError("rescale_weights: c must be nonzero");
    WeightTable out(table.size(), table.order(), table.center() / c);
    for (std::size_t k = 0; k < table.size(); ++k) {
        double f = 1.0;
        for (std::size_t m = 0; m <= table.order(); ++m) {
            out(k, m) = f * table(k, m);
            f *= c;
        }
    }
    return out;
}

}  // namespace fdkit
