#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fdkit {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A grid contains two equal points. Carries the offending pair.
struct DuplicateGridPointError : Error {
    DuplicateGridPointError(std::size_t i, std::size_t j, double value)
        : Error("duplicate grid points: z[" + std::to_string(i) + "] == z[" +
                std::to_string(j) + "] == " + std::to_string(value)),
          index_a(i), index_b(j), value(value) {}
    std::size_t index_a;
    std::size_t index_b;
    double value;
};

/// An argument is outside its documented domain.
struct ArgumentError : Error {
    using Error::Error;
};

/// A root-to-coefficient routine that requires nonzero roots saw a zero.
struct ZeroRootError : Error {
    using Error::Error;
};

/// The error constant of an accuracy analysis is indistinguishable from
/// rounding noise at the chosen tolerance.
struct DegenerateConstantError : Error {
    using Error::Error;
};

/// Ordered sequence of pairwise distinct, finite grid points.
class Grid {
public:
    Grid() = default;
    explicit Grid(std::vector<double> points) : points_(std::move(points)) {
        validate();
    }
    Grid(std::initializer_list<double> points) : points_(points) { validate(); }

    std::size_t size() const { return points_.size(); }
    double operator[](std::size_t k) const { return points_[k]; }
    const std::vector<double>& points() const { return points_; }
    std::span<const double> span() const { return points_; }

    std::vector<double>::const_iterator begin() const { return points_.begin(); }
    std::vector<double>::const_iterator end() const { return points_.end(); }

    /// Grid with every point shifted by -center. Skips revalidation: the
    /// shift preserves order, and collapsing two points would need a center
    /// many orders of magnitude beyond the grid scale.
    Grid shifted(double center) const {
        std::vector<double> p(points_);
        for (double& z : p) z -= center;
        Grid g;
        g.points_ = std::move(p);
        return g;
    }

    /// Grid with every point multiplied by c (c != 0).
    Grid dilated(double c) const {
        if (c == 0.0) throw ArgumentError("dilation factor must be nonzero");
        std::vector<double> p(points_);
        for (double& z : p) z *= c;
        return Grid(std::move(p));
    }

private:
    void validate() const;
    std::vector<double> points_;
};

/// Finite difference weights w(k, m): weight of f(z_k) in the approximation
/// of the m-th derivative at the expansion center, for m = 0..order().
/// Storage is contiguous in m for each node.
class WeightTable {
public:
    WeightTable() = default;
    WeightTable(std::size_t n, std::size_t order, double center)
        : n_(n), order_(order), center_(center), w_(n * (order + 1), 0.0) {}

    std::size_t size() const { return n_; }
    std::size_t order() const { return order_; }
    double center() const { return center_; }

    double operator()(std::size_t k, std::size_t m) const {
        return w_[k * (order_ + 1) + m];
    }
    double& operator()(std::size_t k, std::size_t m) {
        return w_[k * (order_ + 1) + m];
    }

    /// All orders 0..M for one node.
    std::span<const double> node(std::size_t k) const {
        return {w_.data() + k * (order_ + 1), order_ + 1};
    }
    std::span<double> node(std::size_t k) {
        return {w_.data() + k * (order_ + 1), order_ + 1};
    }

    /// Weights of all nodes for one derivative order.
    std::vector<double> row(std::size_t m) const {
        std::vector<double> r(n_);
        for (std::size_t k = 0; k < n_; ++k) r[k] = (*this)(k, m);
        return r;
    }

    bool operator==(const WeightTable& o) const = default;

private:
    std::size_t n_ = 0;
    std::size_t order_ = 0;
    double center_ = 0.0;
    std::vector<double> w_;
};

/// Shortest decimal string that parses back to the identical double.
std::string to_shortest(double value);

}  // namespace fdkit
