#pragma once

#include <mpfr.h>

#include <cstddef>
#include <vector>

#include "fdkit/spectral.hpp"
#include "fdkit/types.hpp"

// Extended-precision reference weights and rounding-error measurement. The
// reference replays the partial-products algorithm with every operation at
// the requested precision; grid points enter as the exact values of their
// double representations, so what gets measured is the rounding error of the
// double-precision algorithms, not of grid generation.

namespace fdkit::oracle {

inline constexpr int kDefaultDigits = 50;
inline constexpr int kMinDigits = 30;

/// Arbitrary-precision float. The decimal precision it was created with is
/// recorded alongside the value; arithmetic adopts the wider precision of
/// its operands.
class BigFloat {
public:
    BigFloat();
    BigFloat(double x, int digits);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    int digits() const { return digits_; }
    double to_double() const;
    BigFloat abs() const;

    BigFloat& operator+=(const BigFloat& o);
    BigFloat& operator-=(const BigFloat& o);
    BigFloat& operator*=(const BigFloat& o);
    BigFloat& operator/=(const BigFloat& o);

    friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
    friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
    friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
    friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
    friend BigFloat operator-(BigFloat a) {
        mpfr_neg(a.v_, a.v_, MPFR_RNDN);
        return a;
    }
    friend int compare(const BigFloat& a, const BigFloat& b) {
        return mpfr_cmp(a.v_, b.v_);
    }
    friend bool operator<(const BigFloat& a, const BigFloat& b) {
        return compare(a, b) < 0;
    }
    friend bool operator==(const BigFloat& a, const BigFloat& b) {
        return compare(a, b) == 0;
    }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

private:
    void widen_to(const BigFloat& o);
    mpfr_t v_;
    int digits_;
};

/// Weight table in extended precision; layout matches WeightTable.
struct BigWeightTable {
    std::size_t n = 0;
    std::size_t order = 0;
    double center = 0.0;
    int digits = kDefaultDigits;
    std::vector<BigFloat> w;

    const BigFloat& operator()(std::size_t k, std::size_t m) const {
        return w[k * (order + 1) + m];
    }
    BigFloat& operator()(std::size_t k, std::size_t m) {
        return w[k * (order + 1) + m];
    }
};

/// Differentiation matrix in extended precision.
struct BigDiffMatrix {
    std::size_t n = 0;
    std::size_t order = 0;
    int digits = kDefaultDigits;
    std::vector<BigFloat> entries;

    const BigFloat& operator()(std::size_t i, std::size_t j) const {
        return entries[i * n + j];
    }
    BigFloat& operator()(std::size_t i, std::size_t j) {
        return entries[i * n + j];
    }
};

/// Partial-products weights with all arithmetic at `digits` decimal digits.
BigWeightTable exact_weights(const Grid& grid, std::size_t order,
                             double center = 0.0, int digits = kDefaultDigits);

/// One extended-precision weight row per node: the reference for spectral
/// differentiation matrices. Lagrange weights are computed once.
BigDiffMatrix exact_diff_matrix(const Grid& grid, std::size_t order,
                                int digits = kDefaultDigits);

/// Cross-check that bypasses the replay entirely: solves the transposed
/// Vandermonde moment system in exact rational arithmetic (the grid's
/// double values are exact rationals), then rounds once to `digits`.
/// Exponential coefficient growth limits it to N <= 8.
BigWeightTable exact_weights_rational(const Grid& grid, std::size_t order,
                                      double center = 0.0,
                                      int digits = kDefaultDigits);

struct DigitsLostEntry {
    std::size_t row = 0;  // node k, or center i for matrices
    std::size_t col = 0;  // order m, or node j for matrices
    double rel = 0.0;
    double digits_lost = 0.0;
};

struct DigitsLostReport {
    std::vector<DigitsLostEntry> entries;
    double max_rel = 0.0;
    double max_digits_lost = 0.0;
};

/// Per-entry relative error against the reference and the digits of
/// precision lost, d = max(0, log10(rel) + 16), rounded to one decimal.
/// Entries whose reference magnitude is below 10^-digits of the table's
/// largest are scored against that largest magnitude instead.
DigitsLostReport digits_lost(const WeightTable& approx,
                             const BigWeightTable& reference);
DigitsLostReport digits_lost(const DiffMatrix& approx,
                             const BigDiffMatrix& reference);

}  // namespace fdkit::oracle
