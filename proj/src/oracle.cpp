#include "fdkit/oracle.hpp"

#include <gmp.h>

#include <algorithm>
#include <cmath>
#include <string>

namespace fdkit::oracle {

namespace {

mpfr_prec_t bits_for(int digits) {
    return static_cast<mpfr_prec_t>(
        std::ceil(static_cast<double>(digits) * std::log2(10.0)) + 8);
}

void check_digits(int digits) {
    if (digits < kMinDigits)
        throw ArgumentError("oracle precision must be at least " +
                            std::to_string(kMinDigits) + " digits");
}

}  // namespace

BigFloat::BigFloat() : digits_(kMinDigits) {
    mpfr_init2(v_, bits_for(digits_));
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(double x, int digits) : digits_(digits) {
    mpfr_init2(v_, bits_for(digits_));
    mpfr_set_d(v_, x, MPFR_RNDN);  // exact: precision always exceeds 53 bits
}

BigFloat::BigFloat(const BigFloat& o) : digits_(o.digits_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept : digits_(o.digits_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
        digits_ = o.digits_;
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    std::swap(digits_, o.digits_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

double BigFloat::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

BigFloat BigFloat::abs() const {
    BigFloat r(*this);
    mpfr_abs(r.v_, r.v_, MPFR_RNDN);
    return r;
}

void BigFloat::widen_to(const BigFloat& o) {
    if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) {
        mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
        digits_ = o.digits_;
    }
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
    widen_to(o);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
    widen_to(o);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
    widen_to(o);
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
    widen_to(o);
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

namespace {

// Partial-products replay at fixed precision; mirrors FdWeights but keeps
// every intermediate in extended precision.
class BigEngine {
public:
    BigEngine(const Grid& grid, std::size_t order, int digits)
        : grid_(grid), order_(order), digits_(digits) {
        const std::size_t n = grid.size();
        if (n == 0 || order > n - 1)
            throw ArgumentError("oracle: need 0 <= order <= N-1");

        z_.reserve(n);
        for (std::size_t k = 0; k < n; ++k) z_.emplace_back(grid[k], digits_);

        lagrange_.reserve(n);
        BigFloat diff(0.0, digits_);
        for (std::size_t k = 0; k < n; ++k) {
            BigFloat p(1.0, digits_);
            for (std::size_t j = 0; j < n; ++j) {
                if (j == k) continue;
                mpfr_sub(diff.raw(), z_[k].raw(), z_[j].raw(), MPFR_RNDN);
                mpfr_mul(p.raw(), p.raw(), diff.raw(), MPFR_RNDN);
            }
            BigFloat w(1.0, digits_);
            mpfr_div(w.raw(), w.raw(), p.raw(), MPFR_RNDN);
            lagrange_.push_back(std::move(w));
        }

        const std::size_t width = order_ + 1;
        left_.assign((n + 2) * width, BigFloat(0.0, digits_));
        right_.assign((n + 2) * width, BigFloat(0.0, digits_));
        shifted_.assign(n, BigFloat(0.0, digits_));
        conv_.assign(width, BigFloat(0.0, digits_));
        left_[0] = BigFloat(1.0, digits_);
        right_[(n + 1) * width] = BigFloat(1.0, digits_);
    }

    // Fills `out` (a row of k-major, m-minor weights) for this center.
    void weights_at(double center, BigFloat* out) {
        const std::size_t n = grid_.size();
        const std::size_t width = order_ + 1;
        const BigFloat c(center, digits_);
        for (std::size_t k = 0; k < n; ++k)
            mpfr_sub(shifted_[k].raw(), z_[k].raw(), c.raw(), MPFR_RNDN);

        for (std::size_t k = 1; k <= n; ++k)
            multbinom(&left_[(k - 1) * width], &left_[k * width], width,
                      shifted_[k - 1]);
        for (std::size_t k = n; k >= 1; --k)
            multbinom(&right_[(k + 1) * width], &right_[k * width], width,
                      shifted_[k - 1]);

        for (std::size_t k = 1; k <= n; ++k) {
            convolve(&left_[(k - 1) * width], &right_[(k + 1) * width], width);
            BigFloat f = lagrange_[k - 1];
            for (std::size_t m = 0; m < width; ++m) {
                BigFloat& slot = out[(k - 1) * width + m];
                mpfr_mul(slot.raw(), f.raw(), conv_[m].raw(), MPFR_RNDN);
                mpfr_mul_ui(f.raw(), f.raw(), static_cast<unsigned long>(m + 1),
                            MPFR_RNDN);
            }
        }
    }

    int digits() const { return digits_; }

private:
    void multbinom(const BigFloat* a, BigFloat* b, std::size_t len,
                   const BigFloat& zeta) {
        for (std::size_t j = len - 1; j > 0; --j) {
            // b_j = a_{j-1} - zeta a_j, fused
            mpfr_fms(b[j].raw(), zeta.raw(), a[j].raw(), a[j - 1].raw(),
                     MPFR_RNDN);
            mpfr_neg(b[j].raw(), b[j].raw(), MPFR_RNDN);
        }
        mpfr_mul(b[0].raw(), zeta.raw(), a[0].raw(), MPFR_RNDN);
        mpfr_neg(b[0].raw(), b[0].raw(), MPFR_RNDN);
    }

    void convolve(const BigFloat* a, const BigFloat* b, std::size_t len) {
        for (std::size_t m = 0; m < len; ++m) {
            mpfr_set_zero(conv_[m].raw(), 1);
            for (std::size_t s = 0; s <= m; ++s)
                mpfr_fma(conv_[m].raw(), a[m - s].raw(), b[s].raw(),
                         conv_[m].raw(), MPFR_RNDN);
        }
    }

    const Grid& grid_;
    std::size_t order_;
    int digits_;
    std::vector<BigFloat> z_;
    std::vector<BigFloat> lagrange_;
    std::vector<BigFloat> left_, right_, shifted_, conv_;
};

}  // namespace

BigWeightTable exact_weights(const Grid& grid, std::size_t order,
                             double center, int digits) {
    check_digits(digits);
    BigEngine engine(grid, order, digits);
    BigWeightTable table;
    table.n = grid.size();
    table.order = order;
    table.center = center;
    table.digits = digits;
    table.w.assign(table.n * (order + 1), BigFloat(0.0, digits));
    engine.weights_at(center, table.w.data());
    return table;
}

BigDiffMatrix exact_diff_matrix(const Grid& grid, std::size_t order,
                                int digits) {
    check_digits(digits);
    const std::size_t n = grid.size();
    BigEngine engine(grid, order, digits);
    BigDiffMatrix mat;
    mat.n = n;
    mat.order = order;
    mat.digits = digits;
    mat.entries.assign(n * n, BigFloat(0.0, digits));
    std::vector<BigFloat> row(n * (order + 1), BigFloat(0.0, digits));
    for (std::size_t i = 0; i < n; ++i) {
        engine.weights_at(grid[i], row.data());
        for (std::size_t j = 0; j < n; ++j)
            mat(i, j) = row[j * (order + 1) + order];
    }
    return mat;
}

namespace {

// Minimal exact-rational value for the Vandermonde cross-check.
class Rational {
public:
    Rational() { mpq_init(v_); }
    explicit Rational(double d) {
        mpq_init(v_);
        mpq_set_d(v_, d);  // exact by construction
    }
    explicit Rational(long n) {
        mpq_init(v_);
        mpq_set_si(v_, n, 1);
    }
    Rational(const Rational& o) {
        mpq_init(v_);
        mpq_set(v_, o.v_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(v_);
        mpq_swap(v_, o.v_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(v_, o.v_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(v_, o.v_);
        return *this;
    }
    ~Rational() { mpq_clear(v_); }

    Rational& operator+=(const Rational& o) {
        mpq_add(v_, v_, o.v_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(v_, v_, o.v_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(v_, v_, o.v_);
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        mpq_div(v_, v_, o.v_);
        return *this;
    }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    bool is_zero() const { return mpq_sgn(v_) == 0; }
    mpq_srcptr raw() const { return v_; }

private:
    mpq_t v_;
};

}  // namespace

BigWeightTable exact_weights_rational(const Grid& grid, std::size_t order,
                                      double center, int digits) {
    check_digits(digits);
    const std::size_t n = grid.size();
    if (n == 0 || order > n - 1)
        throw ArgumentError("oracle: need 0 <= order <= N-1");
    if (n > 8)
        throw ArgumentError("exact_weights_rational: limited to N <= 8");

    // System rows are the moments sum_k w_{k,m} (z_k - center)^p = m! d_{p,m};
    // solve all right-hand sides m = 0..order at once.
    std::vector<Rational> a(n * n);
    std::vector<Rational> rhs(n * (order + 1));
    const Rational c(center);
    for (std::size_t k = 0; k < n; ++k) {
        Rational x = Rational(grid[k]) - c;
        Rational p(1L);
        for (std::size_t row = 0; row < n; ++row) {
            a[row * n + k] = p;
            p *= x;
        }
    }
    Rational fact(1L);
    for (std::size_t m = 0; m <= order; ++m) {
        if (m > 0) fact *= Rational(static_cast<long>(m));
        rhs[m * (order + 1) + m] = fact;
    }

    // Gaussian elimination with partial (first-nonzero) pivoting; exact, so
    // any nonzero pivot works.
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv * n + col].is_zero()) ++piv;
        if (piv == n) throw Error("rational solve: singular moment system");
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a[col * n + j], a[piv * n + j]);
            for (std::size_t m = 0; m <= order; ++m)
                std::swap(rhs[col * (order + 1) + m],
                          rhs[piv * (order + 1) + m]);
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row * n + col].is_zero()) continue;
            const Rational factor = a[row * n + col] / a[col * n + col];
            for (std::size_t j = col; j < n; ++j)
                a[row * n + j] -= factor * a[col * n + j];
            for (std::size_t m = 0; m <= order; ++m)
                rhs[row * (order + 1) + m] -=
                    factor * rhs[col * (order + 1) + m];
        }
    }

    BigWeightTable table;
    table.n = n;
    table.order = order;
    table.center = center;
    table.digits = digits;
    table.w.assign(n * (order + 1), BigFloat(0.0, digits));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t m = 0; m <= order; ++m) {
            const Rational w = rhs[k * (order + 1) + m] / a[k * n + k];
            mpfr_set_q(table(k, m).raw(), w.raw(), MPFR_RNDN);
        }
    return table;
}

namespace {

DigitsLostReport score(const double* approx, const BigFloat* ref,
                       std::size_t rows, std::size_t cols, int digits) {
    DigitsLostReport report;
    report.entries.reserve(rows * cols);

    double max_mag = 0.0;
    for (std::size_t i = 0; i < rows * cols; ++i)
        max_mag = std::max(max_mag, std::abs(ref[i].to_double()));
    const double tiny = max_mag * std::pow(10.0, -digits);

    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            const BigFloat& r = ref[i * cols + j];
            const BigFloat diff =
                (BigFloat(approx[i * cols + j], r.digits()) - r).abs();
            const double mag = std::abs(r.to_double());
            const double denom = mag < tiny ? max_mag : mag;
            const double rel = diff.to_double() / denom;
            double d = 0.0;
            if (rel > 0.0) d = std::max(0.0, std::log10(rel) + 16.0);
            d = std::round(d * 10.0) / 10.0;
            report.entries.push_back({i, j, rel, d});
            report.max_rel = std::max(report.max_rel, rel);
            report.max_digits_lost = std::max(report.max_digits_lost, d);
        }
    }
    return report;
}

}  // namespace

DigitsLostReport digits_lost(const WeightTable& approx,
                             const BigWeightTable& reference) {
    if (approx.size() != reference.n || approx.order() != reference.order)
        throw ArgumentError("digits_lost: table shapes differ");
    std::vector<double> flat(approx.size() * (approx.order() + 1));
    for (std::size_t k = 0; k < approx.size(); ++k)
        for (std::size_t m = 0; m <= approx.order(); ++m)
            flat[k * (approx.order() + 1) + m] = approx(k, m);
    return score(flat.data(), reference.w.data(), approx.size(),
                 approx.order() + 1, reference.digits);
}

DigitsLostReport digits_lost(const DiffMatrix& approx,
                             const BigDiffMatrix& reference) {
    if (approx.n != reference.n || approx.order != reference.order)
        throw ArgumentError("digits_lost: matrix shapes differ");
    return score(approx.entries.data(), reference.entries.data(), approx.n,
                 approx.n, reference.digits);
}

}  // namespace fdkit::oracle
