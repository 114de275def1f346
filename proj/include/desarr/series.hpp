#ifndef DESARR_SERIES_HPP
#define DESARR_SERIES_HPP

// Truncated power series in x over exact rationals, and square matrices of
// them. All series taking part in one computation share a truncation order N
// and carry the coefficients of x^0..x^N.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <desarr/errors.hpp>
#include <desarr/rational.hpp>

namespace desarr
{

class TruncSeries
{
public:
    // The zero series of the given order.
    explicit TruncSeries(std::size_t order = 0) : coeffs_(order + 1) {}

    // Missing high coefficients are zero; extra ones are dropped.
    TruncSeries(std::size_t order, std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs))
    {
        coeffs_.resize(order + 1);
    }

    TruncSeries(std::size_t order, std::initializer_list<BigRational> coeffs)
        : TruncSeries(order, std::vector<BigRational>(coeffs))
    {
    }

    static TruncSeries constant(const BigRational &c, std::size_t order)
    {
        TruncSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }

    // c * x^k (zero when k exceeds the order).
    static TruncSeries monomial(const BigRational &c, std::size_t k, std::size_t order)
    {
        TruncSeries s(order);
        if (k <= order) {
            s.coeffs_[k] = c;
        }
        return s;
    }

    std::size_t order() const noexcept
    {
        return coeffs_.size() - 1;
    }
    const BigRational &operator[](std::size_t k) const
    {
        return coeffs_[k];
    }
    BigRational &operator[](std::size_t k)
    {
        return coeffs_[k];
    }
    const std::vector<BigRational> &coeffs() const noexcept
    {
        return coeffs_;
    }

    // Same coefficients cut (or zero-padded) to another order.
    TruncSeries with_order(std::size_t order) const
    {
        return TruncSeries(order, coeffs_);
    }

    TruncSeries &operator+=(const TruncSeries &o)
    {
        check_order(o);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            coeffs_[k] += o.coeffs_[k];
        }
        return *this;
    }
    TruncSeries &operator-=(const TruncSeries &o)
    {
        check_order(o);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            coeffs_[k] -= o.coeffs_[k];
        }
        return *this;
    }
    TruncSeries &operator*=(const BigRational &c)
    {
        for (auto &a : coeffs_) {
            a *= c;
        }
        return *this;
    }

    friend TruncSeries operator+(TruncSeries a, const TruncSeries &b)
    {
        return a += b;
    }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries &b)
    {
        return a -= b;
    }
    friend TruncSeries operator-(TruncSeries a)
    {
        for (auto &c : a.coeffs_) {
            c = -c;
        }
        return a;
    }
    friend TruncSeries operator*(TruncSeries a, const BigRational &c)
    {
        return a *= c;
    }
    friend TruncSeries operator*(const BigRational &c, TruncSeries a)
    {
        return a *= c;
    }
    friend TruncSeries operator+(TruncSeries a, const BigRational &c)
    {
        a.coeffs_[0] += c;
        return a;
    }
    friend TruncSeries operator+(const BigRational &c, TruncSeries a)
    {
        a.coeffs_[0] += c;
        return a;
    }
    friend TruncSeries operator-(TruncSeries a, const BigRational &c)
    {
        a.coeffs_[0] -= c;
        return a;
    }
    friend TruncSeries operator-(const BigRational &c, TruncSeries a)
    {
        return c + (-std::move(a));
    }

    friend TruncSeries operator*(const TruncSeries &a, const TruncSeries &b)
    {
        a.check_order(b);
        const std::size_t n = a.order();
        TruncSeries out(n);
        for (std::size_t i = 0; i <= n; ++i) {
            if (a.coeffs_[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; i + j <= n; ++j) {
                if (b.coeffs_[j] != 0) {
                    out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
                }
            }
        }
        return out;
    }

    // Multiplicative inverse; throws not_invertible on a zero constant term.
    TruncSeries inverse() const
    {
        if (coeffs_[0] == 0) {
            throw not_invertible("series with zero constant term is not invertible");
        }
        const std::size_t n = order();
        TruncSeries out(n);
        const BigRational inv0 = 1 / coeffs_[0];
        out.coeffs_[0] = inv0;
        for (std::size_t k = 1; k <= n; ++k) {
            BigRational acc{0};
            for (std::size_t j = 1; j <= k; ++j) {
                if (coeffs_[j] != 0) {
                    acc += coeffs_[j] * out.coeffs_[k - j];
                }
            }
            out.coeffs_[k] = -acc * inv0;
        }
        return out;
    }

    friend TruncSeries operator/(const TruncSeries &a, const TruncSeries &b)
    {
        a.check_order(b);
        return a * b.inverse();
    }
    friend TruncSeries operator/(TruncSeries a, const BigRational &c)
    {
        if (c == 0) {
            throw not_invertible("division of a series by zero");
        }
        return a *= (1 / c);
    }

    friend bool operator==(const TruncSeries &, const TruncSeries &) = default;

private:
    void check_order(const TruncSeries &o) const
    {
        if (o.order() != order()) {
            throw order_mismatch("series orders differ: " + std::to_string(order()) + " vs " +
                                 std::to_string(o.order()));
        }
    }

    std::vector<BigRational> coeffs_;
};

enum class SeriesOp { add, sub, mul, div };

inline TruncSeries series_arith(const TruncSeries &a, const TruncSeries &b, SeriesOp op)
{
    switch (op) {
        case SeriesOp::add:
            return a + b;
        case SeriesOp::sub:
            return a - b;
        case SeriesOp::mul:
            return a * b;
        case SeriesOp::div:
            return a / b;
    }
    throw invalid_input("unknown series operation");
}

// sum_k c^k x^k / k!
inline TruncSeries exp_series(const BigRational &c, std::size_t order)
{
    TruncSeries s(order);
    BigRational term{1};
    for (std::size_t k = 0; k <= order; ++k) {
        s[k] = term;
        term = term * c / BigRational(k + 1);
    }
    return s;
}

// (e^{cx} - 1) / c = sum_{k>=1} c^{k-1} x^k / k!, entire in c (equals x at c = 0).
inline TruncSeries expm1_div(const BigRational &c, std::size_t order)
{
    TruncSeries s(order);
    BigRational term{1};
    for (std::size_t k = 1; k <= order; ++k) {
        term /= BigRational(k);
        s[k] = term;
        term *= c;
    }
    return s;
}

// cosh(a x / 2) written as a series in p = a^2:
// sum_k p^k (x/2)^{2k} / (2k)!
inline TruncSeries cosh_even(const BigRational &p, std::size_t order)
{
    TruncSeries s(order);
    BigRational term{1}; // p^k / (2^{2k} (2k)!)
    for (std::size_t k = 0; 2 * k <= order; ++k) {
        s[2 * k] = term;
        term = term * p / BigRational(4 * (2 * k + 1) * (2 * k + 2));
    }
    return s;
}

// sinh(a x / 2) / a written as a series in p = a^2:
// sum_k p^k (x/2)^{2k+1} / (2k+1)!
inline TruncSeries sinh_even_div(const BigRational &p, std::size_t order)
{
    TruncSeries s(order);
    BigRational term{1, 2}; // p^k / (2^{2k+1} (2k+1)!)
    for (std::size_t k = 0; 2 * k + 1 <= order; ++k) {
        s[2 * k + 1] = term;
        term = term * p / BigRational(4 * (2 * k + 2) * (2 * k + 3));
    }
    return s;
}

// Square root of a series whose constant term is 1.
inline TruncSeries sqrt_series(const TruncSeries &a)
{
    if (a[0] != 1) {
        throw invalid_input("sqrt_series requires constant term 1");
    }
    const std::size_t n = a.order();
    TruncSeries r(n);
    r[0] = 1;
    // r^2 = a  =>  2 r_k = a_k - sum_{j=1}^{k-1} r_j r_{k-j}
    for (std::size_t k = 1; k <= n; ++k) {
        BigRational acc = a[k];
        for (std::size_t j = 1; j < k; ++j) {
            acc -= r[j] * r[k - j];
        }
        r[k] = acc / 2;
    }
    return r;
}

// Divides by x^k; the low k coefficients must vanish. The result has order
// N - k.
inline TruncSeries shift_down(const TruncSeries &a, std::size_t k)
{
    if (k > a.order()) {
        throw invalid_input("shift exceeds series order");
    }
    std::vector<BigRational> out;
    for (std::size_t i = 0; i <= a.order(); ++i) {
        if (i < k) {
            if (a[i] != 0) {
                throw invalid_input("shift_down: nonzero low coefficient");
            }
        } else {
            out.push_back(a[i]);
        }
    }
    return TruncSeries(a.order() - k, std::move(out));
}

// OGF -> EGF: x^n |-> x^n / n!.
inline TruncSeries hat_transform(const TruncSeries &a)
{
    TruncSeries out = a;
    BigInt f{1};
    for (std::size_t k = 0; k <= a.order(); ++k) {
        if (k > 0) {
            f *= k;
        }
        out[k] = a[k] / BigRational(f);
    }
    return out;
}

// EGF coefficient k times k!, i.e. the count sequence behind an EGF.
inline BigRational egf_count(const TruncSeries &a, std::size_t k)
{
    return a[k] * BigRational(factorial(k));
}

inline std::vector<BigRational> egf_counts(const TruncSeries &a)
{
    std::vector<BigRational> out;
    BigInt f{1};
    for (std::size_t k = 0; k <= a.order(); ++k) {
        if (k > 0) {
            f *= k;
        }
        out.push_back(a[k] * BigRational(f));
    }
    return out;
}

class SeriesMatrix
{
public:
    SeriesMatrix(std::size_t dim, std::size_t order) : dim_(dim), order_(order), entries_(dim * dim, TruncSeries(order))
    {
        if (dim == 0) {
            throw invalid_input("series matrix dimension must be positive");
        }
    }

    static SeriesMatrix identity(std::size_t dim, std::size_t order)
    {
        SeriesMatrix m(dim, order);
        for (std::size_t i = 0; i < dim; ++i) {
            m(i, i) = TruncSeries::constant(1, order);
        }
        return m;
    }

    std::size_t dim() const noexcept
    {
        return dim_;
    }
    std::size_t order() const noexcept
    {
        return order_;
    }

    // 0-based entry access.
    TruncSeries &operator()(std::size_t i, std::size_t j)
    {
        return entries_[i * dim_ + j];
    }
    const TruncSeries &operator()(std::size_t i, std::size_t j) const
    {
        return entries_[i * dim_ + j];
    }

    void set(std::size_t i, std::size_t j, TruncSeries s)
    {
        if (s.order() != order_) {
            throw order_mismatch("matrix entry order differs from matrix order");
        }
        (*this)(i, j) = std::move(s);
    }

    friend SeriesMatrix operator+(const SeriesMatrix &a, const SeriesMatrix &b)
    {
        a.check_shape(b);
        SeriesMatrix out = a;
        for (std::size_t k = 0; k < out.entries_.size(); ++k) {
            out.entries_[k] += b.entries_[k];
        }
        return out;
    }

    friend SeriesMatrix operator*(const SeriesMatrix &a, const SeriesMatrix &b)
    {
        a.check_shape(b);
        SeriesMatrix out(a.dim_, a.order_);
        for (std::size_t i = 0; i < a.dim_; ++i) {
            for (std::size_t j = 0; j < a.dim_; ++j) {
                TruncSeries acc(a.order_);
                for (std::size_t k = 0; k < a.dim_; ++k) {
                    acc += a(i, k) * b(k, j);
                }
                out(i, j) = std::move(acc);
            }
        }
        return out;
    }

    friend bool operator==(const SeriesMatrix &, const SeriesMatrix &) = default;

private:
    void check_shape(const SeriesMatrix &o) const
    {
        if (o.dim_ != dim_) {
            throw invalid_input("series matrix dimensions differ");
        }
        if (o.order_ != order_) {
            throw order_mismatch("series matrix orders differ");
        }
    }

    std::size_t dim_;
    std::size_t order_;
    std::vector<TruncSeries> entries_;
};

inline SeriesMatrix hat_transform(const SeriesMatrix &m)
{
    SeriesMatrix out(m.dim(), m.order());
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            out(i, j) = hat_transform(m(i, j));
        }
    }
    return out;
}

// Gauss-Jordan elimination over the truncated series ring. A series is a unit
// exactly when its constant term is nonzero, so pivots are chosen by constant
// term; this succeeds iff the constant-term matrix is invertible.
inline SeriesMatrix matrix_invert(const SeriesMatrix &m)
{
    const std::size_t n = m.dim();
    SeriesMatrix work = m;
    SeriesMatrix inv = SeriesMatrix::identity(n, m.order());
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && work(pivot, col)[0] == 0) {
            ++pivot;
        }
        if (pivot == n) {
            throw not_invertible("constant-term matrix is singular");
        }
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work(pivot, j), work(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        }
        const TruncSeries scale = work(col, col).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            work(col, j) = work(col, j) * scale;
            inv(col, j) = inv(col, j) * scale;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) {
                continue;
            }
            const TruncSeries factor = work(r, col);
            bool zero = true;
            for (const auto &c : factor.coeffs()) {
                if (c != 0) {
                    zero = false;
                    break;
                }
            }
            if (zero) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                work(r, j) -= factor * work(col, j);
                inv(r, j) -= factor * inv(col, j);
            }
        }
    }
    return inv;
}

} // namespace desarr

#endif
