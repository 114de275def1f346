#ifndef DESARR_POLY_HPP
#define DESARR_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <desarr/errors.hpp>
#include <desarr/rational.hpp>

namespace desarr
{

// Univariate polynomial, constant term first. The zero polynomial is stored
// as the single coefficient 0; otherwise the leading coefficient is nonzero.
class Poly
{
public:
    Poly() : coeffs_{BigRational{0}} {}
    explicit Poly(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs))
    {
        normalize();
    }

    static Poly from_integers(const std::vector<long long> &cs)
    {
        std::vector<BigRational> v;
        v.reserve(cs.size());
        for (const auto c : cs) {
            v.emplace_back(c);
        }
        return Poly(std::move(v));
    }

    const std::vector<BigRational> &coeffs() const noexcept
    {
        return coeffs_;
    }
    bool is_zero() const noexcept
    {
        return coeffs_.size() == 1 && coeffs_[0] == 0;
    }
    // -1 for the zero polynomial.
    int degree() const noexcept
    {
        return is_zero() ? -1 : static_cast<int>(coeffs_.size()) - 1;
    }
    BigRational coeff(std::size_t k) const
    {
        return k < coeffs_.size() ? coeffs_[k] : BigRational{0};
    }

    BigRational operator()(const BigRational &x) const
    {
        BigRational acc{0};
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            acc = acc * x + coeffs_[k];
        }
        return acc;
    }

    BigRational sum_of_coefficients() const
    {
        BigRational s{0};
        for (const auto &c : coeffs_) {
            s += c;
        }
        return s;
    }

    bool has_nonnegative_integer_coefficients() const
    {
        for (const auto &c : coeffs_) {
            if (!is_integral(c) || c < 0) {
                return false;
            }
        }
        return true;
    }

    friend Poly operator+(const Poly &a, const Poly &b)
    {
        std::vector<BigRational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t k = 0; k < out.size(); ++k) {
            out[k] = a.coeff(k) + b.coeff(k);
        }
        return Poly(std::move(out));
    }

    friend Poly operator*(const Poly &a, const Poly &b)
    {
        std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return Poly(std::move(out));
    }

    friend Poly operator*(const BigRational &c, const Poly &a)
    {
        std::vector<BigRational> out = a.coeffs_;
        for (auto &x : out) {
            x *= c;
        }
        return Poly(std::move(out));
    }

    // Human-readable, e.g. "3t+5t^2+t^3"; integer-only terms print without
    // a denominator. The zero polynomial prints as "0".
    std::string str(const std::string &var = "t") const
    {
        if (is_zero()) {
            return "0";
        }
        std::string out;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            const BigRational &c = coeffs_[k];
            if (c == 0) {
                continue;
            }
            BigRational mag = c < 0 ? BigRational(-c) : c;
            if (!out.empty()) {
                out += c < 0 ? "-" : "+";
            } else if (c < 0) {
                out += "-";
            }
            if (k == 0 || mag != 1) {
                out += to_display_string(mag);
            }
            if (k >= 1) {
                out += var;
            }
            if (k >= 2) {
                out += "^" + std::to_string(k);
            }
        }
        return out;
    }

    friend bool operator==(const Poly &, const Poly &) = default;

private:
    void normalize()
    {
        while (coeffs_.size() > 1 && coeffs_.back() == 0) {
            coeffs_.pop_back();
        }
        if (coeffs_.empty()) {
            coeffs_.emplace_back(0);
        }
    }

    std::vector<BigRational> coeffs_;
};

struct Point {
    BigRational x;
    BigRational y;
};

// The unique polynomial of degree <= degree_bound through the points. Uses
// the first degree_bound+1 points (Newton divided differences) and checks
// every remaining point against the result.
inline Poly interpolate(const std::vector<Point> &points, std::size_t degree_bound)
{
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i].x == points[j].x) {
                throw invalid_input("interpolate: duplicate abscissa " + to_display_string(points[i].x));
            }
        }
    }
    const std::size_t m = degree_bound + 1;
    if (points.size() < m) {
        throw invalid_input("interpolate: need at least " + std::to_string(m) + " points, got " +
                            std::to_string(points.size()));
    }
    std::vector<BigRational> dd(m);
    for (std::size_t i = 0; i < m; ++i) {
        dd[i] = points[i].y;
    }
    for (std::size_t level = 1; level < m; ++level) {
        for (std::size_t i = m - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (points[i].x - points[i - level].x);
        }
    }
    // Expand the Newton form into the monomial basis.
    Poly result;
    Poly basis(std::vector<BigRational>{BigRational{1}});
    for (std::size_t i = 0; i < m; ++i) {
        result = result + dd[i] * basis;
        basis = basis * Poly(std::vector<BigRational>{-points[i].x, BigRational{1}});
    }
    for (std::size_t i = m; i < points.size(); ++i) {
        if (result(points[i].x) != points[i].y) {
            throw interpolation_error("interpolate: data inconsistent with degree bound " +
                                      std::to_string(degree_bound) + " at x = " + to_display_string(points[i].x));
        }
    }
    return result;
}

// Polynomial in two variables t and s; coeff(i, j) multiplies t^i s^j.
class BivariatePoly
{
public:
    BivariatePoly() = default;
    explicit BivariatePoly(std::vector<std::vector<BigRational>> grid) : grid_(std::move(grid))
    {
        normalize();
    }

    const std::vector<std::vector<BigRational>> &grid() const noexcept
    {
        return grid_;
    }

    BigRational coeff(std::size_t i, std::size_t j) const
    {
        if (i < grid_.size() && j < grid_[i].size()) {
            return grid_[i][j];
        }
        return BigRational{0};
    }

    // Substitute s = value, leaving a polynomial in t.
    Poly at_s(const BigRational &s) const
    {
        std::vector<BigRational> out(grid_.size());
        for (std::size_t i = 0; i < grid_.size(); ++i) {
            BigRational acc{0};
            for (std::size_t j = grid_[i].size(); j-- > 0;) {
                acc = acc * s + grid_[i][j];
            }
            out[i] = acc;
        }
        return Poly(std::move(out));
    }

    // Substitute t = value, leaving a polynomial in s.
    Poly at_t(const BigRational &t) const
    {
        std::size_t width = 0;
        for (const auto &row : grid_) {
            width = std::max(width, row.size());
        }
        std::vector<BigRational> out(width);
        BigRational tp{1};
        for (std::size_t i = 0; i < grid_.size(); ++i) {
            for (std::size_t j = 0; j < grid_[i].size(); ++j) {
                out[j] += grid_[i][j] * tp;
            }
            tp *= t;
        }
        return Poly(std::move(out));
    }

    bool has_nonnegative_integer_coefficients() const
    {
        for (const auto &row : grid_) {
            for (const auto &c : row) {
                if (!is_integral(c) || c < 0) {
                    return false;
                }
            }
        }
        return true;
    }

    BigRational sum_of_coefficients() const
    {
        BigRational s{0};
        for (const auto &row : grid_) {
            for (const auto &c : row) {
                s += c;
            }
        }
        return s;
    }

    friend bool operator==(const BivariatePoly &, const BivariatePoly &) = default;

private:
    void normalize()
    {
        for (auto &row : grid_) {
            while (!row.empty() && row.back() == 0) {
                row.pop_back();
            }
        }
        while (!grid_.empty() && grid_.back().empty()) {
            grid_.pop_back();
        }
    }

    std::vector<std::vector<BigRational>> grid_;
};

// values[a][b] is the polynomial's value at (ts[a], ss[b]). Interpolates in s
// along each row, then in t coefficientwise.
inline BivariatePoly interpolate_grid(const std::vector<BigRational> &ts, const std::vector<BigRational> &ss,
                                      const std::vector<std::vector<BigRational>> &values, std::size_t bound_t,
                                      std::size_t bound_s)
{
    if (values.size() != ts.size()) {
        throw invalid_input("interpolate_grid: value rows do not match t points");
    }
    std::vector<Poly> in_s;
    for (std::size_t a = 0; a < ts.size(); ++a) {
        if (values[a].size() != ss.size()) {
            throw invalid_input("interpolate_grid: value columns do not match s points");
        }
        std::vector<Point> pts;
        for (std::size_t b = 0; b < ss.size(); ++b) {
            pts.push_back({ss[b], values[a][b]});
        }
        in_s.push_back(interpolate(pts, bound_s));
    }
    std::vector<std::vector<BigRational>> grid(bound_t + 1, std::vector<BigRational>(bound_s + 1));
    for (std::size_t j = 0; j <= bound_s; ++j) {
        std::vector<Point> pts;
        for (std::size_t a = 0; a < ts.size(); ++a) {
            pts.push_back({ts[a], in_s[a].coeff(j)});
        }
        const Poly pj = interpolate(pts, bound_t);
        for (std::size_t i = 0; i <= bound_t; ++i) {
            grid[i][j] = pj.coeff(i);
        }
    }
    return BivariatePoly(std::move(grid));
}

} // namespace desarr

#endif
