#include <gtest/gtest.h>

#include <random>

#include <desarr/poly.hpp>
#include <desarr/series.hpp>

using namespace desarr;

namespace
{

using Q = BigRational;

std::vector<Q> n_factorial_coeffs(const TruncSeries &a)
{
    return egf_counts(a);
}

TruncSeries random_series(std::size_t N, std::mt19937 &rng, bool unit_constant = false)
{
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    std::vector<Q> c(N + 1);
    for (auto &x : c) {
        x = Q(num(rng), den(rng));
    }
    if (unit_constant && c[0] == 0) {
        c[0] = 1;
    }
    return TruncSeries(N, c);
}

} // namespace

TEST(Rational, LowestTermsAndParsing)
{
    const Q q(-6, 4);
    EXPECT_EQ(to_fraction_string(q), "-3/2");
    EXPECT_EQ(parse_rational("6/-4"), q);
    EXPECT_EQ(to_display_string(Q(4, 2)), "2");
    EXPECT_EQ(parse_rational("-3/6"), Q(-1, 2));
    EXPECT_EQ(parse_rational("7"), Q(7));
    EXPECT_THROW(parse_rational("1/0"), invalid_input);
    EXPECT_THROW(parse_rational("abc"), invalid_input);
}

TEST(Series, Arithmetic)
{
    const TruncSeries a(3, {1, 1});
    const TruncSeries b(3, {1, -1});
    EXPECT_EQ(series_arith(a, b, SeriesOp::mul), TruncSeries(3, {1, 0, -1}));
    EXPECT_EQ(series_arith(TruncSeries::constant(1, 4), TruncSeries(4, {1, -1}), SeriesOp::div),
              TruncSeries(4, {1, 1, 1, 1, 1}));
    const TruncSeries num(6, {1, -1, -1});
    const TruncSeries den = TruncSeries(6, {1, 1}) * TruncSeries(6, {1, -2});
    EXPECT_EQ(num / den, TruncSeries(6, {1, 0, 1, 1, 3, 5, 11}));
}

TEST(Series, Errors)
{
    EXPECT_THROW(TruncSeries(3) + TruncSeries(4), order_mismatch);
    EXPECT_THROW(TruncSeries::constant(1, 3) / TruncSeries(3, {0, 1}), not_invertible);
}

TEST(Series, Exponentials)
{
    EXPECT_EQ(exp_series(0, 5), TruncSeries::constant(1, 5));
    EXPECT_EQ(exp_series(1, 3), TruncSeries(3, {1, 1, Q(1, 2), Q(1, 6)}));
    const auto der = exp_series(-1, 4) / TruncSeries(4, {1, -1});
    EXPECT_EQ(n_factorial_coeffs(der), (std::vector<Q>{1, 0, 1, 2, 9}));
    // (e^{cx} - 1)/c at c = 0 is x
    EXPECT_EQ(expm1_div(0, 3), TruncSeries(3, {0, 1}));
}

TEST(Series, EvenHyperbolics)
{
    EXPECT_EQ(cosh_even(0, 4), TruncSeries::constant(1, 4));
    EXPECT_EQ(cosh_even(4, 2), TruncSeries(2, {1, 0, Q(1, 2)}));
    // cosh(x/2) = 1 + x^2/8 + x^4/384
    EXPECT_EQ(cosh_even(1, 4), TruncSeries(4, {1, 0, Q(1, 8), 0, Q(1, 384)}));
    EXPECT_EQ(sinh_even_div(0, 3), TruncSeries(3, {0, Q(1, 2)}));
    // sinh(x)/2
    EXPECT_EQ(sinh_even_div(4, 3), TruncSeries(3, {0, Q(1, 2), 0, Q(1, 12)}));
    // sinh(x/2) = x/2 + x^3/48 + x^5/3840
    EXPECT_EQ(sinh_even_div(1, 5), TruncSeries(5, {0, Q(1, 2), 0, Q(1, 48), 0, Q(1, 3840)}));
}

TEST(Series, HatTransform)
{
    // x^3/(1-x^2) -> sinh x - x
    const auto a = TruncSeries::monomial(1, 3, 7) / TruncSeries(7, {1, 0, -1});
    EXPECT_EQ(hat_transform(a), TruncSeries(7, {0, 0, 0, Q(1, 6), 0, Q(1, 120), 0, Q(1, 5040)}));
    EXPECT_EQ(hat_transform(TruncSeries::constant(1, 3)), TruncSeries::constant(1, 3));
    EXPECT_EQ(hat_transform(TruncSeries(4, {0, 1, 1, 0, 1})), TruncSeries(4, {0, 1, Q(1, 2), 0, Q(1, 24)}));
}

TEST(Series, HatTransformIsLinear)
{
    std::mt19937 rng(3);
    for (int i = 0; i < 20; ++i) {
        const auto a = random_series(8, rng);
        const auto b = random_series(8, rng);
        EXPECT_EQ(hat_transform(a + Q(3) * b), hat_transform(a) + Q(3) * hat_transform(b));
    }
}

TEST(Series, RingAxioms)
{
    std::mt19937 rng(5);
    for (int i = 0; i < 30; ++i) {
        const std::size_t N = static_cast<std::size_t>(i % 13);
        const auto a = random_series(N, rng);
        const auto b = random_series(N, rng);
        const auto c = random_series(N, rng, true);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a / c) * c, a);
    }
}

TEST(SeriesMatrix, Inverse)
{
    const std::size_t N = 6;
    const auto I = SeriesMatrix::identity(3, N);
    EXPECT_EQ(matrix_invert(I), I);

    // [[1, t x^2/(1 - t^2 x^2)], [0, 1 + x/(1 - t x)]] at t = 2
    SeriesMatrix m(2, N);
    const Q t(2);
    m(0, 0) = TruncSeries::constant(1, N);
    m(0, 1) = t * TruncSeries::monomial(1, 2, N) / TruncSeries(N, {1, 0, -t * t});
    m(1, 1) = TruncSeries::constant(1, N) + TruncSeries::monomial(1, 1, N) / TruncSeries(N, {1, -t});
    const auto inv = matrix_invert(m);
    EXPECT_EQ(inv * m, SeriesMatrix::identity(2, N));
    EXPECT_EQ(m * inv, SeriesMatrix::identity(2, N));

    SeriesMatrix singular(2, N);
    singular(0, 0) = TruncSeries::constant(1, N);
    singular(0, 1) = TruncSeries::constant(1, N);
    singular(1, 0) = TruncSeries::constant(1, N);
    singular(1, 1) = TruncSeries::constant(1, N);
    EXPECT_THROW(matrix_invert(singular), not_invertible);
}

TEST(SeriesMatrix, RandomInverses)
{
    std::mt19937 rng(9);
    for (int trial = 0; trial < 5; ++trial) {
        const std::size_t N = 8;
        SeriesMatrix m = SeriesMatrix::identity(3, N);
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                auto r = random_series(N, rng);
                r[0] = i == j ? Q(2) : Q(0);
                m(i, j) = r;
            }
        }
        EXPECT_EQ(matrix_invert(m) * m, SeriesMatrix::identity(3, N));
    }
}

TEST(Poly, Interpolate)
{
    EXPECT_EQ(interpolate({{0, 1}, {1, 1}, {2, 1}}, 2), Poly({Q(1)}));
    EXPECT_EQ(interpolate({{0, 1}, {1, 3}, {2, 5}}, 1), Poly({Q(1), Q(2)}));
    // D_4^des(t) = 3t + 5t^2 + t^3
    const Poly d4({Q(0), Q(3), Q(5), Q(1)});
    std::vector<Point> pts;
    for (int t = 2; t <= 5; ++t) {
        pts.push_back({t, d4(t)});
    }
    EXPECT_EQ(interpolate(pts, 3), d4);
    EXPECT_THROW(interpolate({{1, 1}, {1, 2}}, 1), invalid_input);
    EXPECT_THROW(interpolate({{0, 0}, {1, 1}, {2, 4}}, 1), interpolation_error);
}

TEST(Poly, InterpolateInvertsEvaluate)
{
    std::mt19937 rng(21);
    std::uniform_int_distribution<int> coeff(-20, 20);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t deg = static_cast<std::size_t>(trial % 9);
        std::vector<Q> c(deg + 1);
        for (auto &x : c) {
            x = coeff(rng);
        }
        const Poly p(c);
        std::vector<Point> pts;
        for (std::size_t k = 0; k <= deg + 2; ++k) {
            pts.push_back({Q(static_cast<long long>(k) - 3, 2), p(Q(static_cast<long long>(k) - 3, 2))});
        }
        EXPECT_EQ(interpolate(pts, deg), p);
    }
}
