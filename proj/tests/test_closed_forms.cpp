#include <gtest/gtest.h>

#include <desarr/closed_forms.hpp>
#include <desarr/oracle.hpp>
#include <desarr/reference.hpp>

using namespace desarr;

namespace
{

using Q = BigRational;

Poly row(std::initializer_list<long long> cs)
{
    return Poly::from_integers(cs);
}

Poly oracle_row(std::size_t n, Stat st, PermClass cls)
{
    std::vector<Q> cs;
    for (const auto &c : row_coefficients(distribution(n, st, cls))) {
        cs.emplace_back(c);
    }
    return Poly(cs);
}

} // namespace

TEST(Catalog, NamesRoundTrip)
{
    for (const auto &info : formula_catalog) {
        EXPECT_EQ(parse_formula_id(info.name), info.id);
        EXPECT_EQ(to_string(info.id), info.name);
    }
    EXPECT_FALSE(parse_formula_id("nope").has_value());
    EXPECT_EQ(formula_info(FormulaId::joint_pix_des).arity, 2);
    EXPECT_EQ(formula_info(FormulaId::catalan_ogf).arity, 0);
}

TEST(Evaluate, Examples)
{
    EXPECT_EQ(egf_count(evaluate_formula(FormulaId::des, 2, 4), 4), Q(34));
    EXPECT_EQ(egf_counts(evaluate_formula(FormulaId::derangement_egf, 0, 5)), (std::vector<Q>{1, 0, 1, 2, 9, 44}));
    EXPECT_EQ(egf_counts(evaluate_formula(FormulaId::eulerian, 1, 3)), (std::vector<Q>{1, 1, 2, 6}));
}

TEST(Evaluate, PoleIsSignalled)
{
    EXPECT_THROW(evaluate_formula(FormulaId::des, Q(1, 2), 4), pole_at_specialization);
}

TEST(Evaluate, PeakRelation)
{
    // P(t, x) = e^x D^val(t, x)
    for (const long long t : {2, 3, 7}) {
        EXPECT_EQ(peak_egf(t, 8), exp_series(1, 8) * evaluate_formula(FormulaId::val, t, 8));
    }
}

TEST(Distribution, PublishedRows)
{
    EXPECT_EQ(distribution_polynomials(FormulaId::des, 6).univariate[6], row({0, 5, 94, 137, 28, 1}));
    EXPECT_EQ(distribution_polynomials(FormulaId::pk, 7).univariate[7], row({32, 864, 958}));
    EXPECT_EQ(distribution_polynomials(FormulaId::ddes, 6).univariate[6], row({160, 66, 38, 0, 1}));
}

TEST(Distribution, AllTablesToNine)
{
    const std::pair<FormulaId, const reference::Rows *> tables[] = {
        {FormulaId::des, &reference::des_table()},   {FormulaId::pk, &reference::pk_table()},
        {FormulaId::val, &reference::val_table()},   {FormulaId::dasc, &reference::dasc_table()},
        {FormulaId::ddes, &reference::ddes_table()},
    };
    for (const auto &[id, ref] : tables) {
        const auto t = distribution_polynomials(id, 9);
        ASSERT_EQ(t.univariate.size(), 10U);
        for (std::size_t n = 0; n <= 9; ++n) {
            EXPECT_EQ(t.univariate[n], Poly::from_integers((*ref)[n])) << to_string(id) << " n=" << n;
            EXPECT_LE(t.univariate[n].degree(), static_cast<int>(n));
        }
    }
}

TEST(Distribution, RowSums)
{
    const auto e = distribution_polynomials(FormulaId::eulerian, 8);
    const auto pix = distribution_polynomials(FormulaId::joint_pix_des, 7);
    BigInt fact = 1;
    for (std::size_t n = 0; n <= 7; ++n) {
        fact *= n == 0 ? 1 : n;
        EXPECT_EQ(e.univariate[n].sum_of_coefficients(), Q(fact));
        EXPECT_EQ(pix.bivariate[n].sum_of_coefficients(), Q(fact));
    }
    const auto pk = distribution_polynomials(FormulaId::pk, 9);
    for (std::size_t n = 0; n <= 9; ++n) {
        EXPECT_EQ(pk.univariate[n].sum_of_coefficients(), Q(reference::derangement_numbers[n]));
    }
}

TEST(Distribution, MatchesOracle)
{
    const std::pair<FormulaId, Stat> pairs[] = {{FormulaId::des, Stat::des},
                                                {FormulaId::pk, Stat::pk},
                                                {FormulaId::val, Stat::val},
                                                {FormulaId::dasc, Stat::dasc},
                                                {FormulaId::ddes, Stat::ddes}};
    for (const auto &[id, st] : pairs) {
        const auto t = distribution_polynomials(id, 8);
        for (std::size_t n = 0; n <= 8; ++n) {
            EXPECT_EQ(t.univariate[n], oracle_row(n, st, PermClass::desarrangements)) << to_string(id) << n;
        }
    }
}

TEST(Distribution, JointSpecializations)
{
    const auto pix = distribution_polynomials(FormulaId::joint_pix_des, 8);
    EXPECT_EQ(pix.bivariate[4].at_s(1), row({1, 11, 11, 1}));
    const auto des = distribution_polynomials(FormulaId::des, 8);
    const auto pk_des = distribution_polynomials(FormulaId::joint_pk_des, 8);
    for (std::size_t n = 0; n <= 8; ++n) {
        EXPECT_EQ(pk_des.bivariate[n].at_s(1), des.univariate[n]);
        EXPECT_EQ(pix.bivariate[n].at_s(0), des.univariate[n]);
        EXPECT_EQ(pix.bivariate[n].at_t(1), oracle_row(n, Stat::fix, PermClass::all));
    }
}

TEST(Distribution, CorruptedFormulaIsRejectedOrVisible)
{
    // Doubling the series breaks row sums; interpolation still succeeds, the rows differ.
    const Evaluator doubled = [](const Q &t, const Q &s, std::size_t N) {
        return Q(2) * evaluate_formula(FormulaId::des, t, s, N);
    };
    const auto t = distribution_polynomials(FormulaId::des, 3, doubled);
    EXPECT_EQ(t.univariate[2], row({0, 2}));
    // A non-polynomial row cannot be interpolated.
    const Evaluator shifted = [](const Q &t, const Q &s, std::size_t N) {
        return evaluate_formula(FormulaId::des, t, s, N) / TruncSeries(N, {t, -1});
    };
    EXPECT_THROW(distribution_polynomials(FormulaId::des, 4, shifted), interpolation_error);
}

TEST(Distribution, NeedsAStatisticVariable)
{
    EXPECT_THROW(distribution_polynomials(FormulaId::catalan_ogf, 3), invalid_input);
}

TEST(Specialization, AllChecksPass)
{
    for (const auto &c : specialization_checks(8)) {
        EXPECT_TRUE(c.pass) << c.name << " " << c.detail;
    }
}

TEST(Ogf, Sequences)
{
    EXPECT_EQ(evaluate_formula(FormulaId::catalan_ogf, 0, 6), TruncSeries(6, {1, 1, 2, 5, 14, 42, 132}));
    EXPECT_EQ(evaluate_formula(FormulaId::jacobsthal_shifted_ogf, 0, 6), TruncSeries(6, {1, 0, 1, 1, 3, 5, 11}));
}
