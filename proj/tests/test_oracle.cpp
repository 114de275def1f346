#include <gtest/gtest.h>

#include <desarr/oracle.hpp>
#include <desarr/verify.hpp>

using namespace desarr;

namespace
{

DistributionRow single(std::initializer_list<std::pair<int, long long>> kv)
{
    DistributionRow r;
    for (const auto &[k, v] : kv) {
        r[{k}] = v;
    }
    return r;
}

} // namespace

TEST(Distribution, PublishedRows)
{
    EXPECT_EQ(distribution(4, Stat::des, PermClass::desarrangements), single({{1, 3}, {2, 5}, {3, 1}}));
    EXPECT_EQ(distribution(5, Stat::pk, PermClass::desarrangements), single({{0, 8}, {1, 36}}));
    EXPECT_EQ(distribution(9, Stat::val, PermClass::desarrangements),
              single({{1, 2456}, {2, 47520}, {3, 75584}, {4, 7936}}));
}

TEST(Distribution, TotalsAreClassSizes)
{
    BigInt fact = 1;
    for (std::size_t n = 0; n <= 8; ++n) {
        fact *= n == 0 ? 1 : n;
        const auto joint = std::vector<Stat>(all_stats.begin(), all_stats.end());
        EXPECT_EQ(row_total(distribution(n, joint, PermClass::all)), fact);
        EXPECT_EQ(row_total(distribution(n, Stat::pix, PermClass::desarrangements)),
                  sequence(SequenceId::derangement, n));
        EXPECT_EQ(row_total(distribution(n, Stat::fix, PermClass::derangements)), sequence(SequenceId::derangement, n));
    }
}

TEST(Distribution, RestrictedToPatternClass)
{
    EXPECT_EQ(row_total(distribution(6, Stat::des, PermClass::desarrangements, PatternSet::parse("321"))), 42);
}

TEST(Distribution, StatNames)
{
    for (const auto s : all_stats) {
        EXPECT_EQ(parse_stat(to_string(s)), s);
    }
    EXPECT_FALSE(parse_stat("maj").has_value());
    EXPECT_THROW(row_coefficients(distribution(3, std::vector<Stat>{Stat::des, Stat::pk}, PermClass::all)),
                 invalid_input);
}

TEST(Distribution, CapIsEnforced)
{
    EXPECT_THROW(distribution(5, Stat::des, PermClass::all, std::nullopt, 4), resource_limit);
}

TEST(VerifyAll, TrivialSize)
{
    const auto reports = verify_all(0);
    EXPECT_FALSE(reports.empty());
    for (const auto &r : reports) {
        EXPECT_TRUE(r.pass()) << r.group << ": " << r.subject;
    }
}

TEST(VerifyAll, FullRun)
{
    const auto reports = verify_all(8);
    std::set<std::string> groups;
    for (const auto &r : reports) {
        groups.insert(r.group);
        EXPECT_TRUE(r.pass()) << r.group << ": " << r.subject;
    }
    EXPECT_EQ(groups.size(), check_groups.size());
}

TEST(VerifyAll, OnlyFilter)
{
    VerifyOptions opt;
    opt.only = {"run-theorem"};
    const auto reports = verify_all(6, opt);
    ASSERT_FALSE(reports.empty());
    for (const auto &r : reports) {
        EXPECT_EQ(r.group, "run-theorem");
    }
    opt.only = {"nonsense"};
    EXPECT_THROW(verify_all(3, opt), invalid_input);
}

TEST(VerifyAll, CorruptedDesFormulaIsCaughtAtTwo)
{
    VerifyOptions opt;
    opt.only = {"tables"};
    // D_2^des = t; adding x^2 shifts the n = 2 row by a constant 2
    opt.overrides[FormulaId::des] = [](const BigRational &t, const BigRational &s, std::size_t N) {
        return evaluate_formula(FormulaId::des, t, s, N) + TruncSeries::monomial(1, 2, N);
    };
    const auto reports = verify_all(5, opt);
    const auto it = std::find_if(reports.begin(), reports.end(),
                                 [](const auto &r) { return r.subject.rfind("des:", 0) == 0; });
    ASSERT_NE(it, reports.end());
    EXPECT_FALSE(it->pass());
    std::optional<std::size_t> first;
    for (const auto &v : it->verdicts) {
        if (!v.match) {
            first = v.n;
            break;
        }
    }
    ASSERT_TRUE(first.has_value());
    EXPECT_EQ(*first, 2U);
    EXPECT_FALSE(all_pass(reports));
}

TEST(VerifyAll, CorruptionAlsoBreaksRunTheoremComparison)
{
    VerifyOptions opt;
    opt.only = {"run-theorem"};
    opt.overrides[FormulaId::des] = [](const BigRational &t, const BigRational &s, std::size_t N) {
        return evaluate_formula(FormulaId::des, t, s, N) + TruncSeries::monomial(1, 2, N);
    };
    EXPECT_FALSE(all_pass(verify_all(4, opt)));
}
