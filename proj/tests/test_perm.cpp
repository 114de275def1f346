#include <gtest/gtest.h>

#include <random>

#include <desarr/perm.hpp>

using namespace desarr;

namespace
{

Permutation P(std::string_view s)
{
    return Permutation::parse(s);
}

Permutation random_perm(std::size_t n, std::mt19937 &rng)
{
    const auto id = Permutation::identity(n);
    std::vector<int> w(id.values().begin(), id.values().end());
    std::shuffle(w.begin(), w.end(), rng);
    return Permutation(w);
}

} // namespace

TEST(Permutation, ParseAndSerialize)
{
    EXPECT_EQ(P("31254").str(), "31254");
    EXPECT_EQ(Permutation().str(), "e");
    EXPECT_EQ(P("e").size(), 0U);
    EXPECT_EQ(Permutation::identity(10).str(), "1,2,3,4,5,6,7,8,9,10");
    EXPECT_EQ(P("1,2,3,4,5,6,7,8,9,10"), Permutation::identity(10));
    EXPECT_THROW(P("1123"), invalid_input);
    EXPECT_THROW(Permutation(std::vector<int>{0, 1}), invalid_input);
}

TEST(Permutation, Standardize)
{
    const std::vector<int> w{3, 6, 8, 1, 5};
    EXPECT_EQ(standardize(w).str(), "24513");
    EXPECT_EQ(standardize(std::vector<int>{}).size(), 0U);
    EXPECT_EQ(standardize(std::vector<int>{1, 2, 3}).str(), "123");
    EXPECT_THROW(standardize(std::vector<int>{2, 2}), invalid_input);
}

TEST(Permutation, Complement)
{
    EXPECT_EQ(complement(P("31254")).str(), "35412");
    EXPECT_EQ(complement(P("21")).str(), "12");
    EXPECT_EQ(complement(Permutation()).size(), 0U);
}

TEST(Statistics, PublishedExamples)
{
    EXPECT_EQ(statistics(P("31254")).des, 2);
    const auto r = statistics(P("214573689"));
    EXPECT_EQ(r.pk, 1);
    EXPECT_EQ(r.val, 2);
    EXPECT_EQ(r.dasc, 4);
    EXPECT_EQ(r.ddes, 0);
    const auto d = statistics(P("4321"));
    EXPECT_EQ(d.first_ascent, 4);
    EXPECT_EQ(d.des, 3);
    EXPECT_EQ(d.asc, 1);
}

TEST(Statistics, EmptyPermutation)
{
    const auto r = statistics(Permutation());
    EXPECT_EQ(r, StatRecord{});
    EXPECT_FALSE(r.first_ascent.has_value());
    EXPECT_TRUE(is_desarrangement(Permutation()));
}

TEST(Statistics, RightValleyAndFixedPoints)
{
    // ends in a descent: position n is a right valley
    EXPECT_EQ(statistics(P("21")).rval, 1);
    EXPECT_EQ(statistics(P("12")).rval, 0);
    EXPECT_EQ(statistics(P("1324")).fix, 2);
    EXPECT_EQ(statistics(P("46785213")).pix, 3);
}

TEST(Desarrangement, Membership)
{
    EXPECT_TRUE(is_desarrangement(P("213")));
    EXPECT_FALSE(is_desarrangement(P("123")));
    EXPECT_FALSE(is_desarrangement(P("1")));
    EXPECT_TRUE(is_desarrangement(P("4321")));
}

TEST(Composition, DescentComposition)
{
    EXPECT_EQ(descent_composition(P("317542689")), Composition({1, 2, 1, 1, 4}));
    EXPECT_EQ(descent_composition(P("12345")), Composition({5}));
    EXPECT_EQ(descent_composition(P("54321")), Composition({1, 1, 1, 1, 1}));
    EXPECT_EQ(descent_composition(Permutation()).length(), 0U);
    EXPECT_THROW(Composition({1, 0}), invalid_input);
}

TEST(PixedFactorization, Examples)
{
    const auto f = pixed_factorization(P("46785213"));
    EXPECT_EQ(f.increasing_prefix, (std::vector<int>{4, 6, 7}));
    EXPECT_EQ(f.desarrangement_suffix, (std::vector<int>{8, 5, 2, 1, 3}));
    EXPECT_EQ(pixed_factorization(P("213")).pix(), 0U);
    EXPECT_EQ(pixed_factorization(P("123")).pix(), 3U);
    EXPECT_TRUE(pixed_factorization(P("123")).desarrangement_suffix.empty());
}

TEST(Enumerate, Classes)
{
    const auto d4 = enumerate(4, PermClass::desarrangements);
    ASSERT_EQ(d4.size(), 9U);
    EXPECT_EQ(d4.front().str(), "2134");
    EXPECT_TRUE(enumerate(1, PermClass::desarrangements).empty());
    const auto s0 = enumerate(0, PermClass::all);
    ASSERT_EQ(s0.size(), 1U);
    EXPECT_EQ(s0[0].size(), 0U);
    EXPECT_EQ(enumerate(6, PermClass::all).size(), 720U);
    EXPECT_EQ(enumerate(6, PermClass::desarrangements).size(), 265U);
    EXPECT_EQ(enumerate(6, PermClass::derangements).size(), 265U);
    EXPECT_THROW(enumerate(12, PermClass::all), resource_limit);
    EXPECT_NO_THROW(enumerate(3, PermClass::all, 3));
}

TEST(Enumerate, Lexicographic)
{
    const auto all = enumerate(5, PermClass::all);
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
}

TEST(Enumerate, ParallelReductionIsDeterministic)
{
    auto visit = [](std::uint64_t &acc, std::span<const int> w) { acc += statistics(w).des * 7U + w[0]; };
    auto merge = [](std::uint64_t &a, const std::uint64_t &b) { a += b; };
    const auto one = parallel_reduce_permutations(8, PermClass::all, std::uint64_t{0}, visit, merge, 11, 1);
    const auto many = parallel_reduce_permutations(8, PermClass::all, std::uint64_t{0}, visit, merge, 11, 8);
    EXPECT_EQ(one, many);
}

TEST(Properties, DesPlusAscIsLength)
{
    for (std::size_t n = 0; n <= 7; ++n) {
        for_each_permutation(n, PermClass::all, [&](std::span<const int> w) {
            const auto r = statistics(w);
            ASSERT_EQ(r.des + r.asc, static_cast<int>(n));
        });
    }
}

TEST(Properties, PeaksOfComplementAreValleys)
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const auto p = random_perm(1 + trial % 12, rng);
        ASSERT_EQ(statistics(p).pk, statistics(complement(p)).val) << p.str();
        ASSERT_EQ(complement(complement(p)), p);
    }
}

TEST(Properties, RightValleysOfDesarrangements)
{
    for (std::size_t n = 1; n <= 8; ++n) {
        for_each_permutation(n, PermClass::desarrangements, [&](std::span<const int> w) {
            const auto r = statistics(w);
            ASSERT_EQ(r.rval, r.pk + 1);
        });
    }
}

TEST(Properties, PixedFactorizationIsUnique)
{
    for (std::size_t n = 0; n <= 8; ++n) {
        for_each_permutation(n, PermClass::all, [&](std::span<const int> w) {
            const auto f = pixed_factorization(w);
            std::vector<int> joined = f.increasing_prefix;
            joined.insert(joined.end(), f.desarrangement_suffix.begin(), f.desarrangement_suffix.end());
            ASSERT_TRUE(std::equal(joined.begin(), joined.end(), w.begin(), w.end()));
            ASSERT_TRUE(std::is_sorted(f.increasing_prefix.begin(), f.increasing_prefix.end()));
            ASSERT_TRUE(is_desarrangement(f.desarrangement_suffix));
            ASSERT_EQ(f.pix() == 0, is_desarrangement(w));
        });
    }
}

TEST(Properties, FirstAscentInRange)
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const auto n = static_cast<std::size_t>(1 + trial % 10);
        const auto fa = statistics(random_perm(n, rng)).first_ascent;
        ASSERT_TRUE(fa.has_value());
        ASSERT_GE(*fa, 1);
        ASSERT_LE(*fa, static_cast<int>(n));
    }
}
