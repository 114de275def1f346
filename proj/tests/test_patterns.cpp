#include <gtest/gtest.h>

#include <set>

#include <desarr/patterns.hpp>
#include <desarr/reference.hpp>
#include <desarr/sequences.hpp>

using namespace desarr;

namespace
{

Permutation P(std::string_view s)
{
    return Permutation::parse(s);
}

PatternSet S(std::string_view s)
{
    return PatternSet::parse(s);
}

} // namespace

TEST(PatternSet, ParseAndPrint)
{
    EXPECT_EQ(S("{312,123}").str(), "{123,312}");
    EXPECT_EQ(S("").str(), "{}");
    EXPECT_EQ(PatternSet::all_subsets().size(), 64U);
    EXPECT_EQ(S("123,132").complemented(), S("321,312"));
    EXPECT_THROW(S("124"), invalid_input);
}

TEST(Avoidance, Examples)
{
    EXPECT_FALSE(avoids(P("215364"), S("312")));
    EXPECT_TRUE(avoids(P("432651"), S("312")));
    EXPECT_TRUE(avoids(Permutation(), S("123,132,213,231,312,321")));
    EXPECT_TRUE(avoids(P("21"), S("123,321")));
}

TEST(CountClass, Examples)
{
    EXPECT_EQ(count_class(5, S("321"), PermClass::desarrangements), 14);
    EXPECT_EQ(count_class(5, S("132"), PermClass::desarrangements), 18);
    EXPECT_EQ(count_class(4, S("213"), PermClass::desarrangements), 4);
    EXPECT_EQ(count_class(6, S("123"), PermClass::all), 132);
}

TEST(ClosedForm, Examples)
{
    EXPECT_EQ(closed_form_count(6, S("123,312")), 7);
    EXPECT_EQ(closed_form_count(4, S("123,132")), 3);
    EXPECT_EQ(closed_form_count(7, S("213,132")), 21);
    EXPECT_EQ(closed_form_count(10, S("321")), 4862);
    for (const auto set : PatternSet::all_subsets()) {
        EXPECT_EQ(closed_form_count(0, set), 1) << set.str();
    }
}

TEST(ClosedForm, AllSubsetsMatchBruteForce)
{
    for (std::size_t n = 0; n <= 9; ++n) {
        const auto brute = count_all_classes(n, PermClass::desarrangements);
        for (const auto set : PatternSet::all_subsets()) {
            ASSERT_EQ(closed_form_count(n, set), brute[set.mask()]) << set.str() << " n=" << n;
        }
    }
}

TEST(ClosedForm, DescriptionsCoverEverySet)
{
    for (const auto set : PatternSet::all_subsets()) {
        EXPECT_FALSE(describe_class(set).formula.empty()) << set.str();
    }
    EXPECT_EQ(describe_class(S("321")).oeis, "A000108");
    EXPECT_EQ(describe_class(S("123,132,213")).oeis, "A000045");
}

TEST(Sequences, Examples)
{
    EXPECT_EQ(sequence(SequenceId::fine, 7), 57);
    EXPECT_EQ(sequence(SequenceId::a_seq, 7), 100);
    EXPECT_EQ(sequence(SequenceId::a_seq, 11), 13035);
    for (std::size_t n = 0; n <= 11; ++n) {
        EXPECT_EQ(sequence(SequenceId::fine, n), reference::fine_table[n]);
        EXPECT_EQ(sequence(SequenceId::jacobsthal, n), reference::jacobsthal_table[n]);
        EXPECT_EQ(sequence(SequenceId::derangement, n), reference::derangement_numbers[n]);
    }
    EXPECT_NE(sequence(SequenceId::a_seq, 11), reference::a_sequence_table[11]);
}

TEST(Sequences, FineCatalanIdentity)
{
    for (std::size_t n = 1; n <= 20; ++n) {
        EXPECT_EQ(sequence(SequenceId::catalan, n), 2 * sequence(SequenceId::fine, n + 1) + sequence(SequenceId::fine, n));
    }
}

TEST(Symmetry, WilfOnAllPermutations)
{
    for (std::size_t n = 0; n <= 8; ++n) {
        const auto s = count_all_classes(n, PermClass::all);
        for (const auto set : PatternSet::all_subsets()) {
            ASSERT_EQ(s[set.mask()], s[set.complemented().mask()]) << set.str();
        }
    }
}

TEST(Symmetry, FailsOnDesarrangements)
{
    const auto d = count_all_classes(5, PermClass::desarrangements);
    bool witness = false;
    for (const auto set : PatternSet::all_subsets()) {
        witness = witness || d[set.mask()] != d[set.complemented().mask()];
    }
    EXPECT_TRUE(witness);
}

TEST(Lemma, StructureOfSingletonClasses)
{
    for (std::size_t n = 2; n <= 9; ++n) {
        const int ni = static_cast<int>(n);
        for_each_permutation(n, PermClass::desarrangements, [&](std::span<const int> w) {
            if (avoids(w, S("213"))) {
                ASSERT_EQ(w[0], ni);
            }
            if (avoids(w, S("231"))) {
                ASSERT_EQ(w[static_cast<std::size_t>(*first_ascent(w)) - 1], 1);
            }
            if (avoids(w, S("312"))) {
                ASSERT_EQ(w[0], w[1] + 1);
            }
            if (avoids(w, S("321"))) {
                ASSERT_EQ(w[1], 1);
            }
        });
    }
}

TEST(Bijection, DisplayedImages)
{
    EXPECT_EQ(bijection(BijectionId::insert_321, P("45123"), Direction::forward).str(), "516234");
    EXPECT_EQ(bijection(BijectionId::phi_312, P("342561"), Direction::forward).str(), "4352671");
    EXPECT_EQ(bijection(BijectionId::phi_123_132_213, P("645321"), Direction::forward).str(), "4231");
    EXPECT_EQ(bijection(BijectionId::phi_123_132_213, P("645231"), Direction::forward).str(), "53412");
    EXPECT_EQ(bijection(BijectionId::phi_123_132_213, P("645312"), Direction::forward).str(), "53421");
}

TEST(Bijection, NamesRoundTrip)
{
    for (const auto id : all_bijections) {
        EXPECT_EQ(parse_bijection_id(to_string(id)), id);
    }
}

TEST(Bijection, DomainViolation)
{
    EXPECT_THROW(bijection(BijectionId::insert_321, P("321"), Direction::forward), invalid_input);
    EXPECT_THROW(bijection(BijectionId::phi_213, P("123"), Direction::inverse), invalid_input);
}

TEST(Bijection, RoundTripsOnFullDomains)
{
    for (const auto id : all_bijections) {
        for (std::size_t n = detail::min_domain_size(id); n <= 8; ++n) {
            const auto dom = bijection_domain(id, n);
            const auto cod = bijection_codomain(id, n);
            ASSERT_EQ(dom.size(), cod.size()) << to_string(id) << " n=" << n;
            std::set<Permutation> images;
            for (const auto &p : dom) {
                const auto q = bijection(id, p, Direction::forward);
                ASSERT_TRUE(in_bijection_codomain(id, q, n)) << to_string(id) << " " << p.str();
                ASSERT_EQ(bijection(id, q, Direction::inverse, n), p) << to_string(id) << " " << p.str();
                images.insert(q);
            }
            ASSERT_EQ(images, std::set<Permutation>(cod.begin(), cod.end()));
        }
    }
}

TEST(Bijection, CatalanRecurrenceFrom213)
{
    // C_n = d_n(213) + d_{n+1}(213)
    for (std::size_t n = 1; n <= 8; ++n) {
        EXPECT_EQ(sequence(SequenceId::catalan, n),
                  count_class(n, S("213"), PermClass::desarrangements) +
                      count_class(n + 1, S("213"), PermClass::desarrangements));
    }
}

TEST(SimionSchmidt, Examples)
{
    EXPECT_EQ(simion_schmidt(P("213")).str(), "213");
    EXPECT_EQ(simion_schmidt(P("54321")).str(), "54321");
    EXPECT_THROW(simion_schmidt(P("123")), invalid_input);
}

TEST(SimionSchmidt, RestrictsToDesarrangements)
{
    for (std::size_t n = 0; n <= 8; ++n) {
        std::set<Permutation> images;
        std::size_t domain = 0;
        for_each_permutation(n, PermClass::desarrangements, [&](std::span<const int> w) {
            const Permutation p{std::vector<int>(w.begin(), w.end())};
            if (!avoids(p, S("123"))) {
                return;
            }
            ++domain;
            const auto q = simion_schmidt(p);
            ASSERT_TRUE(avoids(q, S("132")));
            ASSERT_TRUE(is_desarrangement(q));
            ASSERT_EQ(simion_schmidt(q, Direction::inverse), p);
            images.insert(q);
        });
        EXPECT_EQ(images.size(), domain);
        EXPECT_EQ(BigInt(domain), count_class(n, S("132"), PermClass::desarrangements));
    }
}

TEST(Equidistribution, PublishedLists)
{
    EXPECT_EQ(equinumerous_with_derangements().size(), 10U);
    EXPECT_EQ(conjectured_pix_fix_equidistributed().size(), 9U);
    const auto report = equidistribution_report(8);
    EXPECT_EQ(report.size(), 41U);
    for (const auto &r : report) {
        EXPECT_TRUE(r.consistent()) << r.set.str();
        EXPECT_EQ(r.formula_counts, r.desarrangement_counts) << r.set.str();
        if (r.set == S("132")) {
            EXPECT_TRUE(r.counts_agree);
            EXPECT_FALSE(r.distributions_agree);
        }
        if (r.set == S("132,312")) {
            EXPECT_TRUE(r.counts_agree);
            EXPECT_TRUE(r.distributions_agree);
        }
        if (r.set == S("321")) {
            EXPECT_FALSE(r.counts_agree);
        }
    }
}
