#include <gtest/gtest.h>

#include <cstdlib>

#include <desarr/closed_forms.hpp>
#include <desarr/run_theorem.hpp>

using namespace desarr;

namespace
{

using Q = BigRational;

RunGraphSpec ambiguous_spec()
{
    // (1,1) reaches vertex 2 through 1->1->2 and through 1->2->2
    return {"ambiguous",
            2,
            {{1, 1, {{builtin::unit(PartSet::single(1))}}},
             {1, 2, {{builtin::unit(PartSet::single(1))}}},
             {2, 2, {{builtin::unit(PartSet::single(1))}}}}};
}

std::vector<Q> counts_plus(const TruncSeries &a, const TruncSeries &correction)
{
    return egf_counts(a + correction);
}

} // namespace

TEST(PartSet, Membership)
{
    const auto evens = PartSet::from(2, 2);
    EXPECT_TRUE(evens.contains(2));
    EXPECT_TRUE(evens.contains(100));
    EXPECT_FALSE(evens.contains(3));
    EXPECT_FALSE(evens.contains(0));
    EXPECT_TRUE(PartSet::single(1).contains(1));
    EXPECT_FALSE(PartSet::single(1).contains(2));
}

TEST(CompositionWeight, PublishedAdmissibility)
{
    const auto f1 = builtin::fig1();
    EXPECT_EQ(composition_weight(f1, 1, 3, Composition({1, 1, 1, 3, 4, 1, 2}), 1, 1), Q(1));
    EXPECT_EQ(composition_weight(f1, 1, 3, Composition({2, 1, 1, 4, 3}), 1, 1), Q(0));
    EXPECT_EQ(composition_weight(f1, 2, 2, Composition(), 1, 1), Q(1));
    EXPECT_EQ(composition_weight(f1, 1, 2, Composition(), 1, 1), Q(0));
}

TEST(CompositionWeight, AmbiguityThrows)
{
    EXPECT_THROW(composition_weight(ambiguous_spec(), 1, 2, Composition({1, 1}), 1, 1), hypothesis_violation);
}

TEST(CompositionWeight, MultiplicativeAlongConcatenation)
{
    const auto f2 = builtin::fig2();
    const Q t(3);
    // (1,2)-admissible prefix ending at 2, then a (2,2) tail
    const Composition head({2, 1, 3});
    const Composition tail({2, 4});
    const Composition whole({2, 1, 3, 2, 4});
    const auto a = composition_weight(f2, 1, 2, head, t, 1);
    const auto b = composition_weight(f2, 2, 2, tail, t, 1);
    ASSERT_NE(a, 0);
    ASSERT_NE(b, 0);
    EXPECT_EQ(composition_weight(f2, 1, 2, whole, t, 1), a * b);
}

TEST(Validation, BuiltinsPass)
{
    for (const auto &spec : builtin::all()) {
        const auto r = validate_unique_admissibility(spec, 12);
        EXPECT_TRUE(r.pass) << spec.name << ": " << r.str();
        EXPECT_GT(r.compositions_checked, 0U);
    }
}

TEST(Validation, AmbiguousSpecRejected)
{
    const auto r = validate_unique_admissibility(ambiguous_spec(), 12);
    ASSERT_FALSE(r.pass);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_EQ(r.witness->total(), 2);
    EXPECT_THROW(run_theorem_egf(ambiguous_spec(), 1, 2, 1, 1, 5), hypothesis_violation);
}

TEST(Validation, MalformedSpecs)
{
    RunGraphSpec bad{"bad", 2, {{1, 3, {{builtin::unit(PartSet::single(1))}}}}};
    EXPECT_THROW(validate_spec(bad), invalid_input);
    RunGraphSpec dup{"dup",
                     1,
                     {{1, 1, {{builtin::unit(PartSet::single(1))}}}, {1, 1, {{builtin::unit(PartSet::single(2))}}}}};
    EXPECT_THROW(validate_spec(dup), invalid_input);
    RunGraphSpec overlap{
        "overlap", 1, {{1, 1, {{builtin::unit(PartSet::from(1)), builtin::unit(PartSet::single(2))}}}}};
    EXPECT_THROW(validate_spec(overlap), invalid_input);
    RunGraphSpec negative{"negative", 1, {{1, 1, {{{PartSet::from(1), {1, -3}, {}}}}}}};
    EXPECT_THROW(validate_spec(negative), invalid_input);
}

TEST(RunTheorem, DerangementNumbers)
{
    const std::size_t N = 9;
    const auto c = counts_plus(run_theorem_egf(builtin::fig1(), 1, 3, 1, 1, N), cosh_even(4, N));
    EXPECT_EQ(c, (std::vector<Q>{1, 0, 1, 2, 9, 44, 265, 1854, 14833, 133496}));
}

TEST(RunTheorem, NondecreasingDesarrangements)
{
    // without the correction: desarrangements other than the decreasing one,
    // which is itself a desarrangement only for even n
    const auto c = egf_counts(run_theorem_egf(builtin::fig1(), 1, 3, 1, 1, 6));
    EXPECT_EQ(c, (std::vector<Q>{0, 0, 0, 2, 8, 44, 264}));
    EXPECT_EQ(oracle_weight_sum(builtin::fig1(), 1, 3, 4, 1, 1), Q(8));
}

TEST(RunTheorem, DescentRederivation)
{
    const std::size_t N = 9;
    for (const long long t : {2, 3, 5}) {
        const auto lhs = run_theorem_egf(builtin::fig2(), 1, 2, t, 1, N) + TruncSeries::constant(1, N);
        EXPECT_EQ(lhs, evaluate_formula(FormulaId::des, t, N)) << "t=" << t;
    }
    EXPECT_EQ(oracle_weight_sum(builtin::fig2(), 1, 2, 3, 1, 1), Q(2));
    EXPECT_EQ(oracle_weight_sum(builtin::fig2(), 1, 1, 0, 1, 1), Q(1));
}

TEST(RunTheorem, Figure3RecoversEulerianAtSEqualsOne)
{
    const std::size_t N = 8;
    const auto f3 = builtin::fig3();
    const Q t(3);
    const auto sum = run_theorem_egf(f3, 1, 1, t, 1, N) + run_theorem_egf(f3, 1, 2, t, 1, N);
    EXPECT_EQ(sum, evaluate_formula(FormulaId::eulerian, t, N));
}

TEST(RunTheorem, EntriesMatchEnumeration)
{
    const std::size_t N = 7;
    const std::vector<std::pair<Q, Q>> samples{{2, 3}, {Q(-1, 2), Q(2, 3)}, {5, 1}};
    std::vector<CompositionTally> tallies;
    for (std::size_t n = 0; n <= N; ++n) {
        tallies.push_back(composition_tally(n));
    }
    for (const auto &spec : builtin::all()) {
        for (const auto &[t, s] : samples) {
            const auto R = matrix_invert(hat_transform(matrix_invert(run_matrix(spec, t, s, N))));
            for (int i = 1; i <= spec.dim; ++i) {
                for (int j = 1; j <= spec.dim; ++j) {
                    const auto c = egf_counts(R(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)));
                    for (std::size_t n = 0; n <= N; ++n) {
                        ASSERT_EQ(c[n], weight_sum(spec, i, j, tallies[n], t, s))
                            << spec.name << " (" << i << "," << j << ") n=" << n;
                    }
                }
            }
        }
    }
}

TEST(RunTheorem, VertexRange)
{
    EXPECT_THROW(run_theorem_egf(builtin::fig1(), 0, 1, 1, 1, 3), invalid_input);
    EXPECT_THROW(run_theorem_egf(builtin::fig1(), 1, 4, 1, 1, 3), invalid_input);
}

TEST(SpecJson, RoundTrip)
{
    for (const auto &spec : builtin::all()) {
        EXPECT_EQ(spec_from_json(to_json(spec)), spec) << spec.name;
    }
}

TEST(SpecJson, RejectsMalformed)
{
    EXPECT_THROW(spec_from_json(nlohmann::json::parse(R"({"name": "x"})")), invalid_input);
    EXPECT_THROW(spec_from_json(nlohmann::json::parse(R"({"name": "x", "dim": 1, "edges": [{"from": 1}]})")),
                 invalid_input);
    EXPECT_THROW(load_spec("/nonexistent/spec.json"), invalid_input);
}

TEST(SpecJson, ShippedFilesMatchBuiltins)
{
    const char *dir = std::getenv("DESARR_SPEC_DIR");
    if (dir == nullptr) {
        GTEST_SKIP() << "DESARR_SPEC_DIR not set";
    }
    for (const auto &spec : builtin::all()) {
        EXPECT_EQ(load_spec(std::string(dir) + "/" + spec.name + ".json"), spec) << spec.name;
    }
}
