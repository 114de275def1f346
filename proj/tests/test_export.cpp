#include <gtest/gtest.h>

#include <desarr/export.hpp>

using namespace desarr;

TEST(Export, SeriesAsFractionStrings)
{
    const TruncSeries a(3, {1, BigRational(-1, 2), 0, BigRational(2, 6)});
    EXPECT_EQ(to_json(a).dump(), R"(["1/1","-1/2","0/1","1/3"])");
    EXPECT_EQ(to_json(Poly::from_integers({0, 3, 5, 1})).dump(), R"(["0/1","3/1","5/1","1/1"])");
}

TEST(Export, CsvTable)
{
    const auto t = distribution_polynomials(FormulaId::des, 4);
    const auto csv = csv_table(t);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,t^0,t^1,t^2,t^3");
    EXPECT_NE(csv.find("\n4,0,3,5,1\n"), std::string::npos);
    EXPECT_EQ(csv.find('\r'), std::string::npos);
}

TEST(Export, JsonTableMirrorsRows)
{
    const auto j = to_json(distribution_polynomials(FormulaId::pk, 5));
    EXPECT_EQ(j["name"], "pk");
    ASSERT_EQ(j["rows"].size(), 6U);
    EXPECT_EQ(j["rows"][5]["coefficients"].dump(), R"(["8/1","36/1"])");
    const auto b = to_json(distribution_polynomials(FormulaId::joint_pk_des, 3));
    EXPECT_EQ(b["arity"], 2);
}

TEST(Export, DesarrangementListing)
{
    const auto text = render_desarrangements(5, Format::text);
    EXPECT_NE(text.find("1  (none)"), std::string::npos);
    EXPECT_NE(text.find("3  213 312\n"), std::string::npos);
    const auto csv = render_desarrangements(5, Format::csv);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 1 + 1 + 2 + 9 + 44);
}

TEST(Export, PatternSummaryCsv)
{
    const auto csv = render_pattern_summary(10, Format::csv);
    EXPECT_NE(csv.find("\"{321}\""), std::string::npos);
    EXPECT_NE(csv.find(",4862\n"), std::string::npos);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 65);
}

TEST(Export, SequenceLine)
{
    EXPECT_EQ(render_sequence(SequenceId::jacobsthal, 11).substr(0, 30), "0,1,1,3,5,11,21,43,85,171,341,");
    EXPECT_EQ(render_sequence(SequenceId::a_seq, 11), "1,0,1,1,4,10,32,100,329,1101,3761,13035\n");
    EXPECT_NE(sequence_note(SequenceId::a_seq, 11).find("3761"), std::string::npos);
    EXPECT_TRUE(sequence_note(SequenceId::a_seq, 10).empty());
    EXPECT_EQ(render_class_counts(PatternSet::parse("123,132,213"), 10), "1,0,1,1,2,3,5,8,13,21,34\n");
}

TEST(Export, EquidistributionRecords)
{
    const auto j = nlohmann::ordered_json::parse(render_equidistribution(equidistribution_report(5), Format::json));
    ASSERT_EQ(j.size(), 41U);
    for (const auto &r : j) {
        EXPECT_TRUE(r.contains("patterns"));
        EXPECT_TRUE(r.contains("counts_by_n"));
        EXPECT_TRUE(r.contains("formula_counts_by_n"));
        EXPECT_TRUE(r.contains("equidistribution_verdicts"));
    }
}

TEST(Export, ReportText)
{
    VerifyOptions opt;
    opt.only = {"table1"};
    const auto text = render_reports(verify_all(4, opt), Format::text);
    EXPECT_NE(text.find("PASS  table1"), std::string::npos);
    EXPECT_NE(text.find("2/2 checks passed"), std::string::npos);
}
