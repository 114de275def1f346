#ifndef DESARR_EXPORT_HPP
#define DESARR_EXPORT_HPP

// Text, CSV and JSON renderings of series, distribution tables, the pattern
// summary and verification reports. CSV: header row, comma-separated, LF.

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <desarr/closed_forms.hpp>
#include <desarr/patterns.hpp>
#include <desarr/perm.hpp>
#include <desarr/poly.hpp>
#include <desarr/reference.hpp>
#include <desarr/sequences.hpp>
#include <desarr/series.hpp>
#include <desarr/verify.hpp>

namespace desarr
{

enum class Format { text, csv, json };

inline std::optional<Format> parse_format(std::string_view s) noexcept
{
    if (s == "text") {
        return Format::text;
    }
    if (s == "csv") {
        return Format::csv;
    }
    if (s == "json") {
        return Format::json;
    }
    return std::nullopt;
}

using Json = nlohmann::ordered_json;

inline Json to_json(const TruncSeries &a)
{
    Json out = Json::array();
    for (std::size_t k = 0; k <= a.order(); ++k) {
        out.push_back(to_fraction_string(a[k]));
    }
    return out;
}

inline Json to_json(const Poly &p)
{
    Json out = Json::array();
    for (const auto &c : p.coeffs()) {
        out.push_back(to_fraction_string(c));
    }
    return out;
}

// Outer index: power of t.
inline Json to_json(const BivariatePoly &p)
{
    Json out = Json::array();
    for (const auto &row : p.grid()) {
        Json r = Json::array();
        for (const auto &c : row) {
            r.push_back(to_fraction_string(c));
        }
        out.push_back(std::move(r));
    }
    return out;
}

inline Json to_json(const DistributionTable &t)
{
    Json rows = Json::array();
    for (std::size_t n = 0; n < t.size(); ++n) {
        rows.push_back({{"n", n},
                        {"coefficients", t.arity == 2 ? to_json(t.bivariate[n]) : to_json(t.univariate[n])}});
    }
    return {{"name", t.name}, {"arity", t.arity}, {"rows", rows}};
}

inline std::string csv_table(const DistributionTable &t)
{
    std::ostringstream out;
    if (t.arity == 2) {
        std::size_t width = 1;
        for (const auto &p : t.bivariate) {
            for (const auto &row : p.grid()) {
                width = std::max(width, row.size());
            }
        }
        out << "n,t_exp";
        for (std::size_t j = 0; j < width; ++j) {
            out << ",s^" << j;
        }
        out << '\n';
        for (std::size_t n = 0; n < t.bivariate.size(); ++n) {
            const auto &grid = t.bivariate[n].grid();
            for (std::size_t i = 0; i < std::max<std::size_t>(grid.size(), 1); ++i) {
                out << n << ',' << i;
                for (std::size_t j = 0; j < width; ++j) {
                    out << ',' << to_display_string(t.bivariate[n].coeff(i, j));
                }
                out << '\n';
            }
        }
        return out.str();
    }
    std::size_t width = 1;
    for (const auto &p : t.univariate) {
        width = std::max(width, p.coeffs().size());
    }
    out << 'n';
    for (std::size_t k = 0; k < width; ++k) {
        out << ",t^" << k;
    }
    out << '\n';
    for (std::size_t n = 0; n < t.univariate.size(); ++n) {
        out << n;
        for (std::size_t k = 0; k < width; ++k) {
            out << ',' << to_display_string(t.univariate[n].coeff(k));
        }
        out << '\n';
    }
    return out.str();
}

inline std::string text_table(const DistributionTable &t)
{
    std::ostringstream out;
    out << t.name << '\n';
    for (std::size_t n = 0; n < t.size(); ++n) {
        out << n << "  ";
        if (t.arity == 2) {
            const auto &g = t.bivariate[n].grid();
            std::string line;
            for (std::size_t i = 0; i < g.size(); ++i) {
                const Poly row(g[i]);
                if (row.is_zero()) {
                    continue;
                }
                if (!line.empty()) {
                    line += " + ";
                }
                line += "(" + row.str("s") + ")t^" + std::to_string(i);
            }
            out << (line.empty() ? "0" : line);
        } else {
            out << t.univariate[n].str("t");
        }
        out << '\n';
    }
    return out.str();
}

inline std::string render(const DistributionTable &t, Format f)
{
    switch (f) {
        case Format::csv:
            return csv_table(t);
        case Format::json:
            return to_json(t).dump(2) + "\n";
        case Format::text:
            break;
    }
    return text_table(t);
}

// Desarrangements of each length 0..n_max in lexicographic order.
inline std::string render_desarrangements(std::size_t n_max, Format f, std::size_t cap = default_enumeration_cap)
{
    std::ostringstream out;
    Json j = Json::array();
    if (f == Format::csv) {
        out << "n,permutation\n";
    }
    for (std::size_t n = 0; n <= n_max; ++n) {
        const auto ps = enumerate(n, PermClass::desarrangements, cap);
        Json members = Json::array();
        std::string line;
        for (const auto &p : ps) {
            members.push_back(p.str());
            if (f == Format::csv) {
                out << n << ',' << p.str() << '\n';
            }
            line += (line.empty() ? "" : " ") + p.str();
        }
        if (f == Format::text) {
            out << n << "  " << (line.empty() ? "(none)" : line) << '\n';
        }
        j.push_back({{"n", n}, {"desarrangements", members}});
    }
    return f == Format::json ? j.dump(2) + "\n" : out.str();
}

// Every Pi, its formula, the OEIS reference and d_n(Pi) for n = 0..n_max.
inline std::string render_pattern_summary(std::size_t n_max, Format f)
{
    std::ostringstream out;
    Json j = Json::array();
    if (f == Format::csv) {
        out << "patterns,formula,oeis";
        for (std::size_t n = 0; n <= n_max; ++n) {
            out << ",d_" << n;
        }
        out << '\n';
    }
    for (const auto set : PatternSet::all_subsets()) {
        const auto desc = describe_class(set);
        std::vector<std::string> counts;
        for (std::size_t n = 0; n <= n_max; ++n) {
            counts.push_back(closed_form_count(n, set).str());
        }
        switch (f) {
            case Format::csv: {
                out << '"' << set.str() << "\",\"" << desc.formula << "\"," << desc.oeis;
                for (const auto &c : counts) {
                    out << ',' << c;
                }
                out << '\n';
                break;
            }
            case Format::json:
                j.push_back({{"patterns", set.str()}, {"formula", desc.formula}, {"oeis", desc.oeis}, {"counts_by_n", counts}});
                break;
            case Format::text: {
                std::string line;
                for (const auto &c : counts) {
                    line += (line.empty() ? "" : ",") + c;
                }
                out << set.str() << "  " << desc.formula << (desc.oeis.empty() ? "" : "  " + desc.oeis) << "  " << line
                    << '\n';
                break;
            }
        }
    }
    return f == Format::json ? j.dump(2) + "\n" : out.str();
}

inline std::string join_values(const std::vector<BigInt> &vs)
{
    std::string out;
    for (const auto &v : vs) {
        out += (out.empty() ? "" : ",") + v.str();
    }
    return out;
}

// One line, comma-separated.
inline std::string render_sequence(SequenceId id, std::size_t n_max)
{
    return join_values(sequence_values(id, n_max)) + "\n";
}

// Indexing remarks for a printed sequence; empty when there is nothing to say.
inline std::string sequence_note(SequenceId id, std::size_t n_max)
{
    if (id == SequenceId::a_seq && n_max >= reference::a_sequence_misprint_index) {
        return "a_11 = " + sequence(id, 11).str() + " follows the recurrence; the published table prints 3761";
    }
    if (id == SequenceId::fine) {
        return "F_0 = 0, F_1 = 1: OEIS A000957 lists the same values one index earlier";
    }
    return {};
}

inline std::string render_class_counts(PatternSet set, std::size_t n_max)
{
    std::vector<BigInt> vs;
    for (std::size_t n = 0; n <= n_max; ++n) {
        vs.push_back(closed_form_count(n, set));
    }
    return join_values(vs) + "\n";
}

inline Json to_json(const EquidistributionRecord &r)
{
    auto strs = [](const std::vector<BigInt> &vs) {
        Json a = Json::array();
        for (const auto &v : vs) {
            a.push_back(v.str());
        }
        return a;
    };
    Json verdicts{{"counts_agree", r.counts_agree},
                  {"distributions_agree", r.distributions_agree},
                  {"listed_equinumerous", r.listed_equinumerous},
                  {"listed_equidistributed", r.listed_equidistributed},
                  {"consistent", r.consistent()}};
    if (r.first_count_difference) {
        verdicts["first_count_difference"] = *r.first_count_difference;
    }
    if (r.first_distribution_difference) {
        verdicts["first_distribution_difference"] = *r.first_distribution_difference;
    }
    return {{"patterns", r.set.str()},
            {"counts_by_n", strs(r.desarrangement_counts)},
            {"derangement_counts_by_n", strs(r.derangement_counts)},
            {"formula_counts_by_n", strs(r.formula_counts)},
            {"equidistribution_verdicts", verdicts}};
}

inline std::string render_equidistribution(const std::vector<EquidistributionRecord> &rs, Format f)
{
    std::ostringstream out;
    if (f == Format::json) {
        Json j = Json::array();
        for (const auto &r : rs) {
            j.push_back(to_json(r));
        }
        return j.dump(2) + "\n";
    }
    if (f == Format::csv) {
        out << "patterns,counts_agree,distributions_agree,listed_equinumerous,listed_equidistributed,consistent\n";
        for (const auto &r : rs) {
            out << '"' << r.set.str() << "\"," << r.counts_agree << ',' << r.distributions_agree << ','
                << r.listed_equinumerous << ',' << r.listed_equidistributed << ',' << r.consistent() << '\n';
        }
        return out.str();
    }
    for (const auto &r : rs) {
        out << (r.consistent() ? "ok   " : "odd  ") << r.set.str() << "  counts "
            << (r.counts_agree ? "agree" : "differ at n=" + std::to_string(*r.first_count_difference))
            << ", pix/fix " << (r.distributions_agree ? "agree" : "differ at n=" + std::to_string(*r.first_distribution_difference))
            << (r.listed_equidistributed ? "  [conjectured]" : r.listed_equinumerous ? "  [equinumerous]" : "") << '\n';
    }
    return out.str();
}

inline Json to_json(const VerificationReport &r)
{
    Json verdicts = Json::array();
    for (const auto &v : r.verdicts) {
        Json e{{"match", v.match}};
        if (v.n) {
            e["n"] = *v.n;
        }
        if (!v.detail.empty()) {
            e["detail"] = v.detail;
        }
        verdicts.push_back(std::move(e));
    }
    return {{"group", r.group},
            {"subject", r.subject},
            {"n_range", {r.n_lo, r.n_hi}},
            {"pass", r.pass()},
            {"verdicts", verdicts}};
}

inline std::string render_reports(const std::vector<VerificationReport> &rs, Format f)
{
    if (f == Format::json) {
        Json j = Json::array();
        for (const auto &r : rs) {
            j.push_back(to_json(r));
        }
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    if (f == Format::csv) {
        out << "group,subject,n_lo,n_hi,pass,mismatches\n";
        for (const auto &r : rs) {
            out << r.group << ",\"" << r.subject << "\"," << r.n_lo << ',' << r.n_hi << ',' << (r.pass() ? 1 : 0)
                << ',' << r.mismatches() << '\n';
        }
        return out.str();
    }
    std::size_t failed = 0;
    for (const auto &r : rs) {
        out << (r.pass() ? "PASS  " : "FAIL  ") << r.group << ": " << r.subject << '\n';
        for (const auto &v : r.verdicts) {
            if (!v.match) {
                out << "      " << (v.n ? "n=" + std::to_string(*v.n) + ": " : std::string()) << v.detail << '\n';
            }
        }
        failed += r.pass() ? 0 : 1;
    }
    out << rs.size() - failed << '/' << rs.size() << " checks passed\n";
    return out.str();
}

} // namespace desarr

#endif
