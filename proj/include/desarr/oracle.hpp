#ifndef DESARR_ORACLE_HPP
#define DESARR_ORACLE_HPP

// Brute-force joint distributions by full enumeration. Depends only on the
// permutation layer so that no formula code can leak into the reference side.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <desarr/errors.hpp>
#include <desarr/pattern_set.hpp>
#include <desarr/perm.hpp>
#include <desarr/rational.hpp>

namespace desarr
{

enum class Stat { des, asc, pk, val, dasc, ddes, rval, fix, pix };

inline constexpr std::array<Stat, 9> all_stats{Stat::des,  Stat::asc,  Stat::pk,  Stat::val, Stat::dasc,
                                               Stat::ddes, Stat::rval, Stat::fix, Stat::pix};

inline constexpr std::string_view to_string(Stat s) noexcept
{
    switch (s) {
        case Stat::des:
            return "des";
        case Stat::asc:
            return "asc";
        case Stat::pk:
            return "pk";
        case Stat::val:
            return "val";
        case Stat::dasc:
            return "dasc";
        case Stat::ddes:
            return "ddes";
        case Stat::rval:
            return "rval";
        case Stat::fix:
            return "fix";
        case Stat::pix:
            return "pix";
    }
    return "?";
}

inline std::optional<Stat> parse_stat(std::string_view s) noexcept
{
    for (const auto st : all_stats) {
        if (to_string(st) == s) {
            return st;
        }
    }
    return std::nullopt;
}

inline int stat_value(const StatRecord &r, Stat s) noexcept
{
    switch (s) {
        case Stat::des:
            return r.des;
        case Stat::asc:
            return r.asc;
        case Stat::pk:
            return r.pk;
        case Stat::val:
            return r.val;
        case Stat::dasc:
            return r.dasc;
        case Stat::ddes:
            return r.ddes;
        case Stat::rval:
            return r.rval;
        case Stat::fix:
            return r.fix;
        case Stat::pix:
            return r.pix;
    }
    return 0;
}

// Exponent vector (one entry per requested statistic) -> count.
using DistributionRow = std::map<std::vector<int>, BigInt>;

inline DistributionRow distribution(std::size_t n, const std::vector<Stat> &stats, PermClass cls,
                                    std::optional<PatternSet> restrict = std::nullopt,
                                    std::size_t cap = default_enumeration_cap)
{
    using Tally = std::map<std::vector<int>, std::uint64_t>;
    const Tally tally = parallel_reduce_permutations(
        n, cls, Tally{},
        [&](Tally &acc, std::span<const int> w) {
            if (restrict && !avoids(w, *restrict)) {
                return;
            }
            const auto rec = statistics(w);
            std::vector<int> key;
            key.reserve(stats.size());
            for (const auto s : stats) {
                key.push_back(stat_value(rec, s));
            }
            ++acc[key];
        },
        [](Tally &acc, const Tally &part) {
            for (const auto &[k, v] : part) {
                acc[k] += v;
            }
        },
        cap);
    DistributionRow out;
    for (const auto &[k, v] : tally) {
        out[k] = v;
    }
    return out;
}

inline DistributionRow distribution(std::size_t n, Stat stat, PermClass cls,
                                    std::optional<PatternSet> restrict = std::nullopt,
                                    std::size_t cap = default_enumeration_cap)
{
    return distribution(n, std::vector<Stat>{stat}, cls, restrict, cap);
}

inline BigInt row_total(const DistributionRow &row)
{
    BigInt s{0};
    for (const auto &[k, v] : row) {
        s += v;
    }
    return s;
}

// Coefficient list of a one-statistic row, constant term first.
inline std::vector<BigInt> row_coefficients(const DistributionRow &row)
{
    std::vector<BigInt> out;
    for (const auto &[k, v] : row) {
        if (k.size() != 1) {
            throw invalid_input("row_coefficients needs a one-statistic row");
        }
        const auto e = static_cast<std::size_t>(k[0]);
        if (out.size() <= e) {
            out.resize(e + 1);
        }
        out[e] += v;
    }
    if (out.empty()) {
        out.emplace_back(0);
    }
    return out;
}

} // namespace desarr

#endif
