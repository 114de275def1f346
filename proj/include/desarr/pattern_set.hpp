#ifndef DESARR_PATTERN_SET_HPP
#define DESARR_PATTERN_SET_HPP

// Sets of length-3 patterns and the containment test. Kept apart from the
// enumeration results in patterns.hpp so the brute-force oracle can use it.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <desarr/errors.hpp>
#include <desarr/perm.hpp>

namespace desarr
{

// Canonical order of S_3; bit i of a PatternSet mask stands for entry i.
inline constexpr std::array<std::string_view, 6> pattern_names{"123", "132", "213", "231", "312", "321"};

// Index in pattern_names of the pattern formed by three distinct letters.
constexpr int pattern_index(int a, int b, int c) noexcept
{
    if (a < b) {
        if (b < c) {
            return 0; // 123
        }
        return a < c ? 1 : 3; // 132 : 231
    }
    if (a < c) {
        return 2; // 213
    }
    return b < c ? 4 : 5; // 312 : 321
}

class PatternSet
{
public:
    constexpr PatternSet() = default;
    constexpr explicit PatternSet(std::uint8_t mask) : mask_(static_cast<std::uint8_t>(mask & 0x3f)) {}

    // Comma-separated pattern names, optionally wrapped in braces; "" or "{}"
    // is the empty set.
    static PatternSet parse(std::string_view text)
    {
        if (text.size() >= 2 && text.front() == '{' && text.back() == '}') {
            text = text.substr(1, text.size() - 2);
        }
        std::uint8_t mask = 0;
        std::size_t start = 0;
        while (start < text.size()) {
            auto end = text.find(',', start);
            if (end == std::string_view::npos) {
                end = text.size();
            }
            auto tok = text.substr(start, end - start);
            while (!tok.empty() && tok.front() == ' ') {
                tok.remove_prefix(1);
            }
            while (!tok.empty() && tok.back() == ' ') {
                tok.remove_suffix(1);
            }
            bool found = false;
            for (std::size_t i = 0; i < pattern_names.size(); ++i) {
                if (tok == pattern_names[i]) {
                    mask |= static_cast<std::uint8_t>(1u << i);
                    found = true;
                }
            }
            if (!found) {
                throw invalid_input("unknown pattern '" + std::string(tok) + "'");
            }
            start = end + 1;
        }
        return PatternSet{mask};
    }

    constexpr std::uint8_t mask() const noexcept
    {
        return mask_;
    }
    constexpr bool contains(int index) const noexcept
    {
        return (mask_ >> index) & 1u;
    }
    bool contains(std::string_view name) const
    {
        for (std::size_t i = 0; i < pattern_names.size(); ++i) {
            if (pattern_names[i] == name) {
                return contains(static_cast<int>(i));
            }
        }
        throw invalid_input("unknown pattern '" + std::string(name) + "'");
    }
    constexpr int size() const noexcept
    {
        int c = 0;
        for (int i = 0; i < 6; ++i) {
            c += contains(i) ? 1 : 0;
        }
        return c;
    }
    constexpr bool includes(PatternSet other) const noexcept
    {
        return (mask_ & other.mask_) == other.mask_;
    }

    // Image under complementation of every pattern: 123<->321, 132<->312,
    // 213<->231.
    constexpr PatternSet complemented() const noexcept
    {
        constexpr std::array<int, 6> image{5, 4, 3, 2, 1, 0};
        std::uint8_t m = 0;
        for (int i = 0; i < 6; ++i) {
            if (contains(i)) {
                m |= static_cast<std::uint8_t>(1u << image[static_cast<std::size_t>(i)]);
            }
        }
        return PatternSet{m};
    }

    std::vector<std::string> names() const
    {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < pattern_names.size(); ++i) {
            if (contains(static_cast<int>(i))) {
                out.emplace_back(pattern_names[i]);
            }
        }
        return out;
    }

    // "{123,132}"
    std::string str() const
    {
        std::string out = "{";
        bool first = true;
        for (const auto &n : names()) {
            if (!first) {
                out += ',';
            }
            out += n;
            first = false;
        }
        return out + "}";
    }

    friend constexpr bool operator==(PatternSet, PatternSet) = default;

    // All 64 subsets ordered by mask.
    static std::vector<PatternSet> all_subsets()
    {
        std::vector<PatternSet> out;
        for (unsigned m = 0; m < 64; ++m) {
            out.emplace_back(static_cast<std::uint8_t>(m));
        }
        return out;
    }

private:
    std::uint8_t mask_ = 0;
};

// Mask of every length-3 pattern occurring in w.
inline std::uint8_t contained_patterns(std::span<const int> w) noexcept
{
    std::uint8_t mask = 0;
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                mask |= static_cast<std::uint8_t>(1u << pattern_index(w[i], w[j], w[k]));
                if (mask == 0x3f) {
                    return mask;
                }
            }
        }
    }
    return mask;
}

inline bool avoids(std::span<const int> w, PatternSet set) noexcept
{
    if (set.mask() == 0) {
        return true;
    }
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                if (set.contains(pattern_index(w[i], w[j], w[k]))) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline bool avoids(const Permutation &p, PatternSet set) noexcept
{
    return avoids(p.values(), set);
}

} // namespace desarr

#endif
