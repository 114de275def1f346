#ifndef DESARR_PERM_HPP
#define DESARR_PERM_HPP

// Permutations in one-line notation and the run/peak statistics defined on
// them.
//
// Conventions (1-based throughout):
//   * A descent is a position i in [1, n-1] with p_i > p_{i+1}.
//   * An ASCENT is any position i in [1, n] that is not a descent. Position n
//     is therefore always an ascent, so des + asc = n. This differs from the
//     usual convention in which asc + des = n - 1.
//   * A desarrangement is a permutation whose first ascent is even. The empty
//     permutation counts as a desarrangement.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include <desarr/errors.hpp>

namespace desarr
{

inline constexpr std::size_t default_enumeration_cap = 11;

class Permutation
{
public:
    Permutation() = default;

    // Throws invalid_input unless values is a rearrangement of 1..n.
    explicit Permutation(std::vector<int> values) : values_(std::move(values))
    {
        std::vector<bool> seen(values_.size() + 1, false);
        for (const int v : values_) {
            if (v < 1 || static_cast<std::size_t>(v) > values_.size() || seen[static_cast<std::size_t>(v)]) {
                throw invalid_input("not a permutation of 1.." + std::to_string(values_.size()));
            }
            seen[static_cast<std::size_t>(v)] = true;
        }
    }

    static Permutation identity(std::size_t n)
    {
        std::vector<int> v(n);
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = static_cast<int>(i + 1);
        }
        return Permutation{std::move(v), unchecked};
    }

    static Permutation decreasing(std::size_t n)
    {
        std::vector<int> v(n);
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = static_cast<int>(n - i);
        }
        return Permutation{std::move(v), unchecked};
    }

    // "e" is the empty permutation; a string containing commas is a list of
    // integers; anything else is read one digit per letter.
    static Permutation parse(std::string_view text)
    {
        if (text == "e") {
            return Permutation{};
        }
        if (text.empty()) {
            throw invalid_input("empty permutation string (use \"e\")");
        }
        std::vector<int> v;
        if (text.find(',') != std::string_view::npos) {
            std::size_t start = 0;
            while (start <= text.size()) {
                const auto end = std::min(text.find(',', start), text.size());
                const auto tok = text.substr(start, end - start);
                if (tok.empty() || tok.size() > 9) {
                    throw invalid_input("malformed permutation '" + std::string(text) + "'");
                }
                int x = 0;
                for (const char c : tok) {
                    if (c < '0' || c > '9') {
                        throw invalid_input("malformed permutation '" + std::string(text) + "'");
                    }
                    x = x * 10 + (c - '0');
                }
                v.push_back(x);
                start = end + 1;
            }
        } else {
            for (const char c : text) {
                if (c < '1' || c > '9') {
                    throw invalid_input("malformed permutation '" + std::string(text) + "'");
                }
                v.push_back(c - '0');
            }
        }
        return Permutation{std::move(v)};
    }

    std::size_t size() const noexcept
    {
        return values_.size();
    }
    bool empty() const noexcept
    {
        return values_.empty();
    }
    // 0-based element access.
    int operator[](std::size_t i) const noexcept
    {
        return values_[i];
    }
    // 1-based position, matching the mathematical notation p_pos.
    int at(std::size_t pos) const
    {
        return values_.at(pos - 1);
    }
    std::span<const int> values() const noexcept
    {
        return values_;
    }

    // Digit string for n <= 9, comma-separated otherwise, "e" when empty.
    std::string str() const
    {
        if (values_.empty()) {
            return "e";
        }
        std::string out;
        const bool compact = values_.size() <= 9;
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (!compact && i > 0) {
                out += ',';
            }
            out += std::to_string(values_[i]);
        }
        return out;
    }

    friend bool operator==(const Permutation &, const Permutation &) = default;
    friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
    struct unchecked_t {
    };
    static constexpr unchecked_t unchecked{};

    Permutation(std::vector<int> values, unchecked_t) : values_(std::move(values)) {}

    friend Permutation standardize(std::span<const int>);
    friend Permutation complement(const Permutation &);

    std::vector<int> values_;
};

// Sequence of increasing-run lengths; every part is at least 1.
class Composition
{
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (const int p : parts_) {
            if (p < 1) {
                throw invalid_input("composition parts must be positive");
            }
        }
    }

    std::span<const int> parts() const noexcept
    {
        return parts_;
    }
    std::size_t length() const noexcept
    {
        return parts_.size();
    }
    int total() const noexcept
    {
        int s = 0;
        for (const int p : parts_) {
            s += p;
        }
        return s;
    }
    std::string str() const
    {
        std::string out = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i > 0) {
                out += ',';
            }
            out += std::to_string(parts_[i]);
        }
        return out + ")";
    }

    friend bool operator==(const Composition &, const Composition &) = default;
    friend auto operator<=>(const Composition &, const Composition &) = default;

private:
    std::vector<int> parts_;
};

struct StatRecord {
    int des = 0;
    int asc = 0;
    int pk = 0;
    int val = 0;
    int dasc = 0;
    int ddes = 0;
    int rval = 0;
    int fix = 0;
    int pix = 0;
    std::optional<int> first_ascent;

    friend bool operator==(const StatRecord &, const StatRecord &) = default;
};

// Split p = iota . delta with iota increasing and delta a desarrangement.
// delta keeps its literal letters (it is not standardized).
struct PixedFactorization {
    std::vector<int> increasing_prefix;
    std::vector<int> desarrangement_suffix;

    std::size_t pix() const noexcept
    {
        return increasing_prefix.size();
    }
};

// Word-level primitives. A "word" is any sequence of distinct integers; the
// order-based statistics below do not need it standardized.

inline bool is_descent_at(std::span<const int> w, std::size_t i) noexcept
{
    // 1-based position i in [1, n-1]
    return w[i - 1] > w[i];
}

// Smallest ascent position (1-based), absent for the empty word.
inline std::optional<int> first_ascent(std::span<const int> w) noexcept
{
    const std::size_t n = w.size();
    if (n == 0) {
        return std::nullopt;
    }
    std::size_t i = 1;
    while (i < n && w[i - 1] > w[i]) {
        ++i;
    }
    return static_cast<int>(i);
}

inline bool is_desarrangement(std::span<const int> w) noexcept
{
    const auto fa = first_ascent(w);
    return !fa || (*fa % 2 == 0);
}

inline int fixed_points(std::span<const int> w) noexcept
{
    int f = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == static_cast<int>(i + 1)) {
            ++f;
        }
    }
    return f;
}

inline int descents(std::span<const int> w) noexcept
{
    int d = 0;
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i - 1] > w[i]) {
            ++d;
        }
    }
    return d;
}

// Length of the increasing prefix in the pixed factorization. Scans every
// split point up to the maximal increasing prefix and requires exactly one to
// leave a desarrangement behind.
inline std::size_t pixed_split(std::span<const int> w)
{
    std::size_t inc = w.empty() ? 0 : 1;
    while (inc < w.size() && w[inc - 1] < w[inc]) {
        ++inc;
    }
    std::optional<std::size_t> split;
    for (std::size_t k = 0; k <= inc; ++k) {
        if (is_desarrangement(w.subspan(k))) {
            if (split) {
                throw invariant_violation("pixed factorization is not unique");
            }
            split = k;
        }
    }
    if (!split) {
        throw invariant_violation("pixed factorization does not exist");
    }
    return *split;
}

inline PixedFactorization pixed_factorization(std::span<const int> w)
{
    const auto k = static_cast<std::ptrdiff_t>(pixed_split(w));
    return PixedFactorization{std::vector<int>(w.begin(), w.begin() + k), std::vector<int>(w.begin() + k, w.end())};
}

inline int pixed_points(std::span<const int> w)
{
    return static_cast<int>(pixed_split(w));
}

inline StatRecord statistics(std::span<const int> w)
{
    StatRecord r;
    const std::size_t n = w.size();
    r.des = descents(w);
    r.asc = static_cast<int>(n) - r.des;
    for (std::size_t i = 2; i + 1 <= n; ++i) {
        // interior 1-based position i: neighbours w[i-2], w[i]
        const int a = w[i - 2], b = w[i - 1], c = w[i];
        if (a < b && b > c) {
            ++r.pk;
        } else if (a > b && b < c) {
            ++r.val;
        } else if (a < b && b < c) {
            ++r.dasc;
        } else {
            ++r.ddes;
        }
    }
    // right valleys: valleys plus a final descent
    r.rval = r.val + ((n >= 2 && w[n - 2] > w[n - 1]) ? 1 : 0);
    r.fix = fixed_points(w);
    r.pix = pixed_points(w);
    r.first_ascent = first_ascent(w);
    return r;
}

inline Composition descent_composition(std::span<const int> w)
{
    std::vector<int> parts;
    std::size_t run = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0 && w[i - 1] > w[i]) {
            parts.push_back(static_cast<int>(run));
            run = 0;
        }
        ++run;
    }
    if (run > 0) {
        parts.push_back(static_cast<int>(run));
    }
    return Composition{std::move(parts)};
}

// Permutation overloads.

inline std::optional<int> first_ascent(const Permutation &p) noexcept
{
    return first_ascent(p.values());
}
inline bool is_desarrangement(const Permutation &p) noexcept
{
    return is_desarrangement(p.values());
}
inline StatRecord statistics(const Permutation &p)
{
    return statistics(p.values());
}
inline Composition descent_composition(const Permutation &p)
{
    return descent_composition(p.values());
}
inline PixedFactorization pixed_factorization(const Permutation &p)
{
    return pixed_factorization(p.values());
}

// Throws invalid_input on repeated or non-positive letters.
inline Permutation standardize(std::span<const int> word)
{
    std::vector<std::pair<int, std::size_t>> keyed;
    keyed.reserve(word.size());
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] < 1) {
            throw invalid_input("standardize: letters must be positive");
        }
        keyed.emplace_back(word[i], i);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> out(word.size());
    for (std::size_t r = 0; r < keyed.size(); ++r) {
        if (r > 0 && keyed[r].first == keyed[r - 1].first) {
            throw invalid_input("standardize: duplicate letter " + std::to_string(keyed[r].first));
        }
        out[keyed[r].second] = static_cast<int>(r + 1);
    }
    return Permutation{std::move(out), Permutation::unchecked};
}

inline Permutation complement(const Permutation &p)
{
    const int n1 = static_cast<int>(p.size()) + 1;
    std::vector<int> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[i] = n1 - p[i];
    }
    return Permutation{std::move(out), Permutation::unchecked};
}

// Enumeration.

enum class PermClass { all, desarrangements, derangements };

inline const char *to_string(PermClass c) noexcept
{
    switch (c) {
        case PermClass::all:
            return "all";
        case PermClass::desarrangements:
            return "desarrangements";
        case PermClass::derangements:
            return "derangements";
    }
    return "?";
}

inline bool in_class(std::span<const int> w, PermClass c) noexcept
{
    switch (c) {
        case PermClass::all:
            return true;
        case PermClass::desarrangements:
            return is_desarrangement(w);
        case PermClass::derangements:
            return fixed_points(w) == 0;
    }
    return false;
}

inline void check_cap(std::size_t n, std::size_t cap)
{
    if (n > cap) {
        throw resource_limit("enumeration of size " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    }
}

namespace detail
{

// Visits, in lexicographic order, every permutation of 1..n whose first letter
// is `first` (or all of S_n when first == 0).
template <typename F>
void for_each_word_with_first(std::size_t n, int first, F &&f)
{
    std::vector<int> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = static_cast<int>(i + 1);
    }
    if (n == 0) {
        f(std::span<const int>(v));
        return;
    }
    auto tail_begin = v.begin();
    if (first != 0) {
        std::rotate(v.begin(), v.begin() + (first - 1), v.begin() + first);
        tail_begin = v.begin() + 1;
    }
    do {
        f(std::span<const int>(v));
    } while (std::next_permutation(tail_begin, v.end()));
}

} // namespace detail

// Visits every word of S_n in lexicographic order without building
// Permutation objects. Unchecked; callers apply the cap.
template <typename F>
void for_each_permutation_word(std::size_t n, F &&f)
{
    detail::for_each_word_with_first(n, 0, std::forward<F>(f));
}

template <typename F>
void for_each_permutation(std::size_t n, PermClass cls, F &&f, std::size_t cap = default_enumeration_cap)
{
    check_cap(n, cap);
    detail::for_each_word_with_first(n, 0, [&](std::span<const int> w) {
        if (in_class(w, cls)) {
            f(w);
        }
    });
}

// Lexicographically ordered list of the class members.
inline std::vector<Permutation> enumerate(std::size_t n, PermClass cls, std::size_t cap = default_enumeration_cap)
{
    std::vector<Permutation> out;
    for_each_permutation(
        n, cls, [&](std::span<const int> w) { out.emplace_back(std::vector<int>(w.begin(), w.end())); }, cap);
    return out;
}

// Sharded reduction over a class of S_n. Shard k holds the permutations with
// first letter k; shards run on worker threads and partial results are merged
// in shard order, so the outcome does not depend on the worker count.
template <typename Acc, typename Visit, typename Merge>
Acc parallel_reduce_permutations(std::size_t n, PermClass cls, Acc init, Visit visit, Merge merge,
                                 std::size_t cap = default_enumeration_cap, unsigned workers = 0)
{
    check_cap(n, cap);
    if (n <= 6) {
        Acc acc = init;
        detail::for_each_word_with_first(n, 0, [&](std::span<const int> w) {
            if (in_class(w, cls)) {
                visit(acc, w);
            }
        });
        return acc;
    }
    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    std::vector<Acc> parts(n, init);
    auto run_shard = [&](std::size_t k) {
        detail::for_each_word_with_first(n, static_cast<int>(k + 1), [&](std::span<const int> w) {
            if (in_class(w, cls)) {
                visit(parts[k], w);
            }
        });
    };
    if (workers == 1) {
        for (std::size_t k = 0; k < n; ++k) {
            run_shard(k);
        }
    } else {
        std::size_t next = 0;
        while (next < n) {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < workers && next < n; ++w, ++next) {
                pool.emplace_back(run_shard, next);
            }
        }
    }
    Acc acc = init;
    for (auto &p : parts) {
        merge(acc, p);
    }
    return acc;
}

} // namespace desarr

#endif
