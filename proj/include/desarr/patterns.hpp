#ifndef DESARR_PATTERNS_HPP
#define DESARR_PATTERNS_HPP

// Enumeration of desarrangements avoiding sets of length-3 patterns: the
// brute-force counts, the closed forms for every subset of S_3, the
// bijections behind them, and the pix/fix comparison with derangements.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <desarr/errors.hpp>
#include <desarr/pattern_set.hpp>
#include <desarr/perm.hpp>
#include <desarr/rational.hpp>
#include <desarr/sequences.hpp>

namespace desarr
{

// Brute-force counts.

inline BigInt count_class(std::size_t n, PatternSet set, PermClass cls, std::size_t cap = default_enumeration_cap)
{
    const auto total = parallel_reduce_permutations(
        n, cls, std::uint64_t{0},
        [set](std::uint64_t &acc, std::span<const int> w) {
            if (avoids(w, set)) {
                ++acc;
            }
        },
        [](std::uint64_t &acc, const std::uint64_t &part) { acc += part; }, cap);
    return BigInt(total);
}

// Counts for all 64 pattern sets at once, indexed by mask. Each permutation
// is bucketed by the set of patterns it contains; it avoids Pi exactly when
// that set is disjoint from Pi.
inline std::array<BigInt, 64> count_all_classes(std::size_t n, PermClass cls,
                                                std::size_t cap = default_enumeration_cap)
{
    using Buckets = std::array<std::uint64_t, 64>;
    const Buckets buckets = parallel_reduce_permutations(
        n, cls, Buckets{}, [](Buckets &acc, std::span<const int> w) { ++acc[contained_patterns(w)]; },
        [](Buckets &acc, const Buckets &part) {
            for (std::size_t m = 0; m < 64; ++m) {
                acc[m] += part[m];
            }
        },
        cap);
    std::array<BigInt, 64> out{};
    for (unsigned pi = 0; pi < 64; ++pi) {
        std::uint64_t c = 0;
        for (unsigned m = 0; m < 64; ++m) {
            if ((m & pi) == 0) {
                c += buckets[m];
            }
        }
        out[pi] = c;
    }
    return out;
}

// Closed forms.

namespace detail
{

constexpr std::uint8_t mask_of(std::initializer_list<std::string_view> names)
{
    std::uint8_t m = 0;
    for (const auto n : names) {
        for (std::size_t i = 0; i < pattern_names.size(); ++i) {
            if (pattern_names[i] == n) {
                m |= static_cast<std::uint8_t>(1u << i);
            }
        }
    }
    return m;
}

inline PatternSet ps(std::initializer_list<std::string_view> names)
{
    return PatternSet{mask_of(names)};
}

inline BigInt pow2(std::size_t e)
{
    return BigInt(1) << e;
}

enum class Family {
    unrestricted,
    erdos_szekeres,
    pair_213_312,
    pair_213_321,
    triple_132_312_321,
    quad_123_132_231,
    catalan_shift,
    fine,
    a_sequence,
    n_minus_1,
    pow2_n_minus_2,
    pow2_n_minus_3,
    jacobsthal,
    a113954,
    a130404,
    ceil_square,
    odd_n_minus_1,
    floor_half,
    fibonacci,
};

inline Family classify(PatternSet set)
{
    if (set.mask() == 0) {
        return Family::unrestricted;
    }
    if (set.includes(ps({"123", "321"}))) {
        return Family::erdos_szekeres;
    }
    if (set.includes(ps({"213", "312"}))) {
        return Family::pair_213_312;
    }
    if (set.includes(ps({"213", "321"}))) {
        return Family::pair_213_321;
    }
    if (set.includes(ps({"132", "312", "321"}))) {
        return Family::triple_132_312_321;
    }
    if (set == ps({"123", "132", "231", "213"}) || set == ps({"123", "132", "231", "312"})) {
        return Family::quad_123_132_231;
    }
    struct Entry {
        PatternSet set;
        Family family;
    };
    const Entry table[] = {
        {ps({"321"}), Family::catalan_shift},
        {ps({"132"}), Family::fine},
        {ps({"231"}), Family::fine},
        {ps({"123"}), Family::fine},
        {ps({"213"}), Family::a_sequence},
        {ps({"312"}), Family::a_sequence},
        {ps({"132", "321"}), Family::n_minus_1},
        {ps({"132", "231", "321"}), Family::n_minus_1},
        {ps({"132", "231"}), Family::pow2_n_minus_2},
        {ps({"231", "321"}), Family::pow2_n_minus_2},
        {ps({"312", "321"}), Family::pow2_n_minus_3},
        {ps({"123", "213"}), Family::jacobsthal},
        {ps({"132", "213"}), Family::jacobsthal},
        {ps({"213", "231"}), Family::jacobsthal},
        {ps({"132", "312"}), Family::jacobsthal},
        {ps({"231", "312"}), Family::jacobsthal},
        {ps({"123", "132"}), Family::a113954},
        {ps({"123", "231"}), Family::a130404},
        {ps({"123", "312"}), Family::ceil_square},
        {ps({"123", "132", "231"}), Family::odd_n_minus_1},
        {ps({"123", "132", "312"}), Family::floor_half},
        {ps({"123", "231", "312"}), Family::floor_half},
        {ps({"123", "213", "231"}), Family::floor_half},
        {ps({"132", "213", "231"}), Family::floor_half},
        {ps({"132", "231", "312"}), Family::floor_half},
        {ps({"123", "132", "213"}), Family::fibonacci},
        {ps({"231", "312", "321"}), Family::fibonacci},
    };
    for (const auto &e : table) {
        if (e.set == set) {
            return e.family;
        }
    }
    throw invariant_violation("pattern set " + set.str() + " has no closed form");
}

// d_4(Pi) for the classes containing both 123 and 321, from a brute-force
// count over D_4; every other such class is empty at n = 4.
inline BigInt erdos_szekeres_n4(PatternSet set)
{
    if (set == ps({"123", "321"})) {
        return 2;
    }
    if (set == ps({"123", "231", "321"}) || set == ps({"123", "312", "321"}) ||
        set == ps({"123", "231", "312", "321"})) {
        return 1;
    }
    return 0;
}

} // namespace detail

// d_n(Pi) from the closed form for the class. The three smallest lengths are
// the same for every Pi: d_0 = 1 (empty permutation), d_1 = 0, d_2 = 1 (the
// permutation 21 contains no length-3 pattern).
inline BigInt closed_form_count(std::size_t n, PatternSet set)
{
    using detail::Family;
    const auto family = detail::classify(set);
    if (family == Family::unrestricted) {
        return sequence(SequenceId::derangement, n);
    }
    if (n <= 2) {
        return n == 1 ? 0 : 1;
    }
    const bool odd = n % 2 == 1;
    switch (family) {
        case Family::unrestricted:
            break;
        case Family::erdos_szekeres:
            if (n >= 5) {
                return 0;
            }
            if (n == 3) {
                // D_3 = {213, 312}
                return BigInt((set.contains("213") ? 0 : 1) + (set.contains("312") ? 0 : 1));
            }
            return detail::erdos_szekeres_n4(set);
        case Family::pair_213_312:
            return (!odd && !set.contains("321")) ? 1 : 0;
        case Family::pair_213_321:
            return (!set.contains("123") && !set.contains("312")) ? 1 : 0;
        case Family::triple_132_312_321:
            return (!set.contains("123") && !set.contains("213")) ? 1 : 0;
        case Family::quad_123_132_231:
            return 1;
        case Family::catalan_shift:
            return catalan(n - 1);
        case Family::fine:
            return sequence(SequenceId::fine, n + 1);
        case Family::a_sequence:
            return sequence(SequenceId::a_seq, n);
        case Family::n_minus_1:
            return BigInt(n - 1);
        case Family::pow2_n_minus_2:
            return detail::pow2(n - 2);
        case Family::pow2_n_minus_3:
            return detail::pow2(n - 3);
        case Family::jacobsthal:
            return sequence(SequenceId::jacobsthal, n - 1);
        case Family::a113954: {
            // (2^{n+1} + (7 - 3n)(-1)^n) / 9
            BigInt v = detail::pow2(n + 1);
            const BigInt lin = BigInt(7) - BigInt(3 * n);
            v += odd ? BigInt(-lin) : lin;
            return v / 9;
        }
        case Family::a130404: {
            // (2n(n-1) + (5 - 2n)(-1)^n + 3) / 8
            BigInt v = BigInt(2 * n * (n - 1)) + 3;
            const BigInt lin = BigInt(5) - BigInt(2 * n);
            v += odd ? BigInt(-lin) : lin;
            return v / 8;
        }
        case Family::ceil_square: {
            const std::size_t sq = (n - 1) * (n - 1);
            return BigInt((sq + 3) / 4);
        }
        case Family::odd_n_minus_1:
            return odd ? BigInt(n - 1) : BigInt(1);
        case Family::floor_half:
            return BigInt(n / 2);
        case Family::fibonacci:
            return sequence(SequenceId::fibonacci, n - 1);
    }
    throw invariant_violation("unreachable closed-form family");
}

struct ClassDescription {
    std::string formula;
    std::string oeis; // empty when the class is trivial
};

inline ClassDescription describe_class(PatternSet set)
{
    using detail::Family;
    switch (detail::classify(set)) {
        case Family::unrestricted:
            return {"d_n (derangement numbers)", "A000166"};
        case Family::erdos_szekeres:
            return {"0 for n>=5", ""};
        case Family::pair_213_312:
            return {set.contains("321") ? "0 for n>=3" : "0 for odd n, 1 for even n>=2", ""};
        case Family::pair_213_321:
            return {(!set.contains("123") && !set.contains("312")) ? "1 for n>=2" : "0 for n>=3", ""};
        case Family::triple_132_312_321:
            return {(!set.contains("123") && !set.contains("213")) ? "1 for n>=2" : "0 for n>=3", ""};
        case Family::quad_123_132_231:
            return {"1 for n>=2", ""};
        case Family::catalan_shift:
            return {"C_{n-1}", "A000108"};
        case Family::fine:
            return {"F_{n+1}", "A000957"};
        case Family::a_sequence:
            return {"a_n = sum_{k=1}^{n-1} (-1)^{n-k-1} C_k", "A033297"};
        case Family::n_minus_1:
            return {"n-1", "A000027"};
        case Family::pow2_n_minus_2:
            return {"2^{n-2}", "A000079"};
        case Family::pow2_n_minus_3:
            return {"2^{n-3}", "A000079"};
        case Family::jacobsthal:
            return {"J_{n-1}", "A001045"};
        case Family::a113954:
            return {"(2^{n+1}+(7-3n)(-1)^n)/9", "A113954"};
        case Family::a130404:
            return {"(2n(n-1)+(5-2n)(-1)^n+3)/8", "A130404"};
        case Family::ceil_square:
            return {"ceil((n-1)^2/4)", "A004652"};
        case Family::odd_n_minus_1:
            return {"n-1 (n odd), 1 (n even)", "A124625"};
        case Family::floor_half:
            return {"floor(n/2)", "A008619"};
        case Family::fibonacci:
            return {"f_{n-1}", "A000045"};
    }
    return {};
}

// Bijections from the enumeration proofs.

enum class BijectionId {
    insert_321,      // S_n(321) -> D_{n+1}(321): shift up, insert 1 after the first letter
    phi_213,         // S_n(213) -> D_n(213) + D_{n+1}(213): prepend n+1 to non-desarrangements
    phi_312,         // S_n(312) -> D_n(312) + D_{n+1}(312): prepend p_1+1, bump letters above p_1
    toggle_132_231,  // involution on S_n(132,231): move n between the two ends
    swap_231_321,    // involution on S_n(231,321): swap the first two letters
    reduce_312_321,  // D_n(312,321) -> S_{n-2}(312,321): 21tau |-> std(tau)
    phi_123_132_213, // D_n(123,132,213) -> D_{n-1} + D_{n-2}
    phi_231_312_321, // D_n(231,312,321) -> D_{n-1} + D_{n-2}
};

inline constexpr std::array<BijectionId, 8> all_bijections{
    BijectionId::insert_321,     BijectionId::phi_213,         BijectionId::phi_312,
    BijectionId::toggle_132_231, BijectionId::swap_231_321,    BijectionId::reduce_312_321,
    BijectionId::phi_123_132_213, BijectionId::phi_231_312_321};

inline constexpr std::string_view to_string(BijectionId id) noexcept
{
    switch (id) {
        case BijectionId::insert_321:
            return "insert-321";
        case BijectionId::phi_213:
            return "phi-213";
        case BijectionId::phi_312:
            return "phi-312";
        case BijectionId::toggle_132_231:
            return "toggle-132-231";
        case BijectionId::swap_231_321:
            return "swap-231-321";
        case BijectionId::reduce_312_321:
            return "reduce-312-321";
        case BijectionId::phi_123_132_213:
            return "phi-123-132-213";
        case BijectionId::phi_231_312_321:
            return "phi-231-312-321";
    }
    return "?";
}

inline std::optional<BijectionId> parse_bijection_id(std::string_view s) noexcept
{
    for (const auto id : all_bijections) {
        if (to_string(id) == s) {
            return id;
        }
    }
    return std::nullopt;
}

enum class Direction { forward, inverse };

namespace detail
{

inline bool in_s(const Permutation &p, PatternSet set)
{
    return avoids(p, set);
}

inline bool in_d(const Permutation &p, PatternSet set)
{
    return is_desarrangement(p) && avoids(p, set);
}

inline Permutation make_perm(std::vector<int> v)
{
    return Permutation{std::move(v)};
}

inline void require(bool ok, BijectionId id, const Permutation &p, std::string_view what)
{
    if (!ok) {
        throw invalid_input(std::string(to_string(id)) + ": " + p.str() + " is not in " + std::string(what));
    }
}

// Smallest size of the map's domain family.
inline std::size_t min_domain_size(BijectionId id) noexcept
{
    switch (id) {
        case BijectionId::insert_321:
            return 1;
        case BijectionId::phi_213:
        case BijectionId::phi_312:
            return 0;
        case BijectionId::toggle_132_231:
        case BijectionId::swap_231_321:
        case BijectionId::reduce_312_321:
            return 2;
        case BijectionId::phi_123_132_213:
        case BijectionId::phi_231_312_321:
            return 3;
    }
    return 0;
}

} // namespace detail

// Domain membership for size n (the size parameter of the domain family).
inline bool in_bijection_domain(BijectionId id, const Permutation &p)
{
    using detail::in_d;
    using detail::in_s;
    using detail::ps;
    if (p.size() < detail::min_domain_size(id)) {
        return false;
    }
    switch (id) {
        case BijectionId::insert_321:
            return in_s(p, ps({"321"}));
        case BijectionId::phi_213:
            return in_s(p, ps({"213"}));
        case BijectionId::phi_312:
            return in_s(p, ps({"312"}));
        case BijectionId::toggle_132_231:
            return in_s(p, ps({"132", "231"}));
        case BijectionId::swap_231_321:
            return in_s(p, ps({"231", "321"}));
        case BijectionId::reduce_312_321:
            return in_d(p, ps({"312", "321"}));
        case BijectionId::phi_123_132_213:
            return in_d(p, ps({"123", "132", "213"}));
        case BijectionId::phi_231_312_321:
            return in_d(p, ps({"231", "312", "321"}));
    }
    return false;
}

// Codomain membership, relative to the domain size n.
inline bool in_bijection_codomain(BijectionId id, const Permutation &p, std::size_t n)
{
    using detail::in_d;
    using detail::in_s;
    using detail::ps;
    if (n < detail::min_domain_size(id)) {
        return false;
    }
    const std::size_t m = p.size();
    switch (id) {
        case BijectionId::insert_321:
            return m == n + 1 && in_d(p, ps({"321"}));
        case BijectionId::phi_213:
            return (m == n || m == n + 1) && in_d(p, ps({"213"}));
        case BijectionId::phi_312:
            return (m == n || m == n + 1) && in_d(p, ps({"312"}));
        case BijectionId::toggle_132_231:
            return m == n && in_s(p, ps({"132", "231"}));
        case BijectionId::swap_231_321:
            return m == n && in_s(p, ps({"231", "321"}));
        case BijectionId::reduce_312_321:
            return m + 2 == n && in_s(p, ps({"312", "321"}));
        case BijectionId::phi_123_132_213:
            return (m + 1 == n || m + 2 == n) && in_d(p, ps({"123", "132", "213"}));
        case BijectionId::phi_231_312_321:
            return (m + 1 == n || m + 2 == n) && in_d(p, ps({"231", "312", "321"}));
    }
    return false;
}

// Size of the codomain element's domain family when it is implied by the
// element itself; maps into a disjoint union of two sizes need it supplied.
inline std::optional<std::size_t> implied_domain_size(BijectionId id, const Permutation &p) noexcept
{
    switch (id) {
        case BijectionId::insert_321:
            return p.empty() ? std::nullopt : std::optional<std::size_t>(p.size() - 1);
        case BijectionId::toggle_132_231:
        case BijectionId::swap_231_321:
            return p.size();
        case BijectionId::reduce_312_321:
            return p.size() + 2;
        default:
            return std::nullopt;
    }
}

// Applies a bijection. For the inverse of maps whose codomain is a disjoint
// union (phi-213, phi-312, phi-123-132-213, phi-231-312-321), domain_size
// names the size n of the domain family. Throws invalid_input outside the
// domain (forward) or codomain (inverse).
inline Permutation bijection(BijectionId id, const Permutation &p, Direction dir,
                             std::optional<std::size_t> domain_size = std::nullopt)
{
    using detail::make_perm;
    std::vector<int> v(p.values().begin(), p.values().end());
    if (dir == Direction::forward) {
        detail::require(in_bijection_domain(id, p), id, p, "the domain");
        const std::size_t n = p.size();
        switch (id) {
            case BijectionId::insert_321: {
                std::vector<int> out;
                out.push_back(v[0] + 1);
                out.push_back(1);
                for (std::size_t i = 1; i < n; ++i) {
                    out.push_back(v[i] + 1);
                }
                return make_perm(std::move(out));
            }
            case BijectionId::phi_213:
                if (is_desarrangement(p)) {
                    return p;
                }
                v.insert(v.begin(), static_cast<int>(n + 1));
                return make_perm(std::move(v));
            case BijectionId::phi_312: {
                if (is_desarrangement(p)) {
                    return p;
                }
                const int first = v[0];
                for (auto &x : v) {
                    if (x > first) {
                        ++x;
                    }
                }
                v.insert(v.begin(), first + 1);
                return make_perm(std::move(v));
            }
            case BijectionId::toggle_132_231:
            case BijectionId::swap_231_321:
                break;
            case BijectionId::reduce_312_321:
                return standardize(std::span<const int>(v).subspan(2));
            case BijectionId::phi_123_132_213:
                if (v[n - 2] == 2 && v[n - 1] == 1) {
                    return standardize(std::span<const int>(v).first(n - 2));
                }
                return standardize(std::span<const int>(v).first(n - 1));
            case BijectionId::phi_231_312_321:
                if (v[n - 2] == static_cast<int>(n) && v[n - 1] == static_cast<int>(n - 1)) {
                    v.resize(n - 2);
                } else {
                    v.resize(n - 1);
                }
                return make_perm(std::move(v));
        }
    }

    // Involutions are their own inverses.
    if (id == BijectionId::toggle_132_231) {
        const std::size_t n = v.size();
        if (dir == Direction::inverse) {
            detail::require(in_bijection_codomain(id, p, n), id, p, "the codomain");
        }
        if (v[0] == static_cast<int>(n)) {
            std::rotate(v.begin(), v.begin() + 1, v.end());
        } else {
            std::rotate(v.rbegin(), v.rbegin() + 1, v.rend());
        }
        return make_perm(std::move(v));
    }
    if (id == BijectionId::swap_231_321) {
        if (dir == Direction::inverse) {
            detail::require(in_bijection_codomain(id, p, v.size()), id, p, "the codomain");
        }
        std::swap(v[0], v[1]);
        return make_perm(std::move(v));
    }

    const auto n_opt = domain_size ? domain_size : implied_domain_size(id, p);
    if (!n_opt) {
        throw invalid_input(std::string(to_string(id)) + ": inverse needs the domain size");
    }
    const std::size_t n = *n_opt;
    detail::require(in_bijection_codomain(id, p, n), id, p, "the codomain for size " + std::to_string(n));
    const std::size_t m = v.size();
    switch (id) {
        case BijectionId::insert_321: {
            std::vector<int> out;
            for (const int x : v) {
                if (x != 1) {
                    out.push_back(x - 1);
                }
            }
            return make_perm(std::move(out));
        }
        case BijectionId::phi_213:
            if (m == n) {
                return p;
            }
            v.erase(v.begin());
            return make_perm(std::move(v));
        case BijectionId::phi_312: {
            if (m == n) {
                return p;
            }
            const int second = v[1];
            for (auto &x : v) {
                if (x > second) {
                    --x;
                }
            }
            v.erase(v.begin());
            return make_perm(std::move(v));
        }
        case BijectionId::reduce_312_321: {
            std::vector<int> out{2, 1};
            for (const int x : v) {
                out.push_back(x + 2);
            }
            return make_perm(std::move(out));
        }
        case BijectionId::phi_123_132_213:
            if (m + 2 == n) {
                for (auto &x : v) {
                    x += 2;
                }
                v.push_back(2);
                v.push_back(1);
                return make_perm(std::move(v));
            }
            if (v[m - 2] == 1) {
                for (auto &x : v) {
                    x += 1;
                }
                v.push_back(1);
            } else {
                for (auto &x : v) {
                    if (x >= 2) {
                        x += 1;
                    }
                }
                v.push_back(2);
            }
            return make_perm(std::move(v));
        case BijectionId::phi_231_312_321:
            if (m + 2 == n) {
                v.push_back(static_cast<int>(n));
                v.push_back(static_cast<int>(n - 1));
            } else {
                v.push_back(static_cast<int>(n));
            }
            return make_perm(std::move(v));
        default:
            break;
    }
    throw invariant_violation("unhandled bijection");
}

namespace detail
{

// Pattern set and class (S or D) of the domain family.
inline std::pair<PatternSet, PermClass> domain_class(BijectionId id)
{
    switch (id) {
        case BijectionId::insert_321:
            return {ps({"321"}), PermClass::all};
        case BijectionId::phi_213:
            return {ps({"213"}), PermClass::all};
        case BijectionId::phi_312:
            return {ps({"312"}), PermClass::all};
        case BijectionId::toggle_132_231:
            return {ps({"132", "231"}), PermClass::all};
        case BijectionId::swap_231_321:
            return {ps({"231", "321"}), PermClass::all};
        case BijectionId::reduce_312_321:
            return {ps({"312", "321"}), PermClass::desarrangements};
        case BijectionId::phi_123_132_213:
            return {ps({"123", "132", "213"}), PermClass::desarrangements};
        case BijectionId::phi_231_312_321:
            return {ps({"231", "312", "321"}), PermClass::desarrangements};
    }
    return {};
}

} // namespace detail

// The full domain of a bijection at size n, in lexicographic order.
inline std::vector<Permutation> bijection_domain(BijectionId id, std::size_t n,
                                                 std::size_t cap = default_enumeration_cap)
{
    std::vector<Permutation> out;
    if (n < detail::min_domain_size(id)) {
        return out;
    }
    const auto [set, cls] = detail::domain_class(id);
    for_each_permutation(
        n, cls,
        [&](std::span<const int> w) {
            if (avoids(w, set)) {
                out.emplace_back(std::vector<int>(w.begin(), w.end()));
            }
        },
        cap);
    return out;
}

// The full codomain of a bijection for domain size n: shortest members first.
inline std::vector<Permutation> bijection_codomain(BijectionId id, std::size_t n,
                                                   std::size_t cap = default_enumeration_cap)
{
    std::vector<Permutation> out;
    if (n < detail::min_domain_size(id)) {
        return out;
    }
    const auto set = detail::domain_class(id).first;
    for (std::size_t m = n >= 2 ? n - 2 : 0; m <= n + 1; ++m) {
        bool possible = false;
        switch (id) {
            case BijectionId::insert_321:
                possible = m == n + 1;
                break;
            case BijectionId::phi_213:
            case BijectionId::phi_312:
                possible = m == n || m == n + 1;
                break;
            case BijectionId::toggle_132_231:
            case BijectionId::swap_231_321:
                possible = m == n;
                break;
            case BijectionId::reduce_312_321:
                possible = m + 2 == n;
                break;
            case BijectionId::phi_123_132_213:
            case BijectionId::phi_231_312_321:
                possible = m + 1 == n || m + 2 == n;
                break;
        }
        if (!possible) {
            continue;
        }
        for_each_permutation(
            m, PermClass::all,
            [&](std::span<const int> w) {
                // every codomain avoids the same patterns as its domain
                if (!avoids(w, set)) {
                    return;
                }
                Permutation p{std::vector<int>(w.begin(), w.end())};
                if (in_bijection_codomain(id, p, n)) {
                    out.push_back(std::move(p));
                }
            },
            cap);
    }
    return out;
}

// Simion-Schmidt correspondence between 123- and 132-avoiding permutations.
// Both directions keep the left-to-right minima (values and positions).
// Forward fills each other position, left to right, with the smallest unused
// letter exceeding the nearest left-to-right minimum on its left; inverse
// fills the other positions with the unused letters in decreasing order.
inline Permutation simion_schmidt(const Permutation &p, Direction dir = Direction::forward)
{
    const PatternSet need = dir == Direction::forward ? detail::ps({"123"}) : detail::ps({"132"});
    if (!avoids(p, need)) {
        throw invalid_input("simion_schmidt: " + p.str() + " does not avoid " + need.str());
    }
    const std::size_t n = p.size();
    std::vector<bool> is_min(n, false);
    std::vector<bool> used(n + 1, false);
    int current = static_cast<int>(n) + 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (p[i] < current) {
            current = p[i];
            is_min[i] = true;
            used[static_cast<std::size_t>(p[i])] = true;
        }
    }
    std::vector<int> out(n);
    if (dir == Direction::forward) {
        int last_min = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (is_min[i]) {
                out[i] = last_min = p[i];
                continue;
            }
            int x = last_min + 1;
            while (used[static_cast<std::size_t>(x)]) {
                ++x;
            }
            used[static_cast<std::size_t>(x)] = true;
            out[i] = x;
        }
    } else {
        int x = static_cast<int>(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (is_min[i]) {
                out[i] = p[i];
                continue;
            }
            while (used[static_cast<std::size_t>(x)]) {
                --x;
            }
            used[static_cast<std::size_t>(x)] = true;
            out[i] = x;
        }
    }
    return Permutation{std::move(out)};
}

// pix versus fix over avoidance classes.

// The ten classes whose desarrangement and derangement counts coincide for
// every n, and the nine (all but {132}) conjectured to share the joint
// pix/fix distribution.
inline std::vector<PatternSet> equinumerous_with_derangements()
{
    using detail::ps;
    return {ps({"132"}),
            ps({"132", "312"}),
            ps({"132", "321"}),
            ps({"213", "231"}),
            ps({"123", "132", "312"}),
            ps({"123", "213", "231"}),
            ps({"123", "312", "321"}),
            ps({"132", "312", "321"}),
            ps({"213", "231", "312"}),
            ps({"213", "231", "321"})};
}

inline std::vector<PatternSet> conjectured_pix_fix_equidistributed()
{
    auto v = equinumerous_with_derangements();
    v.erase(v.begin());
    return v;
}

struct EquidistributionRecord {
    PatternSet set;
    std::vector<BigInt> desarrangement_counts; // d_n(Pi), n = 0..n_max
    std::vector<BigInt> derangement_counts;    // number of derangements avoiding Pi
    std::vector<BigInt> formula_counts;        // closed_form_count
    bool counts_agree = true;
    std::optional<std::size_t> first_count_difference;
    bool distributions_agree = true;
    std::optional<std::size_t> first_distribution_difference;
    bool listed_equinumerous = false;
    bool listed_equidistributed = false;

    // Evidence matches the listed classification on both questions.
    bool consistent() const noexcept
    {
        return counts_agree == listed_equinumerous && distributions_agree == listed_equidistributed;
    }
};

// For every Pi with 1 <= |Pi| <= 3, compares desarrangement and derangement
// counts and the pix and fix distributions over S_n(Pi), n = 0..n_max.
// Evidence only: agreement up to n_max proves nothing about larger n.
inline std::vector<EquidistributionRecord> equidistribution_report(std::size_t n_max,
                                                                   std::size_t cap = default_enumeration_cap)
{
    check_cap(n_max, cap);
    const auto theorem_list = equinumerous_with_derangements();
    const auto conjecture_list = conjectured_pix_fix_equidistributed();
    auto listed = [](const std::vector<PatternSet> &list, PatternSet s) {
        return std::find(list.begin(), list.end(), s) != list.end();
    };

    std::vector<EquidistributionRecord> records;
    for (const auto set : PatternSet::all_subsets()) {
        if (set.size() >= 1 && set.size() <= 3) {
            EquidistributionRecord r;
            r.set = set;
            r.listed_equinumerous = listed(theorem_list, set);
            r.listed_equidistributed = listed(conjecture_list, set);
            records.push_back(std::move(r));
        }
    }

    struct Census {
        // [contained-pattern mask][statistic value]
        std::vector<std::array<std::uint64_t, 64>> by_fix;
        std::vector<std::array<std::uint64_t, 64>> by_pix;
        std::array<std::uint64_t, 64> desarrangements{};
        std::array<std::uint64_t, 64> derangements{};
    };
    for (std::size_t n = 0; n <= n_max; ++n) {
        Census init;
        init.by_fix.assign(n + 1, {});
        init.by_pix.assign(n + 1, {});
        const Census census = parallel_reduce_permutations(
            n, PermClass::all, init,
            [](Census &c, std::span<const int> w) {
                const auto m = contained_patterns(w);
                const auto fix = static_cast<std::size_t>(fixed_points(w));
                const auto pix = static_cast<std::size_t>(pixed_points(w));
                ++c.by_fix[fix][m];
                ++c.by_pix[pix][m];
                if (pix == 0) {
                    ++c.desarrangements[m];
                }
                if (fix == 0) {
                    ++c.derangements[m];
                }
            },
            [](Census &acc, const Census &part) {
                for (std::size_t k = 0; k < acc.by_fix.size(); ++k) {
                    for (std::size_t m = 0; m < 64; ++m) {
                        acc.by_fix[k][m] += part.by_fix[k][m];
                        acc.by_pix[k][m] += part.by_pix[k][m];
                    }
                }
                for (std::size_t m = 0; m < 64; ++m) {
                    acc.desarrangements[m] += part.desarrangements[m];
                    acc.derangements[m] += part.derangements[m];
                }
            },
            cap);
        for (auto &r : records) {
            const unsigned pi = r.set.mask();
            auto total = [pi](const std::array<std::uint64_t, 64> &a) {
                std::uint64_t c = 0;
                for (unsigned m = 0; m < 64; ++m) {
                    if ((m & pi) == 0) {
                        c += a[m];
                    }
                }
                return c;
            };
            const auto d = total(census.desarrangements);
            const auto dt = total(census.derangements);
            r.desarrangement_counts.emplace_back(d);
            r.derangement_counts.emplace_back(dt);
            r.formula_counts.push_back(closed_form_count(n, r.set));
            if (d != dt && r.counts_agree) {
                r.counts_agree = false;
                r.first_count_difference = n;
            }
            for (std::size_t k = 0; k <= n; ++k) {
                if (total(census.by_fix[k]) != total(census.by_pix[k]) && r.distributions_agree) {
                    r.distributions_agree = false;
                    r.first_distribution_difference = n;
                }
            }
        }
    }
    return records;
}

} // namespace desarr

#endif
