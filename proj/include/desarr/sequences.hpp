#ifndef DESARR_SEQUENCES_HPP
#define DESARR_SEQUENCES_HPP

// Classical sequences that count the avoidance classes. Indexing:
//   catalan     C_0 = 1, C_1 = 1, C_2 = 2, ...
//   fine        F_0 = 0, F_1 = 1, F_2 = 0, F_3 = 1, F_4 = 2, ...
//               (OEIS A000957 lists the same values starting at F_0 = 1 with
//               offset 0; here F_n is shifted one place so that F_1 = 1.)
//   jacobsthal  J_0 = 0, J_1 = 1, J_n = J_{n-1} + 2 J_{n-2}
//   fibonacci   f_0 = 0, f_1 = 1
//   a_seq       a_0 = 1, a_{n+1} = C_n - a_n
//   derangement d_0 = 1, d_n = n d_{n-1} + (-1)^n

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <desarr/errors.hpp>
#include <desarr/rational.hpp>

namespace desarr
{

enum class SequenceId { catalan, fine, jacobsthal, fibonacci, a_seq, derangement };

inline constexpr std::string_view to_string(SequenceId id) noexcept
{
    switch (id) {
        case SequenceId::catalan:
            return "catalan";
        case SequenceId::fine:
            return "fine";
        case SequenceId::jacobsthal:
            return "jacobsthal";
        case SequenceId::fibonacci:
            return "fibonacci";
        case SequenceId::a_seq:
            return "a_seq";
        case SequenceId::derangement:
            return "derangement";
    }
    return "?";
}

inline std::optional<SequenceId> parse_sequence_id(std::string_view s) noexcept
{
    for (const auto id : {SequenceId::catalan, SequenceId::fine, SequenceId::jacobsthal, SequenceId::fibonacci,
                          SequenceId::a_seq, SequenceId::derangement}) {
        if (to_string(id) == s) {
            return id;
        }
    }
    return std::nullopt;
}

inline BigInt catalan(std::size_t n)
{
    // C_n = binom(2n, n) / (n + 1), built incrementally: C_{k+1} = C_k * 2(2k+1)/(k+2)
    BigInt c{1};
    for (std::size_t k = 0; k < n; ++k) {
        c = c * (2 * (2 * k + 1)) / (k + 2);
    }
    return c;
}

// Values for indices 0..n_max.
inline std::vector<BigInt> sequence_values(SequenceId id, std::size_t n_max)
{
    std::vector<BigInt> v(n_max + 1);
    switch (id) {
        case SequenceId::catalan:
            for (std::size_t n = 0; n <= n_max; ++n) {
                v[n] = catalan(n);
            }
            break;
        case SequenceId::fine:
            v[0] = 0;
            if (n_max >= 1) {
                v[1] = 1;
            }
            // C_n = 2 F_{n+1} + F_n for n >= 1
            for (std::size_t n = 1; n + 1 <= n_max; ++n) {
                v[n + 1] = (catalan(n) - v[n]) / 2;
            }
            break;
        case SequenceId::jacobsthal:
        case SequenceId::fibonacci: {
            const int mult = id == SequenceId::jacobsthal ? 2 : 1;
            v[0] = 0;
            if (n_max >= 1) {
                v[1] = 1;
            }
            for (std::size_t n = 2; n <= n_max; ++n) {
                v[n] = v[n - 1] + mult * v[n - 2];
            }
            break;
        }
        case SequenceId::a_seq:
            v[0] = 1;
            for (std::size_t n = 0; n + 1 <= n_max; ++n) {
                v[n + 1] = catalan(n) - v[n];
            }
            break;
        case SequenceId::derangement:
            v[0] = 1;
            for (std::size_t n = 1; n <= n_max; ++n) {
                v[n] = BigInt(n) * v[n - 1] + (n % 2 == 0 ? 1 : -1);
            }
            break;
    }
    return v;
}

inline BigInt sequence(SequenceId id, std::size_t n)
{
    return sequence_values(id, n)[n];
}

} // namespace desarr

#endif
