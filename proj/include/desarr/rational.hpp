#ifndef DESARR_RATIONAL_HPP
#define DESARR_RATIONAL_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include <desarr/errors.hpp>

namespace desarr
{

using BigInt = boost::multiprecision::cpp_int;
// Always kept in lowest terms with a positive denominator by the backend.
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt numerator_of(const BigRational &q)
{
    return boost::multiprecision::numerator(q);
}

inline BigInt denominator_of(const BigRational &q)
{
    return boost::multiprecision::denominator(q);
}

inline bool is_integral(const BigRational &q)
{
    return denominator_of(q) == 1;
}

// q^e for a non-negative integer exponent; 0^0 = 1.
inline BigRational pow_int(const BigRational &q, long long e)
{
    if (e < 0) {
        throw invalid_input("negative exponent " + std::to_string(e));
    }
    BigRational result{1};
    BigRational base = q;
    while (e > 0) {
        if (e & 1) {
            result *= base;
        }
        base *= base;
        e >>= 1;
    }
    return result;
}

inline BigInt factorial(std::size_t n)
{
    BigInt f{1};
    for (std::size_t k = 2; k <= n; ++k) {
        f *= k;
    }
    return f;
}

// Factorials 0!..n! as a table, since series code needs them repeatedly.
inline std::vector<BigInt> factorial_table(std::size_t n)
{
    std::vector<BigInt> out(n + 1);
    out[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        out[k] = out[k - 1] * k;
    }
    return out;
}

// "num/den" with den > 0; integers are written as "num/1".
inline std::string to_fraction_string(const BigRational &q)
{
    return numerator_of(q).str() + "/" + denominator_of(q).str();
}

// Integers print bare, everything else as "num/den".
inline std::string to_display_string(const BigRational &q)
{
    if (is_integral(q)) {
        return numerator_of(q).str();
    }
    return to_fraction_string(q);
}

namespace detail
{

inline BigInt parse_bigint(std::string_view s, std::string_view whole)
{
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        i = 1;
    }
    if (i == s.size()) {
        throw invalid_input("malformed rational '" + std::string(whole) + "'");
    }
    for (std::size_t k = i; k < s.size(); ++k) {
        if (s[k] < '0' || s[k] > '9') {
            throw invalid_input("malformed rational '" + std::string(whole) + "'");
        }
    }
    BigInt v{std::string(s[0] == '+' ? s.substr(1) : s)};
    return v;
}

} // namespace detail

// Accepts "num/den" or a bare integer, optional sign on the numerator.
inline BigRational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return BigRational{detail::parse_bigint(text, text)};
    }
    const BigInt num = detail::parse_bigint(text.substr(0, slash), text);
    const BigInt den = detail::parse_bigint(text.substr(slash + 1), text);
    if (den == 0) {
        throw invalid_input("zero denominator in '" + std::string(text) + "'");
    }
    // the two-argument constructor rejects a negative denominator
    return den < 0 ? BigRational{-num, -den} : BigRational{num, den};
}

} // namespace desarr

#endif
