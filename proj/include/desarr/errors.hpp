#ifndef DESARR_ERRORS_HPP
#define DESARR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace desarr
{

// Base class for every recoverable error raised by the library.
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Malformed arguments: duplicate letters, bad pattern names, a permutation
// outside the domain of a bijection, unparsable serialized data.
class invalid_input : public error
{
public:
    using error::error;
};

// An enumeration was requested above the configured size cap.
class resource_limit : public error
{
public:
    using error::error;
};

// Series of different truncation orders were combined.
class order_mismatch : public error
{
public:
    using error::error;
};

// Division by a series (or scalar) with zero constant term, or a singular
// constant-term matrix. Formula evaluation treats this as a pole at the
// chosen specialization and resamples.
class not_invertible : public error
{
public:
    using error::error;
};

// Interpolated data did not fit a polynomial of the requested degree, or
// fitted one with non-integral / negative coefficients where counts were
// expected.
class interpolation_error : public error
{
public:
    using error::error;
};

// A composition is admissible along more than one path of a run graph.
class hypothesis_violation : public error
{
public:
    using error::error;
};

// Internal consistency failure. Never expected; signals a bug.
class invariant_violation : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

} // namespace desarr

#endif
