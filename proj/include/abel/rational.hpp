#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace abel {

/// Exact rational used for polarizations. Denominators stay small in practice;
/// boost::rational throws on zero denominators but does not guard overflow.
using Rational = boost::rational<std::int64_t>;

/// Parses "[+-]digits[/digits]". Throws Error(BadRational) on anything else.
Rational parse_rational(std::string_view text);

/// Canonical form: "0", "3", "-1/2".
std::string to_string(const Rational& r);

std::int64_t floor(const Rational& r);

Rational sum(const std::vector<Rational>& values);

/// Least common multiple of the denominators (1 for an empty list).
std::int64_t common_denominator(const std::vector<Rational>& values);

}  // namespace abel
