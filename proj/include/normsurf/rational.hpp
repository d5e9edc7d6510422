#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace normsurf {

using Integer = boost::multiprecision::cpp_int;

// The universal scalar. Arbitrary precision, always in lowest terms with a
// positive denominator; every quantity in the library is computed in this
// type and nothing is ever rounded.
using Rational = boost::multiprecision::cpp_rational;

// Wire format: "p/q", or "p" when the denominator is 1.
std::string rational_to_string(const Rational& q);

// Strict parser for the wire format. Accepts an optional leading '-', a
// nonempty digit run, and optionally "/<digits>" with a positive denominator.
// Anything else — including floating-point syntax — throws
// std::invalid_argument.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);

Integer floor_rational(const Rational& q);
Integer ceil_rational(const Rational& q);

}  // namespace normsurf
