// SPDX-License-Identifier: Apache-2.0
//
// Exact integer and rational types used by every module. No floating point
// appears anywhere in the engine.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ulrich {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Floor and ceiling division for a positive divisor (cpp_int truncates).
Int floor_div(const Int& n, const Int& d);
Int ceil_div(const Int& n, const Int& d);

// n / d, throwing std::logic_error naming `what` when d does not divide n.
// Used wherever a closed form divides by 2 or 4 so parity bugs surface
// instead of being rounded away.
Int exact_div(const Int& n, const Int& d, const char* what);

inline Int max0(const Int& x) { return x > 0 ? x : Int(0); }

std::string to_string(const Int& x);
// "p" for integers, "p/q" otherwise (always in lowest terms).
std::string to_string(const Rational& q);

// Parse a decimal integer with optional sign; returns false on junk.
bool parse_int(const std::string& text, Int& out);

}  // namespace ulrich
