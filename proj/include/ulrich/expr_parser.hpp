// SPDX-License-Identifier: Apache-2.0
//
// Bundle-expression mini-language used by the `coh` command:
//
//   expr    := ["xi" ["^" int] "*"] surface
//   surface := "L(" int "," int ")"
//            | "E(" [int "," int] ")"          E (x) O(a,b); E() = E
//            | "S2E(" [int "," int] ")"        S^2 E (x) O(a,b)
//            | "IZ(" int "," int ";" int ")"   I_Z (x) O(a,b), length l
//            | "Ext[" surface "->" surface "]" extension 0 -> sub -> M -> quot -> 0
//
// Integers are arbitrary precision with an optional sign; whitespace is
// ignored. Malformed input raises ParseError with the offending position.
#pragma once

#include "ulrich/cohomology.hpp"

#include <string>

namespace ulrich {

BundleExpr parse_bundle_expr(const std::string& text);

}  // namespace ulrich
