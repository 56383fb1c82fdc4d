#pragma once

#include <string>
#include <string_view>

#include "poly.hpp"

namespace romanus {

// The three polynomial spellings the library reads and writes.
//
//   Modern:  45x - 3795x^3 + x^45      coefficient juxtaposed, caret powers,
//                                      unit coefficients omitted
//   Stevin:  45(1) - 3795(3) + 1(45)   exponent in parentheses after the
//                                      coefficient; constants print bare but
//                                      "(0)" is accepted on input
//   Viete:   45N - 3795QC + 1CCC...    N = first power, Q adds 2, C adds 3;
//                                      a power is any product of Q and C
//                                      (canonically C-heavy: QC = 5, QQC = 7);
//                                      coefficients are mandatory, constants
//                                      are inexpressible (UnsupportedDialect)
//
// All dialects print ascending powers, signs folded into " + " / " - "
// separators, and the zero polynomial as "0".
enum class Dialect { Modern, Stevin, Viete };

const char* dialect_name(Dialect d);
// Throws Error(Invalid) for anything but "modern", "stevin", "viete".
Dialect dialect_from_name(std::string_view name);

// Throws Error(Syntax) with byte offset and expected-token hints;
// Error(Range) for exponents beyond 100000.
Polynomial parse_poly(std::string_view text, Dialect d);

// Throws Error(UnsupportedDialect) when the polynomial has a nonzero
// constant term and d == Viete.
std::string print_poly(const Polynomial& p, Dialect d);

// parse_poly + print_poly.
std::string convert(std::string_view text, Dialect from, Dialect to);

}  // namespace romanus
