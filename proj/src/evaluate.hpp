#pragma once

#include "decimal.hpp"
#include "interval.hpp"
#include "radical.hpp"

namespace romanus {

// Certified evaluation of a radical expression to `digits` fractional digits:
// the expression is evaluated in dyadic interval arithmetic at increasing
// working precision until the enclosure is narrower than 10^-(digits+4), then
// the midpoint is rounded.  Guarantee: |true value - printed value| <= 10^-digits.
//
// Errors (each carrying the node path of the offending subexpression):
//   Domain           - sqrt of a certainly negative radicand
//   DivisionByZero   - certainly zero denominator
//   UndecidableSign  - a radicand or denominator still straddles zero after
//                      all refinement rounds (e.g. sqrt(sqrt(2)*sqrt(2)-2))
PrecisionDecimal evaluate(const RadicalPtr& e, int digits);

// The underlying enclosure: refine until width <= 10^-pow10. Same errors.
DyadicInterval eval_to_pow10_width(const RadicalPtr& e, long pow10);

// Single interval pass at a fixed working precision, for callers that manage
// their own refinement loop. Throws the same errors; a straddle that more
// precision might resolve is reported by the bool (false = needs refinement).
bool eval_at_precision(const RadicalPtr& e, long prec_bits, DyadicInterval& out);

// Decide |a - b| < 10^-digits rigorously. Refines both sides as needed;
// throws UndecidableSign if the difference sits exactly on the threshold
// beyond all refinement rounds.
bool numeric_equal(const RadicalPtr& a, const RadicalPtr& b, int digits);

}  // namespace romanus
