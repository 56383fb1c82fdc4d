#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "decimal.hpp"
#include "interval.hpp"
#include "radical.hpp"

namespace romanus {

// A rational multiple of pi: (num/den)*pi, normalized by make_angle to
// lowest terms with 0 <= num/den < 2 and den >= 1.
struct RationalAngle {
    long long num = 0;
    long long den = 1;
    bool operator==(const RationalAngle&) const = default;
};

// Throws Error(Invalid) on a zero denominator or absurdly large inputs.
RationalAngle make_angle(long long num, long long den);
mpq_class angle_to_mpq(const RationalAngle& a);
std::string angle_str(const RationalAngle& a);  // "num/den" ("0" when zero)

enum class TrigFunc { Sin, Cos };

// How far q's odd part strays from the square-root-constructible family
// {2^a, 2^a*3, 2^a*5, 2^a*15}: each extra factor of 3 demands inverting a
// degree-3 polynomial step, each extra 5 a degree-5 step.
enum class Constructibility {
    SquareRootsOnly,
    NeedsCubic,
    NeedsQuintic,
    NeedsCubicAndQuintic,
    OutOfScope,  // odd part has a prime factor other than 3 or 5
};
const char* constructibility_name(Constructibility c);

Constructibility classify(const RationalAngle& a);

// Is 2cos(t*pi) expressible with nested square roots over the rationals,
// i.e. does den(t)'s odd part lie in {1, 3, 5, 15}?
bool constructible_angle(const mpq_class& t);

// Exact nested-square-root expression for 2cos(t*pi), constructible t in
// [0, 1].  Built by the half-angle rule 2cos(x) = sqrt(2 + 2cos(2x)) over the
// base values at denominators {1, 2, 3, 5, 15}, with the supplement rule
// 2cos(x) = -2cos(pi - x) keeping every radicand nonnegative.
RadicalPtr two_cos_expr(const mpq_class& t);

// Same for 2sin(t*pi), constructible t in [0, 1/2]:
// 2sin(x) = sqrt(2 - 2cos(2x)).  A radicand that folds to a literal perfect
// square collapses (2sin(pi/6) = 1, not sqrt(1)).
RadicalPtr two_sin_expr(const mpq_class& t);

// The user-facing tower constructor for a in (0, pi/2] (normalized angle
// <= 1/2): returns the doubled value 2sin(a*pi) / 2cos(a*pi) and verifies the
// construction internally against the interval kernel at 40 digits.
// Errors: Range (angle outside (0, 1/2]), Unsupported (odd part not in
// {1, 3, 5, 15}).
RadicalPtr tower(const RationalAngle& a, TrigFunc f);

// sin/cos (not doubled) of any angle in [0, 2pi) whose denominator's odd
// part is supported; nullopt otherwise.  Exact: Table-style quotient forms.
std::optional<RadicalPtr> exact_value(const RationalAngle& a, TrigFunc f);

// Prime factors of n with multiplicity, ascending — the composition chain
// T_n = T_p1 ∘ T_p2 ∘ ... read outermost to innermost.  n = 1 gives {}.
// Throws Error(Invalid) if n == 0.
std::vector<unsigned long long> factor_chain(unsigned long long n);

// Perimeter of the regular n-gon inscribed in the unit circle: 2n*sin(pi/n),
// certified to `digits`.  Errors: Range (n < 3 or digits out of range),
// Unsupported (odd part of n has a prime factor other than 3 or 5).
PrecisionDecimal polygon_perimeter(unsigned long long n, int digits);

// n*sin(pi/n), half the inscribed perimeter: the classical lower
// approximation of pi.  Same domain and errors as polygon_perimeter.
PrecisionDecimal pi_approximation(unsigned long long n, int digits);

// Rigorous enclosures of 2cos(t*pi) / 2sin(t*pi) for ANY rational t, width
// certified <= 10^-pow10.  Constructible denominators evaluate their exact
// square-root chain; others are bracketed between the chains of the two
// adjacent dyadic angles (cos is monotone on [0, pi]), refining the dyadic
// grid until the width target is met.
DyadicInterval two_cos_enclosure(const mpq_class& t, long pow10);
DyadicInterval two_sin_enclosure(const mpq_class& t, long pow10);

}  // namespace romanus
