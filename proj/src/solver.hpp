#pragma once

#include <optional>
#include <string>
#include <vector>

#include "angles.hpp"
#include "decimal.hpp"
#include "radical.hpp"

namespace romanus {

// One root of V_n(x) = b.  `angle` is the sin-form parameter: x = 2sin(angle*pi),
// normalized into [0, 1/2] ∪ (3/2, 2) (3/2 itself only for x = -2).  `radical`
// is present exactly when the angle is square-root constructible.  solve_numeric
// populates neither.
struct Solution {
    std::optional<RationalAngle> angle;
    RadicalPtr radical;  // may be null
    PrecisionDecimal value;
    int multiplicity = 1;
};

struct SolutionSet {
    unsigned n = 0;
    int digits = 30;
    std::string rhs_text;
    std::optional<RationalAngle> rhs_angle;  // recognized sin-form angle of b
    std::vector<Solution> solutions;         // ascending by value
    int positive_count = 0;
    int zero_count = 0;
    int negative_count = 0;
    int smallest_positive_index = -1;  // index into solutions, -1 if none
};

// Recognize a value as 2sin(t*pi) for a reduced t = p/q with q <= max_q.
// Returns the smallest-denominator angle whose sine value is rigorously
// within the confirmation window (10^-45 for radical inputs, 10^-d for a
// d-digit decimal); nullopt when no candidate certifies.
// Errors: Range if |value| > 2 rigorously.
std::optional<RationalAngle> recognize_radical(const RadicalPtr& value, long long max_q);
std::optional<RationalAngle> recognize_decimal(const PrecisionDecimal& value, long long max_q);

// All n solutions of V_n(x) = b via the angle parametrization
// x_k = 2cos(((t0 + 2k)/n) * pi), b = 2cos(t0 * pi).  Each solution carries
// its angle, a radical when constructible, and a certified decimal; every
// residual |V_n(x_k) - b| is certified < 10^-digits.  |b| = 2 degenerates to
// interior double roots (multiplicities sum to n).
// Errors: Invalid (n out of 1..512), Range (digits, or |b| > 2),
// Recognition (rhs not a recognizable 2sin value).
SolutionSet solve(unsigned n, const RadicalPtr& rhs, int digits, long long max_q = 4096);

// Same solution set for a decimal right-hand side, decimals only.  A rhs that
// is recognizably exact takes the angle path internally; otherwise t0 comes
// from certified bisection of the monotone cosine parametrization.
SolutionSet solve_numeric(unsigned n, const PrecisionDecimal& rhs, int digits);

// Reconstruction and audit of one of the four historical challenge examples
// ("1", "2", "3", "main").  pass == false only for example "2", whose printed
// right-hand side does not match its claimed solution; the report then
// carries the 19-digit reference values for the mismatch, the alternative
// reading, and the corrected right-hand side that the claimed solution does
// solve.
struct AuditReport {
    std::string example;
    bool pass = false;
    std::string equation;  // human-readable statement of the challenge
    std::string rhs_text;
    PrecisionDecimal rhs_value;
    std::string claimed_text;
    PrecisionDecimal claimed_value;
    std::optional<RationalAngle> solution_angle;
    std::string solution_radical;  // empty when not constructible
    PrecisionDecimal solution_value;
    std::string classification;
    unsigned long long polygon_sides = 0;
    // example "2" diagnostics (19-digit reference precision)
    std::optional<PrecisionDecimal> lhs_at_claimed;
    std::string alternative_text;
    std::optional<PrecisionDecimal> alternative_value;
    std::optional<bool> alternative_matches;
    std::string corrected_text;
    std::optional<RationalAngle> corrected_angle;
    std::optional<bool> corrected_confirmed;
    std::vector<std::string> notes;
};

AuditReport verify_romanus(const std::string& example, int digits = 30);

// The five-unknown New Year system: A, B, C, D in radicals with angles
// pi/120, pi/24, pi/8, 3pi/8; E = 2sin(pi/600) as a certified decimal (>= 21
// digits so the classical 10^-16 target is visibly exceeded).  Residuals of
// all five equations are certified below 10^(2-digits).
struct GiftComponent {
    char name = '?';
    RationalAngle angle;
    RadicalPtr radical;  // null for E
    PrecisionDecimal value;
};

struct GiftSolution {
    int digits = 18;
    std::vector<GiftComponent> components;  // A, B, C, D, E
    std::vector<std::string> equations;     // the five defining relations
    std::vector<std::string> residual_bounds;  // certified "<= 1e-k" per equation
};

GiftSolution solve_gift(int digits = 18);

}  // namespace romanus
