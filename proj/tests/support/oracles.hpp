#pragma once

// Shared reference values for the test suites.
//
// The decimal strings were computed with an independent arbitrary-precision
// package (mpmath, 80-digit working precision, round half away from zero) and
// frozen here, so none of the expectations below are produced by the library
// under test.  The pi reference is additionally re-derived in-process from a
// Machin arctangent series in exact rational arithmetic (machin_pi_bounds),
// and the degree-45 coefficient table is typed from the historical
// transcription rather than generated.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

// ---------------------------------------------------------------- rationals

// 10^k as an exact rational, k may be negative.
inline mpq_class pow10q(long k) {
    mpz_class p = 1;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k < 0 ? -k : k));
    return k < 0 ? mpq_class(1, p) : mpq_class(p);
}

// Exact rational value of a plain fixed-point decimal string.
inline mpq_class parse_decimal_q(const std::string& s) {
    bool neg = false;
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
    mpz_class scaled = 0;
    long frac = 0;
    bool in_frac = false;
    for (; i < s.size(); ++i) {
        if (s[i] == '.') {
            in_frac = true;
            continue;
        }
        scaled = scaled * 10 + (s[i] - '0');
        if (in_frac) ++frac;
    }
    mpq_class v = mpq_class(scaled) / pow10q(frac);
    return neg ? mpq_class(-v) : v;
}

// ------------------------------------------------- Machin series pi oracle

// Brackets of arctan(1/x) from the alternating Taylor series: consecutive
// partial sums enclose the limit.
inline std::pair<mpq_class, mpq_class> atan_inv_bounds(long x, int terms) {
    mpq_class sum = 0;
    mpq_class prev = 0;
    mpq_class power(1, x);  // (1/x)^(2k+1)
    mpq_class x2(1, x);
    x2 *= mpq_class(1, x);
    for (int k = 0; k <= terms; ++k) {
        prev = sum;
        mpq_class term = power / (2 * k + 1);
        if (k % 2 == 0)
            sum += term;
        else
            sum -= term;
        power *= x2;
    }
    if (sum < prev) return {sum, prev};
    return {prev, sum};
}

// pi = 16 arctan(1/5) - 4 arctan(1/239), bracketed rigorously.  The default
// term counts give a bracket width far below 10^-50.
inline std::pair<mpq_class, mpq_class> machin_pi_bounds(int terms5 = 42, int terms239 = 14) {
    auto a = atan_inv_bounds(5, terms5);
    auto b = atan_inv_bounds(239, terms239);
    return {16 * a.first - 4 * b.second, 16 * a.second - 4 * b.first};
}

// ------------------------------------------------------------ fixed values

// pi to 40 fractional digits (committed fixture, checked against
// machin_pi_bounds in the acceptance run).
inline constexpr const char* kPiRef40 = "3.1415926535897932384626433832795028841972";

// Certified evaluation reference points.
inline constexpr const char* kSqrt2D20 = "1.41421356237309504880";
inline constexpr const char* kSqrt3D30 = "1.732050807568877293527446341506";
inline constexpr const char* kTwoCosPi8D20 = "1.84775906502257351226";

// The 1593 challenge: right-hand sides and roots.
inline constexpr const char* kEx1RhsD30 = "1.990369453344393772489673906219";    // 2cos(pi/32)
inline constexpr const char* kEx1RootD30 = "0.065438165643552284127319852635";   // 2sin(pi/96)
inline constexpr const char* kEx3RootD30 = "0.052353896615746305221223371108";   // 2sin(pi/120)
inline constexpr const char* kMainRhsD30 = "0.415823381635518674203484568810";   // 2sin(pi/15)
inline constexpr const char* kMainRootD30 = "0.009308389071322324827845407363";  // 2sin(pi/675)

// Example-2 audit constants at the historical 19-digit precision.
inline constexpr const char* kEx2LhsAtClaimedD19 = "1.3431179096940368013";
inline constexpr const char* kEx2RhsD19 = "1.7401739822174228373";
inline constexpr const char* kEx2AlternativeD19 = "1.3790810894741338492";
inline constexpr const char* kEx2CorrectedD30 = "1.343117909694036801250753700855";
inline constexpr const char* kEx2RootD30 = "0.032723463252973563285943846968";  // 2sin(pi/192)

// New Year system decimals.
inline constexpr const char* kGiftE_D21 = "0.010471927662839160188";            // 2sin(pi/600)
inline constexpr const char* kGiftE_D30 = "0.010471927662839160187520636333";
inline constexpr const char* kGiftB_D30 = "0.261052384440103183096812455791";   // 2sin(pi/24)
inline constexpr const char* kGiftC_D30 = "0.765366864730179543456919968061";   // 2sin(pi/8)
inline constexpr const char* kGiftD_D30 = "1.847759065022573512256366378794";   // 2cos(pi/8)

// Polygon perimeters (unit circumradius).
inline constexpr const char* kPerim4D20 = "5.65685424949238019521";
inline constexpr const char* kPerim96D30 = "6.282063901781019276222705852919";
inline constexpr const char* kPiApprox96D20 = "3.14103195089050963811";
inline constexpr const char* kHalfPerim393216D25 = "3.1415926535563709636628233";

// Special-angle chords at 40 digits.
inline constexpr const char* kTwoCosPi15D40 =
    "1.9562952014676112758571334957391990649195";
inline constexpr const char* kTwoCos2Pi15D40 =
    "1.8270909152852017910042551439706343558816";
inline constexpr const char* kTwoCosPi5D40 =
    "1.6180339887498948482045868343656381177203";

// --------------------------------------------- degree-45 chord polynomial

// The 23 printed (exponent, coefficient) pairs of the degree-45 chord
// polynomial, typed from the historical transcription.
inline const std::vector<std::pair<unsigned, const char*>>& fig1_terms() {
    static const std::vector<std::pair<unsigned, const char*>> terms = {
        {1, "45"},           {3, "-3795"},        {5, "95634"},
        {7, "-1138500"},     {9, "7811375"},      {11, "-34512075"},
        {13, "105306075"},   {15, "-232676280"},  {17, "384942375"},
        {19, "-488494125"},  {21, "483841800"},   {23, "-378658800"},
        {25, "236030652"},   {27, "-117679100"},  {29, "46955700"},
        {31, "-14945040"},   {33, "3764565"},     {35, "-740259"},
        {37, "111150"},      {39, "-12300"},      {41, "945"},
        {43, "-45"},         {45, "1"},
    };
    return terms;
}

// The same transcription as notation-dialect fixtures.
inline std::string fig1_stevin() {
    std::string out;
    for (const auto& [e, c] : fig1_terms()) {
        std::string coeff = c;
        bool neg = coeff[0] == '-';
        if (neg) coeff = coeff.substr(1);
        if (out.empty())
            out = coeff;
        else
            out += (neg ? " - " : " + ") + coeff;
        out += "(" + std::to_string(e) + ")";
    }
    return out;
}

// ------------------------------------------------ 1593 challenge fixtures

inline constexpr const char* kEx1Rhs = "sqrt(2+sqrt(2+sqrt(2+sqrt(2))))";
inline constexpr const char* kEx1Claimed = "sqrt(2-sqrt(2+sqrt(2+sqrt(2+sqrt(3)))))";
inline constexpr const char* kEx2Rhs = "sqrt(2+sqrt(2-sqrt(2-sqrt(2-sqrt(2-sqrt(2))))))";
inline constexpr const char* kEx2Claimed =
    "sqrt(2-sqrt(2+sqrt(2+sqrt(2+sqrt(2+sqrt(3))))))";
inline constexpr const char* kEx2Alternative =
    "sqrt(2-sqrt(2-sqrt(2+sqrt(2+sqrt(2+sqrt(2))))))";
inline constexpr const char* kEx2Corrected = "sqrt(2-sqrt(2-sqrt(2+sqrt(2+sqrt(2)))))";
inline constexpr const char* kEx3Rhs = "sqrt(2+sqrt(2))";
inline constexpr const char* kEx3Claimed =
    "sqrt(2-sqrt(2+sqrt(3/16)+sqrt(15/16)+sqrt(5/8-sqrt(5/64))))";
inline constexpr const char* kMainRhs = "sqrt(7/4-sqrt(5/16)-sqrt(15/8-sqrt(45/64)))";

// New Year system radicals as printed in the historical source.
inline constexpr const char* kGiftA =
    "sqrt(2-sqrt(2+sqrt(3/16)+sqrt(15/16)+sqrt(5/8-sqrt(5/64))))";
inline constexpr const char* kGiftB = "sqrt(2-sqrt(2+sqrt(3)))";
inline constexpr const char* kGiftC = "sqrt(2-sqrt(2))";
inline constexpr const char* kGiftD = "sqrt(2+sqrt(2))";

}  // namespace oracle
