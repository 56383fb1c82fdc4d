#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "angles.hpp"
#include "decimal.hpp"
#include "doctest.h"
#include "error.hpp"
#include "evaluate.hpp"
#include "interval.hpp"
#include "poly.hpp"
#include "radical.hpp"
#include "solver.hpp"
#include "support/oracles.hpp"

using romanus::DyadicInterval;
using romanus::Error;
using romanus::ErrorCode;
using romanus::make_angle;
using romanus::parse_radical;
using romanus::PrecisionDecimal;
using romanus::RadicalPtr;
using romanus::RationalAngle;
using romanus::SolutionSet;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::Internal;  // sentinel: no throw
}

mpq_class q_of(const PrecisionDecimal& d) { return d.value(); }

// K from a certified bound string "<= 1e-K".
int bound_exponent(const std::string& s) {
    REQUIRE(s.rfind("<= 1e-", 0) == 0);
    return std::stoi(s.substr(6));
}

}  // namespace

TEST_CASE("recognition inverts exact chord values at the smallest denominator") {
    auto rec = [](const char* text) {
        return romanus::recognize_radical(parse_radical(text), 4096);
    };
    CHECK(rec("1") == make_angle(1, 6));
    CHECK(rec("sqrt(2)") == make_angle(1, 4));
    CHECK(rec("2") == make_angle(1, 2));
    CHECK(rec("0") == make_angle(0, 1));
    CHECK(rec("-1") == make_angle(11, 6));
    CHECK(rec("-2") == make_angle(3, 2));
    CHECK(rec(oracle::kMainRhs) == make_angle(1, 15));
    CHECK(rec(oracle::kEx2Corrected) == make_angle(15, 64));
    CHECK(rec(oracle::kEx1Rhs) == make_angle(15, 32));
    // 3/2 is no chord of a rational angle (rational chords are 0, +-1, +-2).
    CHECK(!rec("3/2").has_value());
    CHECK(code_of([] {
              romanus::recognize_radical(parse_radical("5/2"), 4096);
          }) == ErrorCode::Range);
}

TEST_CASE("recognition from decimals matches the printed precision") {
    // 19 printed decimals of 2sin(pi/192) re-identify the angle.
    auto a = romanus::recognize_decimal(PrecisionDecimal::parse("0.0327234632529735633"), 4096);
    CHECK(a == make_angle(1, 192));
    // The full 30-digit right-hand side of the first challenge.
    auto b = romanus::recognize_decimal(PrecisionDecimal::parse(oracle::kEx1RhsD30), 4096);
    CHECK(b == make_angle(15, 32));
    // A round non-chord value finds nothing.
    auto c = romanus::recognize_decimal(
        PrecisionDecimal::parse("0.100000000000000000000000000000"), 4096);
    CHECK(!c.has_value());
}

TEST_CASE("degree one is the identity equation") {
    SolutionSet ss = romanus::solve(1, parse_radical("1"), 20);
    REQUIRE(ss.solutions.size() == 1);
    CHECK(ss.rhs_angle == make_angle(1, 6));
    CHECK(ss.solutions[0].value.str() == "1.00000000000000000000");
    CHECK(ss.solutions[0].multiplicity == 1);
    CHECK(ss.positive_count == 1);
    CHECK(ss.smallest_positive_index == 0);
}

TEST_CASE("zeros of the degree-n chord polynomial") {
    // V_n(x) = 0 has roots exactly 2cos((2j-1)pi/(2n)), j = 1..n.
    const mpq_class tol = mpq_class(1) / oracle::pow10q(29);
    for (unsigned n : {2u, 3u, 4u, 5u, 8u, 16u}) {
        CAPTURE(n);
        SolutionSet ss = romanus::solve(n, parse_radical("0"), 30);
        REQUIRE(ss.solutions.size() == n);
        CHECK(ss.rhs_angle == make_angle(0, 1));

        std::vector<mpq_class> got;
        for (const auto& s : ss.solutions) {
            CHECK(s.multiplicity == 1);
            got.push_back(q_of(s.value));
        }
        CHECK(std::is_sorted(got.begin(), got.end()));

        std::vector<mpq_class> want;
        for (unsigned j = 1; j <= n; ++j)
            want.push_back(romanus::two_cos_enclosure(mpq_class(2 * j - 1, 2 * n), 35).mid());
        std::sort(want.begin(), want.end());
        for (unsigned i = 0; i < n; ++i) {
            CAPTURE(i);
            CHECK(abs(got[i] - want[i]) <= tol);
        }
    }
}

TEST_CASE("boundary right-hand sides collapse to interior double roots") {
    // x^3 - 3x = 2  <=>  (x - 2)(x + 1)^2 = 0.
    SolutionSet s3 = romanus::solve(3, parse_radical("2"), 20);
    REQUIRE(s3.solutions.size() == 2);  // distinct values
    CHECK(s3.solutions[0].value.str() == "-1.00000000000000000000");
    CHECK(s3.solutions[0].multiplicity == 2);
    CHECK(s3.solutions[1].value.str() == "2.00000000000000000000");
    CHECK(s3.solutions[1].multiplicity == 1);
    CHECK(s3.negative_count == 2);  // with multiplicity
    CHECK(s3.positive_count == 1);
    CHECK(s3.zero_count == 0);
    CHECK(s3.smallest_positive_index == 1);
    // x^4 - 4x^2 + 2 = 2  <=>  x^2 (x - 2)(x + 2) = 0.
    SolutionSet s4 = romanus::solve(4, parse_radical("2"), 20);
    REQUIRE(s4.solutions.size() == 3);
    CHECK(s4.solutions[1].value.str() == "0.00000000000000000000");
    CHECK(s4.solutions[1].multiplicity == 2);
    CHECK(s4.zero_count == 2);
    CHECK(s4.positive_count == 1);
    CHECK(s4.negative_count == 1);
    // x^2 - 2 = -2  <=>  x^2 = 0.
    SolutionSet s2 = romanus::solve(2, parse_radical("-2"), 20);
    REQUIRE(s2.solutions.size() == 1);
    CHECK(s2.solutions[0].multiplicity == 2);
    CHECK(s2.zero_count == 2);
    CHECK(s2.smallest_positive_index == -1);
}

TEST_CASE("the first challenge equation, solved exactly") {
    SolutionSet ss = romanus::solve(45, parse_radical(oracle::kEx1Rhs), 30);
    CHECK(ss.rhs_angle == make_angle(15, 32));
    REQUIRE(ss.solutions.size() == 45);
    CHECK(ss.positive_count == 23);
    CHECK(ss.negative_count == 22);
    CHECK(ss.zero_count == 0);
    REQUIRE(ss.smallest_positive_index >= 0);
    const auto& root = ss.solutions[static_cast<std::size_t>(ss.smallest_positive_index)];
    CHECK(root.angle == make_angle(1, 96));
    CHECK(root.value.str() == oracle::kEx1RootD30);
    REQUIRE(root.radical != nullptr);
    CHECK(romanus::numeric_equal(root.radical, parse_radical(oracle::kEx1Claimed), 40));
    // Independent residual certification for that root.
    DyadicInterval x = romanus::two_sin_enclosure(mpq_class(1, 96), 45);
    DyadicInterval lhs = romanus::eval_interval(romanus::monic_cheb(45), x, x.prec() + 16);
    DyadicInterval rhs = romanus::eval_to_pow10_width(parse_radical(oracle::kEx1Rhs), 45);
    DyadicInterval r = romanus::sub(lhs, rhs, std::max(lhs.prec(), rhs.prec()));
    CHECK(r.max_abs() < mpq_class(1) / oracle::pow10q(30));
}

TEST_CASE("a denominator cap below the answer turns recognition off") {
    RadicalPtr corr = parse_radical(oracle::kEx2Corrected);
    CHECK_NOTHROW(romanus::solve(45, corr, 19, 64));
    CHECK(code_of([&] { romanus::solve(45, corr, 19, 63); }) == ErrorCode::Recognition);
}

TEST_CASE("argument validation") {
    RadicalPtr one = parse_radical("1");
    CHECK(code_of([&] { romanus::solve(0, one, 30); }) == ErrorCode::Invalid);
    CHECK(code_of([&] { romanus::solve(513, one, 30); }) == ErrorCode::Invalid);
    CHECK(code_of([&] { romanus::solve(45, one, 0); }) == ErrorCode::Range);
    CHECK(code_of([&] { romanus::solve(45, one, 1001); }) == ErrorCode::Range);
    CHECK(code_of([&] { romanus::solve(45, parse_radical("5/2"), 30); }) == ErrorCode::Range);
    CHECK(code_of([&] { romanus::solve(45, parse_radical("3/2"), 30); }) ==
          ErrorCode::Recognition);
    CHECK(code_of([] {
              romanus::solve_numeric(4, PrecisionDecimal::parse("2.5"), 20);
          }) == ErrorCode::Range);
}

TEST_CASE("numeric solving at the rational chord values takes the exact path") {
    SolutionSet s2 = romanus::solve_numeric(2, PrecisionDecimal::parse("0"), 20);
    REQUIRE(s2.solutions.size() == 2);
    CHECK(s2.solutions[0].value.str() == std::string("-") + oracle::kSqrt2D20);
    CHECK(s2.solutions[1].value.str() == oracle::kSqrt2D20);
    CHECK(s2.rhs_angle == make_angle(0, 1));

    SolutionSet s3 = romanus::solve_numeric(3, PrecisionDecimal::parse("0"), 30);
    REQUIRE(s3.solutions.size() == 3);
    CHECK(s3.solutions[0].value.str() == std::string("-") + oracle::kSqrt3D30);
    CHECK(s3.zero_count == 1);
    CHECK(s3.solutions[2].value.str() == oracle::kSqrt3D30);

    // b = 2 keeps its double root on the numeric entry point too.
    SolutionSet sd = romanus::solve_numeric(3, PrecisionDecimal::parse("2"), 20);
    REQUIRE(sd.solutions.size() == 2);
    CHECK(sd.solutions[0].multiplicity == 2);
}

TEST_CASE("numeric solving of the misprinted challenge line") {
    // The printed right-hand side of the second challenge, taken at face
    // value: 19 decimals, solved numerically.  No root comes anywhere near
    // the chord the source claims, which is the audit finding.
    SolutionSet ss =
        romanus::solve_numeric(45, PrecisionDecimal::parse(oracle::kEx2RhsD19), 30);
    REQUIRE(ss.solutions.size() == 45);
    CHECK(ss.positive_count + ss.negative_count == 45);
    mpq_class claimed = oracle::parse_decimal_q(oracle::kEx2RootD30);
    mpq_class gap = mpq_class(1) / oracle::pow10q(15);
    for (const auto& s : ss.solutions) {
        CHECK(abs(q_of(s.value) - claimed) > gap);
        CHECK(s.multiplicity == 1);
    }
    CHECK(std::is_sorted(ss.solutions.begin(), ss.solutions.end(),
                         [](const auto& a, const auto& b) {
                             return a.value.value() < b.value.value();
                         }));
}

TEST_CASE("root completeness: random constructible right-hand sides") {
    // Exact solve and numeric solve agree root for root, residuals certify
    // independently, and multiplicities always sum to the degree.
    std::vector<long long> denoms;
    for (long long m : {1, 3, 5, 15})
        for (long long q = m; q <= 256; q *= 2)
            if (q >= 3) denoms.push_back(q);

    std::mt19937 rng(45450u);
    std::uniform_int_distribution<std::size_t> pick_q(0, denoms.size() - 1);
    std::uniform_int_distribution<unsigned> pick_n(1, 60);
    const mpq_class res_tol = mpq_class(1) / oracle::pow10q(30);
    const mpq_class pair_tol = mpq_class(1) / oracle::pow10q(25);

    romanus::Polynomial vn_cache[61];
    for (int i = 0; i < 20; ++i) {
        CAPTURE(i);
        long long q = denoms[pick_q(rng)];
        std::uniform_int_distribution<long long> pick_p(1, q / 2);
        long long p = pick_p(rng);
        while (std::gcd(p, q) != 1 || 2 * p == q) p = (p % (q / 2)) + 1;
        CAPTURE(p);
        CAPTURE(q);
        unsigned n = pick_n(rng);
        CAPTURE(n);

        RadicalPtr b = romanus::tower(make_angle(p, q), romanus::TrigFunc::Sin);
        SolutionSet exact = romanus::solve(n, b, 30);
        CHECK(exact.rhs_angle == make_angle(p, q));

        romanus::Polynomial& vn = vn_cache[n];
        if (vn.is_zero()) vn = romanus::monic_cheb(n);
        DyadicInterval benc = romanus::eval_to_pow10_width(b, 40);

        int mult_sum = 0;
        std::vector<mpq_class> exact_vals;
        for (const auto& s : exact.solutions) {
            mult_sum += s.multiplicity;
            exact_vals.push_back(q_of(s.value));
            REQUIRE(s.angle.has_value());
            bool constructible = romanus::constructible_angle(romanus::angle_to_mpq(*s.angle));
            CHECK((s.radical != nullptr) == constructible);
            if (s.radical)
                CHECK(abs(q_of(romanus::evaluate(s.radical, 30)) - q_of(s.value)) <=
                      mpq_class(1) / oracle::pow10q(29));
            // Residual, certified straight from the angle.
            DyadicInterval x =
                romanus::two_sin_enclosure(romanus::angle_to_mpq(*s.angle), 40);
            DyadicInterval lhs = romanus::eval_interval(vn, x, x.prec() + 16);
            DyadicInterval r = romanus::sub(lhs, benc, std::max(lhs.prec(), benc.prec()));
            CHECK(r.max_abs() < res_tol);
        }
        CHECK(mult_sum == static_cast<int>(n));
        CHECK(std::is_sorted(exact_vals.begin(), exact_vals.end()));
        CHECK(std::adjacent_find(exact_vals.begin(), exact_vals.end()) == exact_vals.end());
        CHECK(exact.positive_count + exact.zero_count + exact.negative_count ==
              static_cast<int>(n));

        // The numeric path sees only a 35-digit decimal of b, yet lands on
        // the same roots.  (Exact multiplicities > 1 cannot occur: |b| < 2.)
        SolutionSet numeric =
            romanus::solve_numeric(n, romanus::evaluate(b, 35), 30);
        REQUIRE(numeric.solutions.size() == exact.solutions.size());
        for (std::size_t k = 0; k < exact.solutions.size(); ++k)
            CHECK(abs(q_of(numeric.solutions[k].value) - exact_vals[k]) <= pair_tol);
    }
}

TEST_CASE("audit of the first challenge") {
    romanus::AuditReport rep = romanus::verify_romanus("1");
    CHECK(rep.pass);
    CHECK(rep.example == "1");
    CHECK(rep.rhs_text == oracle::kEx1Rhs);
    CHECK(rep.rhs_value.str() == oracle::kEx1RhsD30);
    CHECK(rep.claimed_text == oracle::kEx1Claimed);
    CHECK(rep.solution_angle == make_angle(1, 96));
    CHECK(rep.solution_value.str() == oracle::kEx1RootD30);
    CHECK(rep.classification == "square-roots-only");
    CHECK(rep.polygon_sides == 96);
    CHECK(!rep.solution_radical.empty());
    CHECK(romanus::numeric_equal(parse_radical(rep.solution_radical),
                                 parse_radical(oracle::kEx1Claimed), 40));
    CHECK(!rep.notes.empty());
    CHECK(!rep.lhs_at_claimed.has_value());  // mismatch diagnostics stay empty
}

TEST_CASE("audit of the third challenge") {
    romanus::AuditReport rep = romanus::verify_romanus("3");
    CHECK(rep.pass);
    CHECK(rep.rhs_text == oracle::kEx3Rhs);
    CHECK(rep.claimed_text == oracle::kEx3Claimed);
    CHECK(rep.solution_angle == make_angle(1, 120));
    CHECK(rep.solution_value.str() == oracle::kEx3RootD30);
    CHECK(rep.polygon_sides == 120);
}

TEST_CASE("audit of the main challenge") {
    romanus::AuditReport rep = romanus::verify_romanus("main");
    CHECK(rep.pass);
    CHECK(rep.rhs_text == oracle::kMainRhs);
    CHECK(rep.rhs_value.str() == oracle::kMainRhsD30);
    CHECK(rep.claimed_text.empty());
    CHECK(rep.solution_angle == make_angle(1, 675));
    CHECK(rep.solution_value.str() == oracle::kMainRootD30);
    CHECK(rep.classification == "needs-cubic-and-quintic");
    CHECK(rep.polygon_sides == 675);
    CHECK(rep.solution_radical.empty());
}

TEST_CASE("audit of the second challenge finds the misprint") {
    romanus::AuditReport rep = romanus::verify_romanus("2", 19);
    CHECK(!rep.pass);
    CHECK(rep.rhs_text == oracle::kEx2Rhs);
    CHECK(rep.rhs_value.str() == oracle::kEx2RhsD19);
    CHECK(rep.claimed_text == oracle::kEx2Claimed);
    CHECK(rep.claimed_value.str() == "0.0327234632529735633");
    REQUIRE(rep.lhs_at_claimed.has_value());
    CHECK(rep.lhs_at_claimed->str() == oracle::kEx2LhsAtClaimedD19);
    CHECK(rep.alternative_text == oracle::kEx2Alternative);
    REQUIRE(rep.alternative_value.has_value());
    CHECK(rep.alternative_value->str() == oracle::kEx2AlternativeD19);
    CHECK(rep.alternative_matches == std::optional<bool>(false));
    CHECK(rep.corrected_text == oracle::kEx2Corrected);
    CHECK(rep.corrected_angle == make_angle(15, 64));
    CHECK(rep.corrected_confirmed == std::optional<bool>(true));
    CHECK(rep.solution_angle == make_angle(1, 192));
    CHECK(rep.classification == "square-roots-only");
    CHECK(rep.polygon_sides == 192);
    CHECK(rep.notes.size() >= 2);

    // At 30 working digits the mismatch diagnostics stay at the classical
    // 19-digit table width while the solution sharpens.
    romanus::AuditReport rep30 = romanus::verify_romanus("2", 30);
    CHECK(rep30.lhs_at_claimed->str() == oracle::kEx2LhsAtClaimedD19);
    CHECK(rep30.solution_value.str() == oracle::kEx2RootD30);
    CHECK(rep30.claimed_value.str() == oracle::kEx2RootD30);  // same chord
}

TEST_CASE("audit argument validation") {
    CHECK(code_of([] { romanus::verify_romanus("4"); }) == ErrorCode::Invalid);
    CHECK(code_of([] { romanus::verify_romanus(""); }) == ErrorCode::Invalid);
    CHECK(code_of([] { romanus::verify_romanus("1", 0); }) == ErrorCode::Range);
    CHECK(code_of([] { romanus::verify_romanus("1", 1001); }) == ErrorCode::Range);
}

TEST_CASE("the five-chord system") {
    romanus::GiftSolution g = romanus::solve_gift(18);
    CHECK(g.digits == 18);
    REQUIRE(g.components.size() == 5);
    const char names[] = {'A', 'B', 'C', 'D', 'E'};
    const RationalAngle angles[] = {make_angle(1, 120), make_angle(1, 24), make_angle(1, 8),
                                    make_angle(3, 8), make_angle(1, 600)};
    for (int i = 0; i < 5; ++i) {
        CAPTURE(i);
        CHECK(g.components[i].name == names[i]);
        CHECK(g.components[i].angle == angles[i]);
        CHECK((g.components[i].radical != nullptr) == (i < 4));
    }
    CHECK(g.components[0].value.str() == "0.052353896615746305");
    CHECK(g.components[1].value.str() == "0.261052384440103183");
    CHECK(g.components[2].value.str() == "0.765366864730179543");
    CHECK(g.components[3].value.str() == "1.847759065022573512");
    // E is always carried past the classical showcase width.
    CHECK(g.components[4].value.str() == oracle::kGiftE_D21);

    CHECK(romanus::numeric_equal(g.components[0].radical, parse_radical(oracle::kGiftA), 40));
    CHECK(romanus::numeric_equal(g.components[1].radical, parse_radical(oracle::kGiftB), 40));
    CHECK(romanus::numeric_equal(g.components[2].radical, parse_radical(oracle::kGiftC), 40));
    CHECK(romanus::numeric_equal(g.components[3].radical, parse_radical(oracle::kGiftD), 40));

    REQUIRE(g.equations.size() == 5);
    CHECK(g.equations[0] == "B = 5*A - 5*A^3 + A^5");
    CHECK(g.equations[1] == "C = 3*B - B^3");
    CHECK(g.equations[2] == "D = 9*B - 30*B^3 + 27*B^5 - 9*B^7 + B^9");
    CHECK(g.equations[3] == "C^2 + D^2 = 4");
    CHECK(g.equations[4] == "A = 5*E - 5*E^3 + E^5");
    REQUIRE(g.residual_bounds.size() == 5);
    for (const std::string& bnd : g.residual_bounds) {
        CAPTURE(bnd);
        CHECK(bound_exponent(bnd) >= 16);
    }

    // Residuals recomputed here, exactly, from the printed decimals.
    mpq_class va = q_of(g.components[0].value), vb = q_of(g.components[1].value),
              vc = q_of(g.components[2].value), vd = q_of(g.components[3].value),
              ve = q_of(g.components[4].value);
    // Explicit return type: letting the compiler deduce the gmpxx expression
    // template here would return references to dead temporaries.
    auto p5 = [](const mpq_class& t) -> mpq_class {
        return 5 * t - 5 * t * t * t + t * t * t * t * t;
    };
    mpq_class res[5] = {p5(va) - vb, 3 * vb - vb * vb * vb - vc,
                        9 * vb - 30 * vb * vb * vb + 27 * vb * vb * vb * vb * vb -
                            9 * vb * vb * vb * vb * vb * vb * vb +
                            vb * vb * vb * vb * vb * vb * vb * vb * vb - vd,
                        vc * vc + vd * vd - 4, p5(ve) - va};
    const mpq_class classical = mpq_class(1) / oracle::pow10q(16);
    for (int i = 0; i < 5; ++i) {
        CAPTURE(i);
        CHECK(abs(res[i]) < classical);
        CHECK(abs(res[i]) < mpq_class(1) / oracle::pow10q(bound_exponent(g.residual_bounds[i])));
    }
}

TEST_CASE("the five-chord system at higher precision") {
    romanus::GiftSolution g = romanus::solve_gift(30);
    CHECK(g.components[4].value.str() == oracle::kGiftE_D30);
    CHECK(g.components[1].value.str() == oracle::kGiftB_D30);
    CHECK(g.components[2].value.str() == oracle::kGiftC_D30);
    CHECK(g.components[3].value.str() == oracle::kGiftD_D30);
    for (const std::string& bnd : g.residual_bounds) CHECK(bound_exponent(bnd) >= 28);
    CHECK(code_of([] { romanus::solve_gift(17); }) == ErrorCode::Range);
    CHECK(code_of([] { romanus::solve_gift(1001); }) == ErrorCode::Range);
}
