#include "angles.hpp"

#include <cassert>
#include <map>
#include <utility>

#include "error.hpp"
#include "evaluate.hpp"

namespace romanus {

namespace {

constexpr long long kAngleLimit = 1000000000000000LL;  // 10^15

mpq_class mpq_of(long long n, long long d) {
    mpq_class q{mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d))};
    q.canonicalize();
    return q;
}

// Reduce t modulo 2 into [0, 2).
mpq_class mod_two(mpq_class t) {
    mpz_class twice_den = 2 * t.get_den();
    mpz_class num = t.get_num();
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), twice_den.get_mpz_t());
    mpq_class out(r, t.get_den());
    out.canonicalize();
    return out;
}

unsigned long long odd_part(unsigned long long n) {
    while (n % 2 == 0) n /= 2;
    return n;
}

bool base_denominator(const mpz_class& den) {
    return den == 1 || den == 2 || den == 3 || den == 5 || den == 15;
}

// --- exact base values: 2cos(k*pi/m) for m in {1, 2, 3, 5, 15} -------------

RadicalPtr lit(long v) { return RadicalExpr::make_literal(v); }
RadicalPtr lit(const mpq_class& v) { return RadicalExpr::make_literal(v); }

RadicalPtr sum2(RadicalPtr a, int sb, RadicalPtr b) {
    return RadicalExpr::make_sum({std::move(a), std::move(b)}, {+1, sb});
}

const std::map<std::pair<long, long>, RadicalPtr>& base_table() {
    static const std::map<std::pair<long, long>, RadicalPtr> table = [] {
        std::map<std::pair<long, long>, RadicalPtr> t;
        auto Q = [](RadicalPtr n, long d) {
            return RadicalExpr::make_quotient(std::move(n), lit(d));
        };
        RadicalPtr r5 = RadicalExpr::make_sqrt(lit(5));
        RadicalPtr r3 = RadicalExpr::make_sqrt(lit(3));
        // sqrt(10 + 2*sqrt(5)) = 4 sin(2pi/5), sqrt(10 - 2*sqrt(5)) = 4 sin(pi/5)
        RadicalPtr sp = RadicalExpr::make_sqrt(
            sum2(lit(10), +1, RadicalExpr::make_product({lit(2), r5})));
        RadicalPtr sm = RadicalExpr::make_sqrt(
            sum2(lit(10), -1, RadicalExpr::make_product({lit(2), r5})));

        t[{0, 1}] = lit(2);    // 2cos(0)
        t[{1, 1}] = lit(-2);   // 2cos(pi)
        t[{1, 2}] = lit(0);    // 2cos(pi/2)
        t[{1, 3}] = lit(1);    // 2cos(pi/3)
        t[{2, 3}] = lit(-1);   // 2cos(2pi/3)
        t[{1, 5}] = Q(sum2(lit(1), +1, r5), 2);   // (1+sqrt(5))/2
        t[{2, 5}] = Q(sum2(r5, -1, lit(1)), 2);   // (sqrt(5)-1)/2
        t[{3, 5}] = Q(sum2(lit(1), -1, r5), 2);   // (1-sqrt(5))/2
        t[{4, 5}] = Q(sum2(lit(-1), -1, r5), 2);  // -(1+sqrt(5))/2

        // k/15 via the angle differences pi/15 = 2pi/5 - pi/3,
        // 2pi/15 = pi/3 - pi/5, 4pi/15 = 3pi/5 - pi/3, 7pi/15 = 4pi/5 - pi/3:
        // 2cos(A - pi/3) = cos(A) + sqrt(3) sin(A).
        auto diff = [&](RadicalPtr cosA, RadicalPtr fourSinA) {
            // cos(A) + sqrt(3) * (4 sin(A)) / 4
            return sum2(std::move(cosA), +1,
                        Q(RadicalExpr::make_product({r3, std::move(fourSinA)}), 4));
        };
        t[{1, 15}] = diff(Q(sum2(r5, -1, lit(1)), 4), sp);    // cos72 + r3 sin72
        t[{2, 15}] = diff(Q(sum2(lit(1), +1, r5), 4), sm);    // cos36 + r3 sin36... (A=pi/3-...)
        t[{4, 15}] = diff(Q(sum2(lit(1), -1, r5), 4), sp);    // cos108 + r3 sin108
        t[{7, 15}] = diff(Q(sum2(lit(-1), -1, r5), 4), sm);   // cos144 + r3 sin144
        t[{8, 15}] = negate(t[{7, 15}]);
        t[{11, 15}] = negate(t[{4, 15}]);
        t[{13, 15}] = negate(t[{2, 15}]);
        t[{14, 15}] = negate(t[{1, 15}]);
        return t;
    }();
    return table;
}

RadicalPtr base_expr(const mpq_class& t) {
    auto it = base_table().find({t.get_num().get_si(), t.get_den().get_si()});
    assert(it != base_table().end());
    return it->second;
}

// --- sum builders with literal folding and flattening -----------------------

// If e is manifestly negative (a negative literal, or a product/quotient led
// by one), return its positive counterpart; nullptr otherwise.
RadicalPtr strip_negative(const RadicalPtr& e) {
    switch (e->kind()) {
        case RadKind::Literal:
            if (sgn(e->literal()) < 0) return lit(mpq_class(-e->literal()));
            return nullptr;
        case RadKind::Product: {
            const auto& ch = e->children();
            if (ch[0]->kind() == RadKind::Literal && sgn(ch[0]->literal()) < 0) {
                return negate(e);
            }
            return nullptr;
        }
        case RadKind::Quotient: {
            RadicalPtr n = strip_negative(e->children()[0]);
            if (n) return RadicalExpr::make_quotient(std::move(n), e->children()[1]);
            return nullptr;
        }
        default:
            return nullptr;
    }
}

// Build "2 + e" / "2 - e" as one flat Sum, the shape the classical tables print.
RadicalPtr two_plus(const RadicalPtr& e) {
    if (e->kind() == RadKind::Literal) return lit(mpq_class(2 + e->literal()));
    if (e->kind() == RadKind::Sum) {
        std::vector<RadicalPtr> ch;
        std::vector<int> sg;
        ch.push_back(lit(2));
        sg.push_back(+1);
        ch.insert(ch.end(), e->children().begin(), e->children().end());
        sg.insert(sg.end(), e->signs().begin(), e->signs().end());
        return RadicalExpr::make_sum(std::move(ch), std::move(sg));
    }
    if (RadicalPtr pos = strip_negative(e)) return sum2(lit(2), -1, std::move(pos));
    return sum2(lit(2), +1, e);
}

RadicalPtr two_minus(const RadicalPtr& e) {
    if (e->kind() == RadKind::Literal) return lit(mpq_class(2 - e->literal()));
    if (e->kind() == RadKind::Sum) {
        std::vector<RadicalPtr> ch;
        std::vector<int> sg;
        ch.push_back(lit(2));
        sg.push_back(+1);
        ch.insert(ch.end(), e->children().begin(), e->children().end());
        for (int s : e->signs()) sg.push_back(-s);
        return RadicalExpr::make_sum(std::move(ch), std::move(sg));
    }
    if (RadicalPtr pos = strip_negative(e)) return sum2(lit(2), +1, std::move(pos));
    return sum2(lit(2), -1, e);
}

// sqrt(e), collapsing a literal perfect square (sqrt(4) -> 2).
RadicalPtr sqrt_or_fold(const RadicalPtr& e) {
    if (e->kind() == RadKind::Literal && sgn(e->literal()) >= 0) {
        const mpq_class& v = e->literal();
        if (mpz_perfect_square_p(v.get_num().get_mpz_t()) &&
            mpz_perfect_square_p(v.get_den().get_mpz_t())) {
            mpz_class rn, rd;
            mpz_sqrt(rn.get_mpz_t(), v.get_num().get_mpz_t());
            mpz_sqrt(rd.get_mpz_t(), v.get_den().get_mpz_t());
            mpq_class r(rn, rd);
            r.canonicalize();
            return lit(r);
        }
    }
    return RadicalExpr::make_sqrt(e);
}

// Trace of the angle-halving reduction for 2cos(t*pi), t in [0, 1] with a
// supported denominator: a sequence of supplement (negate) and halving
// (sqrt(2 + .)) steps down to a base-table angle.
struct ChainTrace {
    std::vector<bool> supplement;  // outermost first; false = halving step
    mpq_class base;                // final angle with base denominator
};

ChainTrace trace_chain(mpq_class t) {
    assert(t >= 0 && t <= 1);
    ChainTrace tr;
    while (!base_denominator(t.get_den())) {
        if (t > mpq_class(1, 2)) {
            t = 1 - t;
            tr.supplement.push_back(true);
        } else {
            t *= 2;
            if (t > 1) t = 2 - t;
            tr.supplement.push_back(false);
        }
    }
    tr.base = t;
    return tr;
}

}  // namespace

bool constructible_angle(const mpq_class& t) {
    mpz_class den = t.get_den();
    while (mpz_even_p(den.get_mpz_t())) den /= 2;
    return den == 1 || den == 3 || den == 5 || den == 15;
}

RadicalPtr two_cos_expr(const mpq_class& t) {
    assert(t >= 0 && t <= 1);
    assert(constructible_angle(t));
    ChainTrace tr = trace_chain(t);
    RadicalPtr e = base_expr(tr.base);
    for (auto it = tr.supplement.rbegin(); it != tr.supplement.rend(); ++it) {
        e = *it ? negate(e) : sqrt_or_fold(two_plus(e));
    }
    return e;
}

RadicalPtr two_sin_expr(const mpq_class& t) {
    assert(t >= 0 && t <= mpq_class(1, 2));
    assert(constructible_angle(t));
    if (sgn(t) == 0) return RadicalExpr::make_literal(0);
    // 2sin(x) = sqrt(2 - 2cos(2x)), and 2t <= 1 so no reflection is needed.
    return sqrt_or_fold(two_minus(two_cos_expr(mpq_class(2 * t))));
}

// --- rigorous interval kernel ----------------------------------------------

namespace {

// Evaluate the halving chain for 2cos(t*pi) (constructible t in [0, 1]) in
// interval arithmetic at `bits` working precision.  Returns false if a base
// value straddled a sign decision (retry with more bits).
bool chain_eval(const mpq_class& t, long bits, DyadicInterval& out) {
    ChainTrace tr = trace_chain(t);
    DyadicInterval v;
    if (tr.base.get_den() <= 2) {
        // exact: 2cos(0) = 2, 2cos(pi/2) = 0, 2cos(pi) = -2
        long val = tr.base == 0 ? 2 : (tr.base == 1 ? -2 : 0);
        v = DyadicInterval::from_long(val, bits);
    } else {
        if (!eval_at_precision(base_expr(tr.base), bits, v)) return false;
    }
    DyadicInterval two = DyadicInterval::from_long(2, bits);
    for (auto it = tr.supplement.rbegin(); it != tr.supplement.rend(); ++it) {
        if (*it) {
            v = v.negated();
        } else {
            // radicand 2 + v >= 0 holds mathematically (|2cos| <= 2)
            v = sqrt_nonneg(add(two, v, bits), bits);
        }
    }
    out = v;
    return true;
}

constexpr int kEnclosureRounds = 14;

}  // namespace

DyadicInterval two_cos_enclosure(const mpq_class& t_in, long pow10) {
    assert(pow10 >= 1);
    mpq_class t = mod_two(t_in);
    if (t > 1) t = 2 - t;  // cos(x) = cos(2pi - x)
    long bits = static_cast<long>(static_cast<double>(pow10) * 3.3220) + 48;
    for (int round = 0; round < kEnclosureRounds; ++round, bits *= 2) {
        DyadicInterval r;
        if (constructible_angle(t)) {
            if (!chain_eval(t, bits, r)) continue;
        } else {
            // Bracket between adjacent dyadic angles: cos decreases on [0, pi].
            mpz_class scaled_num = t.get_num() << bits;
            mpz_class lo_num;
            mpz_fdiv_q(lo_num.get_mpz_t(), scaled_num.get_mpz_t(), t.get_den().get_mpz_t());
            mpq_class u(lo_num, mpz_class(1) << bits);
            u.canonicalize();
            mpq_class v = u + mpq_class(mpz_class(1), mpz_class(1) << bits);
            if (v > 1) v = 1;
            DyadicInterval iu, iv;
            if (!chain_eval(u, bits, iu) || !chain_eval(v, bits, iv)) continue;
            r = DyadicInterval::hull(iu, iv);
        }
        if (r.width_at_most_pow10(pow10)) return r;
    }
    throw Error(ErrorCode::Internal, "trig enclosure failed to converge");
}

DyadicInterval two_sin_enclosure(const mpq_class& t_in, long pow10) {
    mpq_class t = mod_two(t_in);
    bool neg = false;
    if (t > 1) {
        t = t - 1;  // sin(x + pi) = -sin(x)
        neg = true;
    }
    if (t > mpq_class(1, 2)) t = 1 - t;  // sin(pi - x) = sin(x)
    DyadicInterval r = two_cos_enclosure(mpq_class(mpq_class(1, 2) - t), pow10);
    return neg ? r.negated() : r;
}

// --- public angle operations ------------------------------------------------

RationalAngle make_angle(long long num, long long den) {
    if (den == 0) throw Error(ErrorCode::Invalid, "angle denominator must be nonzero");
    if (num < -kAngleLimit || num > kAngleLimit || den < -kAngleLimit || den > kAngleLimit) {
        throw Error(ErrorCode::Invalid, "angle numerator/denominator out of range");
    }
    mpq_class t = mod_two(mpq_of(num, den));
    RationalAngle a;
    a.num = t.get_num().get_si();
    a.den = t.get_den().get_si();
    return a;
}

mpq_class angle_to_mpq(const RationalAngle& a) {
    return mpq_of(a.num, a.den);
}

std::string angle_str(const RationalAngle& a) {
    if (a.num == 0) return "0";
    return std::to_string(a.num) + "/" + std::to_string(a.den);
}

const char* constructibility_name(Constructibility c) {
    switch (c) {
        case Constructibility::SquareRootsOnly: return "square-roots-only";
        case Constructibility::NeedsCubic: return "needs-cubic";
        case Constructibility::NeedsQuintic: return "needs-quintic";
        case Constructibility::NeedsCubicAndQuintic: return "needs-cubic-and-quintic";
        case Constructibility::OutOfScope: return "out-of-scope";
    }
    return "?";
}

Constructibility classify(const RationalAngle& a) {
    long long q = a.den;
    int threes = 0, fives = 0;
    while (q % 3 == 0) {
        q /= 3;
        ++threes;
    }
    while (q % 5 == 0) {
        q /= 5;
        ++fives;
    }
    if (odd_part(static_cast<unsigned long long>(q)) != 1) return Constructibility::OutOfScope;
    bool cubic = threes > 1, quintic = fives > 1;
    if (cubic && quintic) return Constructibility::NeedsCubicAndQuintic;
    if (cubic) return Constructibility::NeedsCubic;
    if (quintic) return Constructibility::NeedsQuintic;
    return Constructibility::SquareRootsOnly;
}

RadicalPtr tower(const RationalAngle& a, TrigFunc f) {
    mpq_class t = angle_to_mpq(a);
    if (!(t > 0) || t > mpq_class(1, 2)) {
        throw Error(ErrorCode::Range, "tower angle must lie in (0, pi/2]");
    }
    if (classify(a) != Constructibility::SquareRootsOnly) {
        throw Error(ErrorCode::Unsupported,
                    "angle denominator's odd part must be 1, 3, 5, or 15 for a "
                    "square-root tower");
    }
    RadicalPtr e = f == TrigFunc::Cos ? two_cos_expr(t) : two_sin_expr(t);
    // Internal consistency check: the structural tower must agree with the
    // numeric kernel to 40 digits.
    DyadicInterval direct = f == TrigFunc::Cos ? two_cos_enclosure(t, 44)
                                               : two_sin_enclosure(t, 44);
    DyadicInterval built = eval_to_pow10_width(e, 44);
    long p = std::max(direct.prec(), built.prec());
    mpq_class thr(mpz_class(1), pow10_mpz(40));
    if (!sub(built, direct, p).abs_at_most(thr)) {
        throw Error(ErrorCode::Internal, "tower construction failed self-verification");
    }
    return e;
}

std::optional<RadicalPtr> exact_value(const RationalAngle& a, TrigFunc f) {
    mpq_class t = angle_to_mpq(a);
    if (f == TrigFunc::Sin) {
        t = mod_two(mpq_class(mpq_class(1, 2) - t));  // sin(x) = cos(pi/2 - x)
    }
    if (t > 1) t = 2 - t;
    if (!constructible_angle(t)) return std::nullopt;
    return halve(two_cos_expr(t));
}

std::vector<unsigned long long> factor_chain(unsigned long long n) {
    if (n == 0) throw Error(ErrorCode::Invalid, "composition chain undefined for n = 0");
    std::vector<unsigned long long> out;
    for (unsigned long long f = 2; f * f <= n; ++f) {
        while (n % f == 0) {
            out.push_back(f);
            n /= f;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

PrecisionDecimal polygon_perimeter(unsigned long long n, int digits) {
    if (n < 3) throw Error(ErrorCode::Range, "a polygon needs at least 3 sides");
    if (digits < 1 || digits > 1000) {
        throw Error(ErrorCode::Range, "digits must be between 1 and 1000");
    }
    for (unsigned long long f : factor_chain(odd_part(n))) {
        if (f != 3 && f != 5) {
            throw Error(ErrorCode::Unsupported,
                        "polygon with " + std::to_string(n) +
                            " sides requires the unsupported prime " + std::to_string(f));
        }
    }
    // perimeter = n * (2 sin(pi/n)); scaling by n multiplies the width, so
    // aim proportionally deeper.
    long extra = 1;
    for (unsigned long long m = n; m > 0; m /= 10) ++extra;
    mpz_class nz(static_cast<unsigned long>(n));
    for (int round = 0; round < 6; ++round) {
        DyadicInterval s =
            two_sin_enclosure(mpq_class(mpz_class(1), nz), digits + 4 + extra + 6 * round);
        DyadicInterval per = s.scaled_by(nz);
        if (per.width_at_most_pow10(digits + 4)) return PrecisionDecimal::from_interval(per, digits);
    }
    throw Error(ErrorCode::Internal, "perimeter enclosure failed to converge");
}

PrecisionDecimal pi_approximation(unsigned long long n, int digits) {
    if (n < 3) throw Error(ErrorCode::Range, "a polygon needs at least 3 sides");
    if (digits < 1 || digits > 1000) {
        throw Error(ErrorCode::Range, "digits must be between 1 and 1000");
    }
    for (unsigned long long f : factor_chain(odd_part(n))) {
        if (f != 3 && f != 5) {
            throw Error(ErrorCode::Unsupported,
                        "polygon with " + std::to_string(n) +
                            " sides requires the unsupported prime " + std::to_string(f));
        }
    }
    // n*sin(pi/n) = half the inscribed perimeter; bumping prec by one halves
    // the dyadic value exactly, so the certificate carries over unchanged.
    long extra = 1;
    for (unsigned long long m = n; m > 0; m /= 10) ++extra;
    mpz_class nz(static_cast<unsigned long>(n));
    for (int round = 0; round < 6; ++round) {
        DyadicInterval s =
            two_sin_enclosure(mpq_class(mpz_class(1), nz), digits + 4 + extra + 6 * round);
        DyadicInterval half = s.scaled_by(nz);
        half = DyadicInterval(half.lo_scaled(), half.hi_scaled(), half.prec() + 1);
        if (half.width_at_most_pow10(digits + 4))
            return PrecisionDecimal::from_interval(half, digits);
    }
    throw Error(ErrorCode::Internal, "pi enclosure failed to converge");
}

}  // namespace romanus
