#pragma once

#include <gmpxx.h>

#include "error.hpp"

namespace romanus {

// Closed interval [lo, hi] * 2^-prec with integer endpoints and outward
// (directed) rounding on every inexact operation.  This is the engine behind
// every certified decimal the library prints: a result is only rounded to d
// digits once its enclosing interval is narrower than 10^-(d+4).
//
// Invariants: lo <= hi, prec >= 0.  All operations produce results at the
// precision the caller requests; narrowing a scale rounds lo down and hi up,
// so the true value never escapes the interval.
class DyadicInterval {
  public:
    DyadicInterval() : lo_(0), hi_(0), prec_(0) {}
    DyadicInterval(mpz_class lo, mpz_class hi, long prec);

    static DyadicInterval from_long(long v, long prec);
    static DyadicInterval from_mpz(const mpz_class& v, long prec);
    // Tightest enclosure of an exact rational at the given scale.
    static DyadicInterval from_mpq(const mpq_class& q, long prec);
    static DyadicInterval hull(const DyadicInterval& a, const DyadicInterval& b);

    const mpz_class& lo_scaled() const { return lo_; }
    const mpz_class& hi_scaled() const { return hi_; }
    long prec() const { return prec_; }

    mpq_class lo() const;
    mpq_class hi() const;
    mpq_class mid() const;    // exact midpoint (lo+hi)/2 as a rational
    mpq_class width() const;  // hi - lo, exact

    bool is_point() const { return lo_ == hi_; }
    bool contains_zero() const { return sgn(lo_) <= 0 && sgn(hi_) >= 0; }
    bool certainly_negative() const { return sgn(hi_) < 0; }
    bool certainly_positive() const { return sgn(lo_) > 0; }
    bool is_exact_zero() const { return sgn(lo_) == 0 && sgn(hi_) == 0; }

    // width() <= 10^-k, decided exactly.
    bool width_at_most_pow10(long k) const;
    // |v| <= bound for every v in the interval, decided exactly.
    bool abs_at_most(const mpq_class& bound) const;
    // Largest |v| over the interval, exact.
    mpq_class max_abs() const;

    // Re-express at another scale (outward when losing bits, exact when gaining).
    DyadicInterval rescaled(long prec) const;
    DyadicInterval negated() const;
    // Exact scaling by an integer (no rounding).
    DyadicInterval scaled_by(const mpz_class& m) const;

    friend DyadicInterval add(const DyadicInterval& a, const DyadicInterval& b, long prec);
    friend DyadicInterval sub(const DyadicInterval& a, const DyadicInterval& b, long prec);
    friend DyadicInterval mul(const DyadicInterval& a, const DyadicInterval& b, long prec);

    // Division and square root can fail on data, so they report status instead
    // of throwing: the evaluator decides whether a straddle means "refine and
    // retry" or "give up as undecidable".
    enum class DomainStatus {
        Ok,
        BadCertain,  // denominator certainly zero / radicand certainly negative
        Straddles,   // sign not yet decidable at this precision
    };
    friend DomainStatus div(const DyadicInterval& a, const DyadicInterval& b, long prec,
                            DyadicInterval& out);
    friend DomainStatus sqrt(const DyadicInterval& a, long prec, DyadicInterval& out);

    // sqrt for radicands known nonnegative on mathematical grounds: a lower
    // endpoint that dipped below zero by rounding is clamped to zero.
    friend DyadicInterval sqrt_nonneg(const DyadicInterval& a, long prec);

    // a.hi < b.lo, decided exactly across scales.
    friend bool certainly_less(const DyadicInterval& a, const DyadicInterval& b);

  private:
    mpz_class lo_, hi_;
    long prec_;
};

DyadicInterval add(const DyadicInterval& a, const DyadicInterval& b, long prec);
DyadicInterval sub(const DyadicInterval& a, const DyadicInterval& b, long prec);
DyadicInterval mul(const DyadicInterval& a, const DyadicInterval& b, long prec);
DyadicInterval::DomainStatus div(const DyadicInterval& a, const DyadicInterval& b, long prec,
                                 DyadicInterval& out);
DyadicInterval::DomainStatus sqrt(const DyadicInterval& a, long prec, DyadicInterval& out);
DyadicInterval sqrt_nonneg(const DyadicInterval& a, long prec);
bool certainly_less(const DyadicInterval& a, const DyadicInterval& b);

// 10^k as an mpz, k >= 0.
mpz_class pow10_mpz(long k);

}  // namespace romanus
