#include "interval.hpp"

#include <algorithm>
#include <cassert>

namespace romanus {

namespace {

// v * 2^e with directed rounding: exact when e >= 0, floor/ceil otherwise.
mpz_class shift_floor(const mpz_class& v, long e) {
    mpz_class r;
    if (e >= 0) {
        mpz_mul_2exp(r.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    } else {
        mpz_fdiv_q_2exp(r.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    }
    return r;
}

mpz_class shift_ceil(const mpz_class& v, long e) {
    mpz_class r;
    if (e >= 0) {
        mpz_mul_2exp(r.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    } else {
        mpz_cdiv_q_2exp(r.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    }
    return r;
}

mpz_class fdiv(const mpz_class& n, const mpz_class& d) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

mpz_class cdiv(const mpz_class& n, const mpz_class& d) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

mpz_class isqrt_floor(const mpz_class& v) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r;
}

mpz_class isqrt_ceil(const mpz_class& v) {
    mpz_class r, rem;
    mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t());
    if (sgn(rem) != 0) r += 1;
    return r;
}

}  // namespace

mpz_class pow10_mpz(long k) {
    assert(k >= 0);
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(k));
    return r;
}

DyadicInterval::DyadicInterval(mpz_class lo, mpz_class hi, long prec)
    : lo_(std::move(lo)), hi_(std::move(hi)), prec_(prec) {
    assert(prec_ >= 0);
    assert(lo_ <= hi_);
}

DyadicInterval DyadicInterval::from_long(long v, long prec) {
    return from_mpz(mpz_class(v), prec);
}

DyadicInterval DyadicInterval::from_mpz(const mpz_class& v, long prec) {
    mpz_class s = shift_floor(v, prec);
    return DyadicInterval(s, s, prec);
}

DyadicInterval DyadicInterval::from_mpq(const mpq_class& q, long prec) {
    mpz_class num = q.get_num();
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(prec));
    const mpz_class& den = q.get_den();
    return DyadicInterval(fdiv(num, den), cdiv(num, den), prec);
}

DyadicInterval DyadicInterval::hull(const DyadicInterval& a, const DyadicInterval& b) {
    long p = std::max(a.prec_, b.prec_);
    DyadicInterval ra = a.rescaled(p), rb = b.rescaled(p);
    return DyadicInterval(std::min(ra.lo_, rb.lo_), std::max(ra.hi_, rb.hi_), p);
}

mpq_class DyadicInterval::lo() const {
    mpq_class r(lo_);
    r /= mpq_class(mpz_class(1) << prec_);
    return r;
}

mpq_class DyadicInterval::hi() const {
    mpq_class r(hi_);
    r /= mpq_class(mpz_class(1) << prec_);
    return r;
}

mpq_class DyadicInterval::mid() const {
    mpq_class r(lo_ + hi_);
    r /= mpq_class(mpz_class(1) << (prec_ + 1));
    return r;
}

mpq_class DyadicInterval::width() const {
    mpq_class r(hi_ - lo_);
    r /= mpq_class(mpz_class(1) << prec_);
    return r;
}

bool DyadicInterval::width_at_most_pow10(long k) const {
    // (hi-lo) * 2^-prec <= 10^-k   <=>   (hi-lo) * 10^k <= 2^prec
    assert(k >= 0);
    mpz_class lhs = (hi_ - lo_) * pow10_mpz(k);
    return lhs <= (mpz_class(1) << prec_);
}

bool DyadicInterval::abs_at_most(const mpq_class& bound) const {
    return max_abs() <= bound;
}

mpq_class DyadicInterval::max_abs() const {
    mpz_class m = std::max(mpz_class(abs(lo_)), mpz_class(abs(hi_)));
    mpq_class r(m);
    r /= mpq_class(mpz_class(1) << prec_);
    return r;
}

DyadicInterval DyadicInterval::rescaled(long prec) const {
    if (prec == prec_) return *this;
    long e = prec - prec_;
    return DyadicInterval(shift_floor(lo_, e), shift_ceil(hi_, e), prec);
}

DyadicInterval DyadicInterval::negated() const {
    return DyadicInterval(-hi_, -lo_, prec_);
}

DyadicInterval DyadicInterval::scaled_by(const mpz_class& m) const {
    if (sgn(m) >= 0) return DyadicInterval(lo_ * m, hi_ * m, prec_);
    return DyadicInterval(hi_ * m, lo_ * m, prec_);
}

DyadicInterval add(const DyadicInterval& a, const DyadicInterval& b, long prec) {
    long p = std::max(a.prec_, b.prec_);
    DyadicInterval ra = a.rescaled(p), rb = b.rescaled(p);
    return DyadicInterval(ra.lo_ + rb.lo_, ra.hi_ + rb.hi_, p).rescaled(prec);
}

DyadicInterval sub(const DyadicInterval& a, const DyadicInterval& b, long prec) {
    return add(a, b.negated(), prec);
}

DyadicInterval mul(const DyadicInterval& a, const DyadicInterval& b, long prec) {
    // Product endpoints at scale a.prec + b.prec are exact; only the final
    // re-expression rounds.
    mpz_class c1 = a.lo_ * b.lo_, c2 = a.lo_ * b.hi_, c3 = a.hi_ * b.lo_, c4 = a.hi_ * b.hi_;
    mpz_class lo = std::min(std::min(c1, c2), std::min(c3, c4));
    mpz_class hi = std::max(std::max(c1, c2), std::max(c3, c4));
    return DyadicInterval(std::move(lo), std::move(hi), a.prec_ + b.prec_).rescaled(prec);
}

DyadicInterval::DomainStatus div(const DyadicInterval& a, const DyadicInterval& b, long prec,
                                 DyadicInterval& out) {
    if (b.contains_zero()) {
        return b.is_point() ? DyadicInterval::DomainStatus::BadCertain
                            : DyadicInterval::DomainStatus::Straddles;
    }
    // (x * 2^-pa) / (y * 2^-pb) at scale prec: x * 2^(prec+pb-pa) / y.
    long e = prec + b.prec_ - a.prec_;
    auto quot_floor = [&](const mpz_class& x, const mpz_class& y) {
        if (e >= 0) return fdiv(x << e, y);
        return fdiv(x, y << -e);
    };
    auto quot_ceil = [&](const mpz_class& x, const mpz_class& y) {
        if (e >= 0) return cdiv(x << e, y);
        return cdiv(x, y << -e);
    };
    mpz_class lo, hi;
    bool first = true;
    for (const mpz_class* x : {&a.lo_, &a.hi_}) {
        for (const mpz_class* y : {&b.lo_, &b.hi_}) {
            mpz_class f = quot_floor(*x, *y);
            mpz_class c = quot_ceil(*x, *y);
            if (first) {
                lo = f;
                hi = c;
                first = false;
            } else {
                lo = std::min(lo, f);
                hi = std::max(hi, c);
            }
        }
    }
    out = DyadicInterval(std::move(lo), std::move(hi), prec);
    return DyadicInterval::DomainStatus::Ok;
}

DyadicInterval::DomainStatus sqrt(const DyadicInterval& a, long prec, DyadicInterval& out) {
    if (a.certainly_negative()) return DyadicInterval::DomainStatus::BadCertain;
    if (sgn(a.lo_) < 0) return DyadicInterval::DomainStatus::Straddles;
    out = sqrt_nonneg(a, prec);
    return DyadicInterval::DomainStatus::Ok;
}

DyadicInterval sqrt_nonneg(const DyadicInterval& a, long prec) {
    // sqrt(v * 2^-pa) at scale prec = sqrt(v * 2^(2*prec - pa)).
    DyadicInterval src = a;
    long e = 2 * prec - src.prec_;
    if (e < 0) {
        src = src.rescaled(2 * prec);  // exact only when widening; make e == 0
        e = 0;
    }
    mpz_class rlo = sgn(src.lo_) <= 0 ? mpz_class(0) : isqrt_floor(src.lo_ << e);
    mpz_class rhi = sgn(src.hi_) <= 0 ? mpz_class(0) : isqrt_ceil(src.hi_ << e);
    return DyadicInterval(std::move(rlo), std::move(rhi), prec);
}

bool certainly_less(const DyadicInterval& a, const DyadicInterval& b) {
    // a.hi * 2^-pa < b.lo * 2^-pb, cross-multiplied exactly.
    long p = std::max(a.prec_, b.prec_);
    mpz_class ah = shift_ceil(a.hi_, p - a.prec_);
    mpz_class bl = shift_floor(b.lo_, p - b.prec_);
    return ah < bl;
}

}  // namespace romanus
