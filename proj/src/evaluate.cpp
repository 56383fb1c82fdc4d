#include "evaluate.hpp"

#include <cassert>
#include <string>
#include <vector>

#include "error.hpp"

namespace romanus {

namespace {

// Signals "the interval straddles zero where a sign is needed; raise the
// working precision and try again".  Caught by the refinement loops below.
struct RetryPrecision {
    std::string path;
};

std::string render_path(const std::vector<int>& path) {
    if (path.empty()) return "/";
    std::string s;
    for (int i : path) {
        s += '/';
        s += std::to_string(i);
    }
    return s;
}

class Pass {
  public:
    explicit Pass(long prec) : prec_(prec) {}

    DyadicInterval run(const RadicalExpr& e) { return eval(e); }

  private:
    DyadicInterval eval(const RadicalExpr& e) {
        switch (e.kind()) {
            case RadKind::Literal:
                return DyadicInterval::from_mpq(e.literal(), prec_);
            case RadKind::Sqrt: {
                DyadicInterval c = eval_child(e, 0);
                DyadicInterval out;
                switch (sqrt(c, prec_, out)) {
                    case DyadicInterval::DomainStatus::Ok:
                        return out;
                    case DyadicInterval::DomainStatus::BadCertain:
                        throw Error(ErrorCode::Domain,
                                    "square root of a negative quantity")
                            .with_path(render_path(path_));
                    case DyadicInterval::DomainStatus::Straddles:
                        throw RetryPrecision{render_path(path_)};
                }
                return out;  // unreachable
            }
            case RadKind::Sum: {
                DyadicInterval acc = eval_child(e, 0);
                for (std::size_t i = 1; i < e.children().size(); ++i) {
                    DyadicInterval c = eval_child(e, i);
                    acc = e.signs()[i] > 0 ? add(acc, c, prec_) : sub(acc, c, prec_);
                }
                return acc;
            }
            case RadKind::Product: {
                DyadicInterval acc = eval_child(e, 0);
                for (std::size_t i = 1; i < e.children().size(); ++i) {
                    acc = mul(acc, eval_child(e, i), prec_);
                }
                return acc;
            }
            case RadKind::Quotient: {
                DyadicInterval num = eval_child(e, 0);
                DyadicInterval den = eval_child(e, 1);
                DyadicInterval out;
                switch (div(num, den, prec_, out)) {
                    case DyadicInterval::DomainStatus::Ok:
                        return out;
                    case DyadicInterval::DomainStatus::BadCertain:
                        throw Error(ErrorCode::DivisionByZero, "division by zero")
                            .with_path(render_path(path_));
                    case DyadicInterval::DomainStatus::Straddles:
                        throw RetryPrecision{render_path(path_)};
                }
                return out;  // unreachable
            }
        }
        return DyadicInterval();  // unreachable
    }

    DyadicInterval eval_child(const RadicalExpr& e, std::size_t i) {
        path_.push_back(static_cast<int>(i));
        DyadicInterval r = eval(*e.children()[i]);
        path_.pop_back();
        return r;
    }

    long prec_;
    std::vector<int> path_;
};

constexpr int kMaxRounds = 10;
constexpr double kBitsPerDigit = 3.3220;  // log2(10), rounded up a hair

}  // namespace

bool eval_at_precision(const RadicalPtr& e, long prec_bits, DyadicInterval& out) {
    assert(e);
    try {
        out = Pass(prec_bits).run(*e);
        return true;
    } catch (const RetryPrecision&) {
        return false;
    }
}

DyadicInterval eval_to_pow10_width(const RadicalPtr& e, long pow10) {
    assert(e);
    // Guard digits beyond the target: a base allowance plus two digits per
    // tree level to absorb outward rounding through nested radicals.
    long guard_digits = pow10 + 10 + 2 * static_cast<long>(e->depth());
    long prec = static_cast<long>(static_cast<double>(guard_digits) * kBitsPerDigit) + 8;
    std::string last_straddle_path;
    for (int round = 0; round < kMaxRounds; ++round, prec *= 2) {
        try {
            DyadicInterval r = Pass(prec).run(*e);
            if (r.width_at_most_pow10(pow10)) return r;
        } catch (const RetryPrecision& rp) {
            last_straddle_path = rp.path;
        }
    }
    if (!last_straddle_path.empty()) {
        throw Error(ErrorCode::UndecidableSign,
                    "sign of a radicand or denominator could not be decided at the "
                    "precision cap")
            .with_path(last_straddle_path);
    }
    throw Error(ErrorCode::Internal, "interval failed to narrow to the requested width");
}

PrecisionDecimal evaluate(const RadicalPtr& e, int digits) {
    assert(digits >= 1);
    DyadicInterval iv = eval_to_pow10_width(e, digits + 4);
    return PrecisionDecimal::from_interval(iv, digits);
}

bool numeric_equal(const RadicalPtr& a, const RadicalPtr& b, int digits) {
    assert(digits >= 1);
    mpq_class threshold(1);
    threshold /= mpq_class(pow10_mpz(digits));
    for (int round = 0; round < 5; ++round) {
        long k = digits + 5 + 6 * round;
        DyadicInterval ia = eval_to_pow10_width(a, k);
        DyadicInterval ib = eval_to_pow10_width(b, k);
        long p = std::max(ia.prec(), ib.prec());
        DyadicInterval d = sub(ia, ib, p);
        // |d| certainly < threshold?
        if (d.max_abs() < threshold) return true;
        // |d| certainly >= threshold?
        if (d.lo() >= threshold || d.hi() <= -threshold) return false;
    }
    throw Error(ErrorCode::UndecidableSign,
                "difference sits at the comparison threshold; cannot certify either way");
}

}  // namespace romanus
