#include "decimal.hpp"

#include <cassert>
#include <cctype>

#include "error.hpp"

namespace romanus {

namespace {

// round(num/den) half away from zero, den > 0.
mpz_class round_half_away(const mpz_class& num, const mpz_class& den) {
    mpz_class twice = 2 * abs(num) + den;  // 2|num| + den
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), mpz_class(2 * den).get_mpz_t());
    return sgn(num) < 0 ? mpz_class(-q) : q;
}

}  // namespace

PrecisionDecimal PrecisionDecimal::from_interval(const DyadicInterval& iv, int digits) {
    assert(digits >= 0);
    // The enclosure must be narrow enough that rounding its midpoint cannot
    // stray more than 10^-digits from the true value.
    assert(iv.width_at_most_pow10(digits + 2));
    // midpoint = (lo+hi) / 2^(prec+1); scaled = round(mid * 10^digits)
    mpz_class num = (iv.lo_scaled() + iv.hi_scaled()) * pow10_mpz(digits);
    mpz_class den = mpz_class(1) << (iv.prec() + 1);
    return PrecisionDecimal(round_half_away(num, den), digits);
}

PrecisionDecimal PrecisionDecimal::from_mpq(const mpq_class& v, int digits) {
    assert(digits >= 0);
    mpz_class num = v.get_num() * pow10_mpz(digits);
    return PrecisionDecimal(round_half_away(num, v.get_den()), digits);
}

PrecisionDecimal PrecisionDecimal::parse(const std::string& text) {
    size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        neg = text[i] == '-';
        ++i;
    }
    std::string ipart, fpart;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        ipart += text[i++];
    }
    if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            fpart += text[i++];
        }
        if (fpart.empty()) {
            throw Error(ErrorCode::Syntax, "expected digits after decimal point")
                .with_offset(static_cast<long long>(i))
                .with_expected({"DIGIT"});
        }
    }
    if (ipart.empty()) {
        throw Error(ErrorCode::Syntax, "expected a decimal number")
            .with_offset(static_cast<long long>(i))
            .with_expected({"DIGIT"});
    }
    if (i != text.size()) {
        throw Error(ErrorCode::Syntax, "trailing characters after decimal number")
            .with_offset(static_cast<long long>(i))
            .with_expected({"END"});
    }
    mpz_class scaled(ipart + fpart, 10);
    if (neg) scaled = -scaled;
    return PrecisionDecimal(std::move(scaled), static_cast<int>(fpart.size()));
}

mpq_class PrecisionDecimal::value() const {
    mpq_class v(scaled_);
    v /= mpq_class(pow10_mpz(digits_));
    return v;
}

std::string PrecisionDecimal::str() const {
    mpz_class a = abs(scaled_);
    std::string s = a.get_str();
    if (static_cast<int>(s.size()) <= digits_) {
        s.insert(0, static_cast<size_t>(digits_) + 1 - s.size(), '0');
    }
    std::string out;
    if (sgn(scaled_) < 0) out += '-';
    out += s.substr(0, s.size() - static_cast<size_t>(digits_));
    if (digits_ > 0) {
        out += '.';
        out += s.substr(s.size() - static_cast<size_t>(digits_));
    }
    return out;
}

}  // namespace romanus
