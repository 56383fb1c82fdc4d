#pragma once

#include <gmpxx.h>

#include <string>

#include "interval.hpp"

namespace romanus {

// A decimal rendered with exactly `digits` fractional digits, carrying the
// contract |true value - printed value| <= 10^-digits.  Produced only from a
// certifying interval: the interval must already be narrower than
// 10^-(digits+2) (callers target 10^-(digits+4)), then the exact midpoint is
// rounded half-away-from-zero to `digits` places — the convention the
// classical reference tables follow.
class PrecisionDecimal {
  public:
    PrecisionDecimal() : scaled_(0), digits_(0) {}

    // Round the midpoint of a sufficiently narrow enclosure.
    static PrecisionDecimal from_interval(const DyadicInterval& iv, int digits);
    // Round an exact rational (no enclosure needed).
    static PrecisionDecimal from_mpq(const mpq_class& v, int digits);
    // Parse a plain fixed-point decimal ("-2", "1.25", "0.010471...").  The
    // digit count is taken from the text.  Throws Error(Syntax).
    static PrecisionDecimal parse(const std::string& text);

    int digits() const { return digits_; }
    // The printed value as an exact rational: scaled / 10^digits.
    mpq_class value() const;
    const mpz_class& scaled() const { return scaled_; }
    std::string str() const;

    bool operator==(const PrecisionDecimal& o) const = default;

  private:
    PrecisionDecimal(mpz_class scaled, int digits)
        : scaled_(std::move(scaled)), digits_(digits) {}

    mpz_class scaled_;  // value * 10^digits, an integer
    int digits_;
};

}  // namespace romanus
