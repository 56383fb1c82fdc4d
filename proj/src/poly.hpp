#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "interval.hpp"

namespace romanus {

// Dense univariate polynomial with exact integer coefficients, ascending
// powers.  Normalized: no trailing zero coefficients; the zero polynomial is
// the empty coefficient vector with degree() == 0.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<mpz_class> coeffs);

    static Polynomial x();
    static Polynomial constant(const mpz_class& c);

    bool is_zero() const { return c_.empty(); }
    std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
    // Coefficient of x^i (zero beyond the degree).
    const mpz_class& coeff(std::size_t i) const;
    const std::vector<mpz_class>& coeffs() const { return c_; }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const mpz_class& s) const;
    Polynomial operator-() const;
    bool operator==(const Polynomial& o) const = default;

  private:
    void normalize();
    std::vector<mpz_class> c_;
};

// Chebyshev polynomial of the first kind: T_n(cos t) = cos(n t).
// T_0 = 1, T_1 = x, T_{n+1} = 2x T_n - T_{n-1}.
Polynomial chebyshev_t(unsigned n);

// Monic integer variant V_n(x) = 2 T_n(x/2), satisfying V_n(z + 1/z) = z^n + 1/z^n:
// V_0 = 2, V_1 = x, V_{n+1} = x V_n - V_{n-1}.  V_n(2 cos t) = 2 cos(n t).
Polynomial monic_cheb(unsigned n);

// p(q(x)) with exact coefficients (Horner over polynomials).
Polynomial compose(const Polynomial& p, const Polynomial& q);

// Exact evaluation at a rational point.
mpq_class eval_exact(const Polynomial& p, const mpq_class& r);

// Interval evaluation (Horner) for residual certification.
DyadicInterval eval_interval(const Polynomial& p, const DyadicInterval& x, long prec);

}  // namespace romanus
