#include "poly.hpp"

#include <cassert>

namespace romanus {

namespace {
const mpz_class kZero = 0;
}

Polynomial::Polynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
    normalize();
}

void Polynomial::normalize() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Polynomial Polynomial::x() {
    return Polynomial({0, 1});
}

Polynomial Polynomial::constant(const mpz_class& c) {
    return Polynomial({c});
}

const mpz_class& Polynomial::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : kZero;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), mpz_class(0));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), mpz_class(0));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    std::vector<mpz_class> r(c_.size() + o.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const mpz_class& s) const {
    std::vector<mpz_class> r = c_;
    for (auto& c : r) c *= s;
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-() const {
    return *this * mpz_class(-1);
}

Polynomial chebyshev_t(unsigned n) {
    Polynomial prev = Polynomial::constant(1);  // T_0
    if (n == 0) return prev;
    Polynomial cur = Polynomial::x();  // T_1
    for (unsigned k = 1; k < n; ++k) {
        Polynomial next = cur * mpz_class(2);
        // multiply by x: shift coefficients up one power
        std::vector<mpz_class> shifted(next.coeffs().size() + 1, mpz_class(0));
        for (std::size_t i = 0; i < next.coeffs().size(); ++i) shifted[i + 1] = next.coeffs()[i];
        next = Polynomial(std::move(shifted)) - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Polynomial monic_cheb(unsigned n) {
    Polynomial prev = Polynomial::constant(2);  // V_0
    if (n == 0) return prev;
    Polynomial cur = Polynomial::x();  // V_1
    for (unsigned k = 1; k < n; ++k) {
        std::vector<mpz_class> shifted(cur.coeffs().size() + 1, mpz_class(0));
        for (std::size_t i = 0; i < cur.coeffs().size(); ++i) shifted[i + 1] = cur.coeffs()[i];
        Polynomial next = Polynomial(std::move(shifted)) - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Polynomial compose(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero()) return Polynomial();
    Polynomial r = Polynomial::constant(p.coeff(p.degree()));
    for (std::size_t i = p.degree(); i-- > 0;) {
        r = r * q + Polynomial::constant(p.coeff(i));
    }
    return r;
}

mpq_class eval_exact(const Polynomial& p, const mpq_class& r) {
    mpq_class acc = 0;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        acc = acc * r + mpq_class(p.coeffs()[i]);
    }
    return acc;
}

DyadicInterval eval_interval(const Polynomial& p, const DyadicInterval& x, long prec) {
    DyadicInterval acc = DyadicInterval::from_long(0, prec);
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        acc = add(mul(acc, x, prec), DyadicInterval::from_mpz(p.coeffs()[i], prec), prec);
    }
    return acc;
}

}  // namespace romanus
