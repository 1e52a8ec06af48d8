#pragma once

#include "eiscurve/numtheory.hpp"
#include "eiscurve/poly.hpp"

#include <string>
#include <vector>

namespace eiscurve {

// m-th cyclotomic polynomial, monic of degree phi(m). Computed by recursive
// exact division of x^m - 1 by the lower cyclotomic polynomials and cached
// per order (idempotent, thread-safe fill).
const poly::Poly& cyclotomic_polynomial(long m);

// Element of the cyclotomic field Q(zeta_m), stored in the power basis
// 1, zeta, ..., zeta^(phi(m)-1) reduced modulo the m-th cyclotomic
// polynomial. Values are immutable after construction; operations between
// different orders embed both sides into the field of order lcm.
class CyclotomicNumber {
  public:
    CyclotomicNumber() : order_(1), coeffs_{Rational(0)} {}
    explicit CyclotomicNumber(const Rational& r) : order_(1), coeffs_{r} {}
    explicit CyclotomicNumber(long n) : order_(1), coeffs_{Rational(n)} {}

    // Canonical representative of a raw polynomial in zeta_m of any degree.
    CyclotomicNumber(long order, std::vector<Rational> raw_coeffs);

    static CyclotomicNumber zero() { return CyclotomicNumber(); }
    static CyclotomicNumber one() { return CyclotomicNumber(Rational(1)); }
    static CyclotomicNumber root_of_unity(long m, long k);

    long order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const { return *this == one(); }
    bool is_rational() const;
    // The rational an is_rational() value represents; throws otherwise.
    Rational rational_value() const;

    // Representative in the field of order new_order; order() must divide it.
    CyclotomicNumber embedded(long new_order) const;

    CyclotomicNumber operator-() const;
    friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
    // Field division; divisor must be nonzero.
    friend CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        return !(a == b);
    }

    CyclotomicNumber& operator+=(const CyclotomicNumber& b) { return *this = *this + b; }
    CyclotomicNumber& operator-=(const CyclotomicNumber& b) { return *this = *this - b; }
    CyclotomicNumber& operator*=(const CyclotomicNumber& b) { return *this = *this * b; }

    CyclotomicNumber inverse() const;
    CyclotomicNumber pow(long e) const;  // negative exponents allowed on nonzero values

    std::string to_string() const;

  private:
    long order_;
    std::vector<Rational> coeffs_;  // length phi(order_)
};

inline CyclotomicNumber operator*(const Rational& c, const CyclotomicNumber& x) {
    return CyclotomicNumber(c) * x;
}

}  // namespace eiscurve
