#pragma once

#include "eiscurve/numtheory.hpp"

#include <utility>
#include <vector>

namespace eiscurve::poly {

// Dense univariate polynomial over Rational, coefficient i multiplies x^i.
// The zero polynomial is the empty vector; otherwise coeffs.back() != 0.
using Poly = std::vector<Rational>;

Poly trimmed(Poly p);
long degree(const Poly& p);  // -1 for zero
Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Rational& c);

// Quotient and remainder; divisor must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

// g = gcd(a, b) monic, with u*a + v*b = g.
struct Xgcd {
    Poly g, u, v;
};
Xgcd xgcd(const Poly& a, const Poly& b);

// p(x^k)
Poly substitute_power(const Poly& p, long k);

}  // namespace eiscurve::poly
