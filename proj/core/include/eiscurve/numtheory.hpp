#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>
#include <vector>

namespace eiscurve {

using Integer = boost::multiprecision::cpp_int;

// Exact rational, always in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

Integer pow_integer(const Integer& base, long exp);

// base^exp for possibly negative exp; base must be nonzero when exp < 0.
Rational pow_rational(const Rational& base, long exp);

// p-adic valuation of a nonzero integer.
long valuation(const Integer& n, long p);

// p-adic valuation of a nonzero rational.
long valuation(const Rational& r, long p);

// v_p(r) >= 0, i.e. r lies in Z localized at p. Zero counts as integral.
bool p_integral(const Rational& r, long p);

// Canonical residue in [0, m) of a p-integral rational modulo m = p^k.
Integer mod_p_power(const Rational& r, const Integer& m, long p);

Integer mod_inverse(const Integer& a, const Integer& m);

bool is_prime(long n);
std::vector<long> primes_upto(long bound);
std::vector<std::pair<long, int>> factorize(long n);
long euler_phi(long n);
std::vector<long> divisors(long n);

Integer binomial(long n, long k);
Integer factorial(long n);

// "num/den" in lowest terms; integers print without the "/1".
std::string rational_to_string(const Rational& r);

// Accepts "n", "-n", "n/d", "-n/d" with d > 0; not required to be reduced.
// Throws Error(argument) on malformed input.
Rational rational_from_string(const std::string& s);

}  // namespace eiscurve
