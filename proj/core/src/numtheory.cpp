#include "eiscurve/numtheory.hpp"

#include "eiscurve/error.hpp"

#include <algorithm>
#include <cctype>

namespace eiscurve {

Integer pow_integer(const Integer& base, long exp) {
    if (exp < 0) throw Error(ErrorCode::argument, "pow_integer: negative exponent");
    Integer result = 1;
    Integer b = base;
    long e = exp;
    while (e > 0) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

Rational pow_rational(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    if (base == 0) {
        if (exp < 0) throw Error(ErrorCode::argument, "pow_rational: zero base, negative exponent");
        return Rational(0);
    }
    bool invert = exp < 0;
    long e = invert ? -exp : exp;
    Rational result(pow_integer(numerator(base), e), pow_integer(denominator(base), e));
    if (invert) result = Rational(1) / result;
    return result;
}

long valuation(const Integer& n, long p) {
    if (n == 0) throw Error(ErrorCode::argument, "valuation of zero");
    Integer m = abs(n);
    long v = 0;
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return v;
}

long valuation(const Rational& r, long p) {
    if (r == 0) throw Error(ErrorCode::argument, "valuation of zero");
    return valuation(numerator(r), p) - valuation(denominator(r), p);
}

bool p_integral(const Rational& r, long p) {
    if (r == 0) return true;
    return denominator(r) % p != 0;
}

Integer mod_p_power(const Rational& r, const Integer& m, long p) {
    if (!p_integral(r, p)) throw Error(ErrorCode::argument, "mod_p_power: not p-integral");
    Integer num = numerator(r) % m;
    if (num < 0) num += m;
    Integer den = denominator(r) % m;
    return (num * mod_inverse(den, m)) % m;
}

Integer mod_inverse(const Integer& a, const Integer& m) {
    // extended Euclid
    Integer r0 = m, r1 = ((a % m) + m) % m;
    Integer t0 = 0, t1 = 1;
    while (r1 != 0) {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        Integer t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1) throw Error(ErrorCode::argument, "mod_inverse: not invertible");
    return ((t0 % m) + m) % m;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<long> primes_upto(long bound) {
    std::vector<long> out;
    for (long n = 2; n <= bound; ++n)
        if (is_prime(n)) out.push_back(n);
    return out;
}

std::vector<std::pair<long, int>> factorize(long n) {
    if (n < 1) throw Error(ErrorCode::argument, "factorize: positive integers only");
    std::vector<std::pair<long, int>> out;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            out.emplace_back(d, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

long euler_phi(long n) {
    long result = n;
    for (auto [p, e] : factorize(n)) result = result / p * (p - 1);
    return result;
}

std::vector<long> divisors(long n) {
    std::vector<long> out;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Integer binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Integer result = 1;
    for (long i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;
    }
    return result;
}

Integer factorial(long n) {
    Integer result = 1;
    for (long i = 2; i <= n; ++i) result *= i;
    return result;
}

std::string rational_to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

Rational rational_from_string(const std::string& s) {
    auto malformed = [&]() -> Error {
        return Error(ErrorCode::argument, "malformed rational \"" + s + "\"");
    };
    if (s.empty()) throw malformed();
    std::size_t i = 0;
    bool negative = false;
    if (s[i] == '-') {
        negative = true;
        ++i;
    }
    std::size_t num_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == num_start) throw malformed();
    Integer num(s.substr(num_start, i - num_start));
    Integer den = 1;
    if (i < s.size()) {
        if (s[i] != '/') throw malformed();
        ++i;
        std::size_t den_start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == den_start || i != s.size()) throw malformed();
        den = Integer(s.substr(den_start));
        if (den == 0) throw malformed();
    }
    if (negative) num = -num;
    return Rational(num, den);
}

}  // namespace eiscurve
