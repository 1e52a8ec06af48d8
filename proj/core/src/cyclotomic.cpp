#include "eiscurve/cyclotomic.hpp"

#include "eiscurve/error.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace eiscurve {

namespace {

std::mutex cyclo_cache_mutex;
std::map<long, poly::Poly> cyclo_cache;

poly::Poly compute_cyclotomic(long m) {
    // x^m - 1 divided by the product of Phi_d over proper divisors d of m
    poly::Poly xm_minus_1(m + 1, Rational(0));
    xm_minus_1[0] = -1;
    xm_minus_1[m] = 1;
    poly::Poly acc = {Rational(1)};
    for (long d : divisors(m)) {
        if (d == m) continue;
        acc = poly::mul(acc, cyclotomic_polynomial(d));
    }
    auto [quot, rem] = poly::divmod(xm_minus_1, acc);
    if (!rem.empty())
        throw Error(ErrorCode::argument, "cyclotomic polynomial division left a remainder");
    return quot;
}

}  // namespace

const poly::Poly& cyclotomic_polynomial(long m) {
    if (m < 1) throw Error(ErrorCode::argument, "cyclotomic_polynomial: order must be >= 1");
    {
        std::lock_guard<std::mutex> lock(cyclo_cache_mutex);
        auto it = cyclo_cache.find(m);
        if (it != cyclo_cache.end()) return it->second;
    }
    // Fill outside the lock so the recursion does not deadlock; insertion is
    // idempotent, a racing thread computes the same polynomial.
    poly::Poly value = m == 1 ? poly::Poly{Rational(-1), Rational(1)} : compute_cyclotomic(m);
    std::lock_guard<std::mutex> lock(cyclo_cache_mutex);
    return cyclo_cache.emplace(m, std::move(value)).first->second;
}

CyclotomicNumber::CyclotomicNumber(long order, std::vector<Rational> raw_coeffs) {
    if (order < 1) throw Error(ErrorCode::argument, "cyclotomic order must be >= 1");
    order_ = order;
    const poly::Poly& phi = cyclotomic_polynomial(order);
    poly::Poly rem = poly::divmod(poly::trimmed(std::move(raw_coeffs)), phi).second;
    rem.resize(phi.size() - 1, Rational(0));
    coeffs_ = std::move(rem);
}

CyclotomicNumber CyclotomicNumber::root_of_unity(long m, long k) {
    if (m < 1) throw Error(ErrorCode::argument, "root_of_unity: order must be >= 1");
    k %= m;
    if (k < 0) k += m;
    std::vector<Rational> raw(k + 1, Rational(0));
    raw[k] = 1;
    return CyclotomicNumber(m, std::move(raw));
}

bool CyclotomicNumber::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CyclotomicNumber::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational CyclotomicNumber::rational_value() const {
    if (!is_rational())
        throw Error(ErrorCode::argument, "cyclotomic value is not rational");
    return coeffs_[0];
}

CyclotomicNumber CyclotomicNumber::embedded(long new_order) const {
    if (new_order == order_) return *this;
    if (new_order % order_ != 0)
        throw Error(ErrorCode::argument, "embedded: order must be a multiple of the current order");
    // zeta_m = zeta_L^(L/m): substitute x -> x^(L/m) and reduce mod Phi_L
    return CyclotomicNumber(new_order,
                            poly::substitute_power(poly::trimmed(coeffs_), new_order / order_));
}

namespace {

long lcm_order(long a, long b) {
    return std::lcm(a, b);
}

}  // namespace

CyclotomicNumber CyclotomicNumber::operator-() const {
    CyclotomicNumber out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    long m = lcm_order(a.order(), b.order());
    CyclotomicNumber ea = a.embedded(m), eb = b.embedded(m);
    for (std::size_t i = 0; i < ea.coeffs_.size(); ++i) ea.coeffs_[i] += eb.coeffs_[i];
    return ea;
}

CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return a + (-b);
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    long m = lcm_order(a.order(), b.order());
    CyclotomicNumber ea = a.embedded(m), eb = b.embedded(m);
    return CyclotomicNumber(m, poly::mul(poly::trimmed(ea.coeffs_), poly::trimmed(eb.coeffs_)));
}

CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return a * b.inverse();
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.order() == b.order()) return a.coeffs_ == b.coeffs_;
    long m = lcm_order(a.order(), b.order());
    return a.embedded(m).coeffs_ == b.embedded(m).coeffs_;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
    if (is_zero()) throw Error(ErrorCode::argument, "cyclotomic inverse of zero");
    if (is_rational()) return CyclotomicNumber(Rational(1) / coeffs_[0]);
    // Phi_m is irreducible over Q, so xgcd(a, Phi_m) = 1 = u*a + v*Phi_m.
    auto res = poly::xgcd(poly::trimmed(coeffs_), cyclotomic_polynomial(order_));
    if (poly::degree(res.g) != 0)
        throw Error(ErrorCode::argument, "cyclotomic inverse: unexpected gcd");
    return CyclotomicNumber(order_, poly::scale(res.u, Rational(1) / res.g[0]));
}

CyclotomicNumber CyclotomicNumber::pow(long e) const {
    CyclotomicNumber base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
    CyclotomicNumber result = one();
    while (n > 0) {
        if (n & 1) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

std::string CyclotomicNumber::to_string() const {
    if (is_rational()) return rational_to_string(coeffs_[0]);
    std::ostringstream os;
    os << "zeta" << order_ << "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ",";
        os << rational_to_string(coeffs_[i]);
    }
    os << "]";
    return os.str();
}

}  // namespace eiscurve
