#include "eiscurve/poly.hpp"

#include "eiscurve/error.hpp"

namespace eiscurve::poly {

Poly trimmed(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

long degree(const Poly& p) {
    return static_cast<long>(p.size()) - 1;
}

Poly add(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return trimmed(std::move(out));
}

Poly sub(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return trimmed(std::move(out));
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return trimmed(std::move(out));
}

Poly scale(const Poly& a, const Rational& c) {
    if (c == 0) return {};
    Poly out = a;
    for (auto& x : out) x *= c;
    return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.empty()) throw Error(ErrorCode::argument, "polynomial division by zero");
    Poly rem = a;
    long db = degree(b);
    if (degree(a) < db) return {{}, trimmed(std::move(rem))};
    Poly quot(a.size() - b.size() + 1, Rational(0));
    const Rational& lead = b.back();
    for (long i = degree(rem); i >= db; --i) {
        if (static_cast<std::size_t>(i) >= rem.size() || rem[i] == 0) continue;
        Rational c = rem[i] / lead;
        quot[i - db] = c;
        for (long j = 0; j <= db; ++j) rem[i - db + j] -= c * b[j];
    }
    return {trimmed(std::move(quot)), trimmed(std::move(rem))};
}

Xgcd xgcd(const Poly& a, const Poly& b) {
    Poly r0 = trimmed(a), r1 = trimmed(b);
    Poly u0 = {Rational(1)}, u1 = {};
    Poly v0 = {}, v1 = {Rational(1)};
    while (!r1.empty()) {
        auto [q, r2] = divmod(r0, r1);
        Poly u2 = sub(u0, mul(q, u1));
        Poly v2 = sub(v0, mul(q, v1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (!r0.empty() && r0.back() != 1) {
        Rational lead = r0.back();
        r0 = scale(r0, Rational(1) / lead);
        u0 = scale(u0, Rational(1) / lead);
        v0 = scale(v0, Rational(1) / lead);
    }
    return {std::move(r0), std::move(u0), std::move(v0)};
}

Poly substitute_power(const Poly& p, long k) {
    if (k < 1) throw Error(ErrorCode::argument, "substitute_power: k must be positive");
    if (p.empty()) return {};
    Poly out((p.size() - 1) * k + 1, Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i) out[i * k] = p[i];
    return trimmed(std::move(out));
}

}  // namespace eiscurve::poly
