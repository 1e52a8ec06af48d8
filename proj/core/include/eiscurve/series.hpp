#pragma once

#include "eiscurve/error.hpp"
#include "eiscurve/numtheory.hpp"

#include <vector>

namespace eiscurve {

// Truncated formal power series with exact coefficients, indices 0..prec-1.
// Binary operations truncate to the minimum precision of the operands and
// never fabricate coefficients beyond it. Mixing coefficient domains is a
// compile-time type error; the JSON layer rejects mixed payloads instead.
template <typename T>
class TruncatedSeries {
  public:
    explicit TruncatedSeries(long prec) : coeffs_(checked(prec), T()) {}
    explicit TruncatedSeries(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
        checked(static_cast<long>(coeffs_.size()));
    }

    long precision() const { return static_cast<long>(coeffs_.size()); }

    const T& operator[](long i) const { return coeffs_.at(i); }
    void set(long i, T value) { coeffs_.at(i) = std::move(value); }

    const std::vector<T>& coeffs() const { return coeffs_; }

    TruncatedSeries truncated(long new_prec) const {
        if (new_prec < 1 || new_prec > precision())
            throw Error(ErrorCode::precision, "truncated: precision out of range");
        return TruncatedSeries(std::vector<T>(coeffs_.begin(), coeffs_.begin() + new_prec));
    }

    friend TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) {
        long n = std::min(f.precision(), g.precision());
        TruncatedSeries out(n);
        for (long i = 0; i < n; ++i) out.coeffs_[i] = f.coeffs_[i] + g.coeffs_[i];
        return out;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g) {
        long n = std::min(f.precision(), g.precision());
        TruncatedSeries out(n);
        for (long i = 0; i < n; ++i) out.coeffs_[i] = f.coeffs_[i] - g.coeffs_[i];
        return out;
    }

    // Cauchy product up to min(f.prec, g.prec).
    friend TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) {
        long n = std::min(f.precision(), g.precision());
        TruncatedSeries out(n);
        for (long i = 0; i < n; ++i) {
            if (f.coeffs_[i] == T()) continue;
            for (long j = 0; i + j < n; ++j) {
                if (g.coeffs_[j] == T()) continue;
                out.coeffs_[i + j] += f.coeffs_[i] * g.coeffs_[j];
            }
        }
        return out;
    }

    TruncatedSeries scaled(const T& c) const {
        TruncatedSeries out(precision());
        for (long i = 0; i < precision(); ++i) out.coeffs_[i] = coeffs_[i] * c;
        return out;
    }

    // Multiplicative inverse; requires an invertible constant term.
    TruncatedSeries inverse() const {
        if (coeffs_[0] == T())
            throw Error(ErrorCode::argument, "series inverse: constant term is zero");
        TruncatedSeries out(precision());
        T c0_inv = T(1) / coeffs_[0];
        out.coeffs_[0] = c0_inv;
        for (long n = 1; n < precision(); ++n) {
            T acc{};
            for (long k = 1; k <= n; ++k) acc += coeffs_[k] * out.coeffs_[n - k];
            out.coeffs_[n] = -(c0_inv * acc);
        }
        return out;
    }

    friend bool operator==(const TruncatedSeries& f, const TruncatedSeries& g) {
        return f.coeffs_ == g.coeffs_;
    }

  private:
    static long checked(long prec) {
        if (prec < 1) throw Error(ErrorCode::argument, "series precision must be >= 1");
        return prec;
    }

    std::vector<T> coeffs_;
};

// Exponential series of c*x: coefficients c^n/n! for n < prec.
inline TruncatedSeries<Rational> exp_series(const Rational& c, long prec) {
    if (prec < 1) throw Error(ErrorCode::argument, "exp_series: precision must be >= 1");
    TruncatedSeries<Rational> out(prec);
    Rational term(1);
    out.set(0, term);
    for (long n = 1; n < prec; ++n) {
        term *= c;
        term /= n;
        out.set(n, term);
    }
    return out;
}

}  // namespace eiscurve
