#include "eiscurve/bernoulli.hpp"

#include "eiscurve/error.hpp"
#include "eiscurve/series.hpp"

#include <mutex>
#include <vector>

namespace eiscurve {

namespace {

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_cache = {Rational(1), Rational(-1, 2)};

void check_primitive(const DirichletCharacter& psi) {
    if (!psi.is_primitive())
        throw Error(ErrorCode::argument, "gen_bernoulli: character must be primitive");
}

}  // namespace

Rational bernoulli_number(long k) {
    if (k < 0) throw Error(ErrorCode::argument, "bernoulli_number: k must be >= 0");
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    while (static_cast<long>(bernoulli_cache.size()) <= k) {
        // sum_{j<=n} C(n+1, j) B_j = 0 for n >= 1
        long n = static_cast<long>(bernoulli_cache.size());
        Rational acc(0);
        for (long j = 0; j < n; ++j)
            acc += Rational(binomial(n + 1, j)) * bernoulli_cache[j];
        bernoulli_cache.push_back(-acc / Rational(n + 1));
    }
    return bernoulli_cache[k];
}

poly::Poly bernoulli_polynomial(long k) {
    // B_k(X) = sum_j C(k, j) B_j X^(k-j)
    poly::Poly out(k + 1, Rational(0));
    for (long j = 0; j <= k; ++j)
        out[k - j] = Rational(binomial(k, j)) * bernoulli_number(j);
    return poly::trimmed(std::move(out));
}

BernoulliValue gen_bernoulli(long k, const DirichletCharacter& psi) {
    if (k < 0) throw Error(ErrorCode::argument, "gen_bernoulli: k must be >= 0");
    check_primitive(psi);
    long conductor = psi.modulus();
    poly::Poly bk = bernoulli_polynomial(k);
    CyclotomicNumber acc;
    for (long a = 1; a <= conductor; ++a) {
        CyclotomicNumber value = psi(a);
        if (value.is_zero()) continue;
        // evaluate B_k at a/R
        Rational x(a, conductor);
        Rational b(0);
        for (long i = poly::degree(bk); i >= 0; --i) b = b * x + bk[i];
        acc += b * value;
    }
    return {k, psi, pow_rational(Rational(conductor), k - 1) * acc};
}

BernoulliValue gen_bernoulli_oracle(long k, const DirichletCharacter& psi) {
    if (k < 0) throw Error(ErrorCode::argument, "gen_bernoulli_oracle: k must be >= 0");
    check_primitive(psi);
    long conductor = psi.modulus();
    long prec = k + 1;
    // (e^(Rx) - 1)/x = sum_{n>=0} R^(n+1) x^n / (n+1)!
    TruncatedSeries<Rational> denom(prec);
    Rational term(conductor);
    denom.set(0, term);
    for (long n = 1; n < prec; ++n) {
        term *= conductor;
        term /= n + 1;
        denom.set(n, term);
    }
    TruncatedSeries<Rational> kernel = denom.inverse();
    CyclotomicNumber acc;
    for (long a = 1; a <= conductor; ++a) {
        CyclotomicNumber value = psi(a);
        if (value.is_zero()) continue;
        TruncatedSeries<Rational> contribution = exp_series(Rational(a), prec) * kernel;
        acc += Rational(contribution[k]) * value;
    }
    return {k, psi, Rational(factorial(k)) * acc};
}

}  // namespace eiscurve
