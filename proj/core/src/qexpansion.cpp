#include "eiscurve/qexpansion.hpp"

#include "eiscurve/bernoulli.hpp"
#include "eiscurve/error.hpp"

namespace eiscurve {

QExpansion::QExpansion(TruncatedSeries<CyclotomicNumber> coeffs, long weight,
                       DirichletCharacter chi, DirichletCharacter psi, long level_hint)
    : coeffs_(std::move(coeffs)),
      weight_(weight),
      chi_(std::move(chi)),
      psi_(std::move(psi)),
      level_hint_(level_hint) {
    if (coeffs_.precision() < 2)
        throw Error(ErrorCode::argument, "q-expansion precision must be >= 2");
    if (level_hint_ < 1) throw Error(ErrorCode::argument, "level hint must be positive");
    if (!coeffs_[0].is_zero() && chi_.conductor() > 1)
        throw Error(ErrorCode::argument,
                    "constant term must vanish when chi has conductor > 1");
}

QExpansion eisenstein_series(long k, const DirichletCharacter& chi, const DirichletCharacter& psi,
                             long prec) {
    if (k < 1) throw Error(ErrorCode::argument, "eisenstein_series: weight must be >= 1");
    if (prec < 2) throw Error(ErrorCode::argument, "eisenstein_series: precision must be >= 2");
    if (!chi.is_primitive() || !psi.is_primitive())
        throw Error(ErrorCode::argument, "eisenstein_series: characters must be primitive");
    long l_cond = chi.modulus();
    long r_cond = psi.modulus();
    if (k == 2 && l_cond == 1 && r_cond == 1)
        throw Error(ErrorCode::use_e2,
                    "E_{2,1,1} is not a modular form; use e2_series and stabilize");
    if (chi.parity() * psi.parity() != (k % 2 == 0 ? 1 : -1))
        throw Error(ErrorCode::parity, "eisenstein_series: chi(-1)psi(-1) != (-1)^k");

    TruncatedSeries<CyclotomicNumber> coeffs(prec);
    if (l_cond == 1) {
        CyclotomicNumber b = gen_bernoulli(k, psi).value;
        coeffs.set(0, -(Rational(1, 2 * k) * b));
    }
    // value tables; characters are periodic mod their conductor
    std::vector<CyclotomicNumber> chi_table(l_cond), psi_table(r_cond);
    for (long i = 0; i < l_cond; ++i) chi_table[i] = chi(i);
    for (long i = 0; i < r_cond; ++i) psi_table[i] = psi(i);
    for (long n = 1; n < prec; ++n) {
        const CyclotomicNumber& pv = psi_table[n % r_cond];
        if (pv.is_zero()) continue;
        Rational npow(pow_integer(Integer(n), k - 1));
        for (long m = n; m < prec; m += n) {
            const CyclotomicNumber& cv = chi_table[(m / n) % l_cond];
            if (cv.is_zero()) continue;
            CyclotomicNumber term = pv * cv;
            coeffs.set(m, coeffs[m] + npow * term);
        }
    }
    return QExpansion(std::move(coeffs), k, chi, psi, l_cond * r_cond);
}

QExpansion e2_series(long prec) {
    if (prec < 2) throw Error(ErrorCode::argument, "e2_series: precision must be >= 2");
    TruncatedSeries<CyclotomicNumber> coeffs(prec);
    coeffs.set(0, CyclotomicNumber(Rational(-1, 24)));
    // sigma_1 by the divisor-propagation sieve
    std::vector<Integer> sigma(prec, 0);
    for (long n = 1; n < prec; ++n)
        for (long m = n; m < prec; m += n) sigma[m] += n;
    for (long m = 1; m < prec; ++m) coeffs.set(m, CyclotomicNumber(Rational(sigma[m])));
    return QExpansion(std::move(coeffs), 2, DirichletCharacter::trivial(),
                      DirichletCharacter::trivial(), 1);
}

QExpansion stabilize(const QExpansion& f, long t, const CyclotomicNumber& c) {
    if (t < 2) throw Error(ErrorCode::argument, "stabilize: t must be >= 2");
    if (t >= f.prec())
        throw Error(ErrorCode::precision, "stabilize: t must be smaller than the precision");
    TruncatedSeries<CyclotomicNumber> out(f.prec());
    for (long m = 0; m < f.prec(); ++m) {
        CyclotomicNumber b = f.coefficient(m);
        if (m % t == 0) b -= c * f.coefficient(m / t);
        out.set(m, std::move(b));
    }
    return f.with_series(std::move(out), f.level_hint() * t);
}

QExpansion ordinary_refinement(const QExpansion& f, long p) {
    CyclotomicNumber c = f.psi()(p) * CyclotomicNumber(Rational(pow_integer(Integer(p), f.weight() - 1)));
    return stabilize(f, p, c);
}

QExpansion critical_refinement(const QExpansion& f, long p) {
    return stabilize(f, p, f.chi()(p));
}

}  // namespace eiscurve
