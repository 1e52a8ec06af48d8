#pragma once

#include "eiscurve/cyclotomic.hpp"
#include "eiscurve/dirichlet.hpp"
#include "eiscurve/series.hpp"

namespace eiscurve {

// Truncated q-expansion with modular bookkeeping. The level hint is advisory
// metadata only; no modularity of the series is verified or assumed.
class QExpansion {
  public:
    QExpansion(TruncatedSeries<CyclotomicNumber> coeffs, long weight, DirichletCharacter chi,
               DirichletCharacter psi, long level_hint);

    const TruncatedSeries<CyclotomicNumber>& series() const { return coeffs_; }
    const CyclotomicNumber& coefficient(long n) const { return coeffs_[n]; }
    long prec() const { return coeffs_.precision(); }
    long weight() const { return weight_; }
    const DirichletCharacter& chi() const { return chi_; }
    const DirichletCharacter& psi() const { return psi_; }
    long level_hint() const { return level_hint_; }

    QExpansion with_series(TruncatedSeries<CyclotomicNumber> coeffs, long level_hint) const {
        return QExpansion(std::move(coeffs), weight_, chi_, psi_, level_hint);
    }

  private:
    TruncatedSeries<CyclotomicNumber> coeffs_;
    long weight_;
    DirichletCharacter chi_, psi_;
    long level_hint_;
};

// E_{k,chi,psi} to the given precision: a_0 = -B_{k,psi}/2k when chi has
// conductor 1 and 0 otherwise, a_m = sum_{n|m} psi(n) chi(m/n) n^(k-1).
// Requires chi, psi primitive with chi(-1)psi(-1) = (-1)^k; the excluded
// case (k, chi, psi) = (2, 1, 1) must go through e2_series.
QExpansion eisenstein_series(long k, const DirichletCharacter& chi, const DirichletCharacter& psi,
                             long prec);

// E_2: a_0 = -1/24, a_m = sigma_1(m). Not a classical modular form; its
// stabilizations are.
QExpansion e2_series(long prec);

// f(q) - c*f(q^t): coefficients b_m = a_m - c*a_{m/t}, with the second term
// only when t | m. Precision is preserved and the level hint multiplies by t.
QExpansion stabilize(const QExpansion& f, long t, const CyclotomicNumber& c);

// Refinements at p: ordinary removes the p-root psi(p)p^(k-1), critical
// removes chi(p).
QExpansion ordinary_refinement(const QExpansion& f, long p);
QExpansion critical_refinement(const QExpansion& f, long p);

}  // namespace eiscurve
