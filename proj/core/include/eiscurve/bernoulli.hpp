#pragma once

#include "eiscurve/cyclotomic.hpp"
#include "eiscurve/dirichlet.hpp"
#include "eiscurve/numtheory.hpp"

namespace eiscurve {

// Classical Bernoulli number B_k with the B_1 = -1/2 convention.
Rational bernoulli_number(long k);

// Coefficients of the Bernoulli polynomial B_k(X).
poly::Poly bernoulli_polynomial(long k);

struct BernoulliValue {
    long k = 0;
    DirichletCharacter character = DirichletCharacter::trivial();
    CyclotomicNumber value;
};

// Generalized Bernoulli number B_{k,psi} for a primitive character psi of
// conductor R, via the closed form R^(k-1) * sum_a psi(a) B_k(a/R).
// Agrees with gen_bernoulli_oracle by construction and by test.
BernoulliValue gen_bernoulli(long k, const DirichletCharacter& psi);

// Independent oracle: truncated-series evaluation of the exponential
// generating identity sum_{a=1..R} psi(a) x e^(ax) / (e^(Rx) - 1), reading
// off k! times the coefficient of x^k. Division by (e^(Rx)-1)/x is exact
// series inversion.
BernoulliValue gen_bernoulli_oracle(long k, const DirichletCharacter& psi);

}  // namespace eiscurve
