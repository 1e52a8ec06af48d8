#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eiscurve/cyclotomic.hpp"
#include "eiscurve/error.hpp"
#include "eiscurve/series.hpp"

#include <random>

using namespace eiscurve;

namespace {

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 30);
    return Rational(num(rng), den(rng));
}

CyclotomicNumber random_cyclotomic(std::mt19937_64& rng, long order) {
    std::vector<Rational> coeffs(euler_phi(order));
    for (auto& c : coeffs) c = random_rational(rng);
    return CyclotomicNumber(order, std::move(coeffs));
}

}  // namespace

TEST_CASE("rational string round trip") {
    CHECK(rational_to_string(Rational(0)) == "0");
    CHECK(rational_to_string(Rational(5)) == "5");
    CHECK(rational_to_string(Rational(-3, 4)) == "-3/4");
    CHECK(rational_from_string("2/4") == Rational(1, 2));
    CHECK(rational_from_string("-6/4") == Rational(-3, 2));
    CHECK(rational_from_string("7") == Rational(7));
    CHECK_THROWS_AS(rational_from_string("1/0"), Error);
    CHECK_THROWS_AS(rational_from_string("1/-3"), Error);
    CHECK_THROWS_AS(rational_from_string(""), Error);
    CHECK_THROWS_AS(rational_from_string("a/b"), Error);
}

TEST_CASE("valuations") {
    CHECK(valuation(Integer(12), 2) == 2);
    CHECK(valuation(Rational(9, 4), 3) == 2);
    CHECK(valuation(Rational(1, 27), 3) == -3);
    CHECK(p_integral(Rational(5, 7), 7) == false);
    CHECK(p_integral(Rational(14, 3), 7) == true);
    CHECK(mod_p_power(Rational(1, 2), Integer(9), 3) == 5);  // 2*5 = 10 = 1 mod 9
}

TEST_CASE("cyclotomic normalization examples") {
    // zeta_4^2 = -1
    CyclotomicNumber z4sq(4, {Rational(0), Rational(0), Rational(1)});
    CHECK(z4sq == CyclotomicNumber(Rational(-1)));
    // zeta_3^2 + zeta_3 + 1 = 0
    CyclotomicNumber phi3(3, {Rational(1), Rational(1), Rational(1)});
    CHECK(phi3.is_zero());
    // zeta_6 is already reduced, phi(6) = 2
    CyclotomicNumber z6 = CyclotomicNumber::root_of_unity(6, 1);
    CHECK(z6.order() == 6);
    CHECK(z6.coeffs() == std::vector<Rational>{Rational(0), Rational(1)});
}

TEST_CASE("cyclotomic normalization is idempotent and respects products") {
    std::mt19937_64 rng(20240901);
    for (int trial = 0; trial < 40; ++trial) {
        long order = std::uniform_int_distribution<long>(1, 12)(rng);
        // raw polynomials of degree < order
        std::vector<Rational> raw_a(order), raw_b(order);
        for (auto& c : raw_a) c = random_rational(rng);
        for (auto& c : raw_b) c = random_rational(rng);
        CyclotomicNumber a(order, raw_a), b(order, raw_b);
        // idempotent: renormalizing the reduced coefficients is the identity
        CHECK(CyclotomicNumber(order, a.coeffs()) == a);
        // normalize(a*b) computed on raw polynomials agrees with reduced product
        CyclotomicNumber raw_product(order, poly::mul(poly::trimmed(raw_a), poly::trimmed(raw_b)));
        CHECK(raw_product == a * b);
    }
}

TEST_CASE("cyclotomic ring axioms on random triples") {
    std::mt19937_64 rng(424243);
    std::vector<long> orders = {1, 3, 4, 5, 6, 8, 12};
    for (int trial = 0; trial < 60; ++trial) {
        long o1 = orders[trial % orders.size()];
        long o2 = orders[(trial / 2) % orders.size()];
        long o3 = orders[(trial / 3) % orders.size()];
        CyclotomicNumber a = random_cyclotomic(rng, o1);
        CyclotomicNumber b = random_cyclotomic(rng, o2);
        CyclotomicNumber c = random_cyclotomic(rng, o3);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("cyclotomic division and inverse") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 25; ++trial) {
        long order = std::uniform_int_distribution<long>(1, 10)(rng);
        CyclotomicNumber a = random_cyclotomic(rng, order);
        if (a.is_zero()) continue;
        CHECK(a * a.inverse() == CyclotomicNumber::one());
        CyclotomicNumber b = random_cyclotomic(rng, order);
        CHECK((b / a) * a == b);
    }
    CHECK_THROWS_AS(CyclotomicNumber::zero().inverse(), Error);
}

TEST_CASE("roots of unity multiply by exponent addition") {
    for (long m : {3L, 4L, 5L, 8L, 12L}) {
        for (long i = 0; i < m; ++i) {
            for (long j = 0; j < m; ++j) {
                CHECK(CyclotomicNumber::root_of_unity(m, i) * CyclotomicNumber::root_of_unity(m, j) ==
                      CyclotomicNumber::root_of_unity(m, i + j));
            }
        }
        CHECK(CyclotomicNumber::root_of_unity(m, 0).is_one());
    }
    // cross-order: zeta_4 * zeta_6 = zeta_12^(3+2)
    CHECK(CyclotomicNumber::root_of_unity(4, 1) * CyclotomicNumber::root_of_unity(6, 1) ==
          CyclotomicNumber::root_of_unity(12, 5));
}

TEST_CASE("series multiplication basics") {
    using S = TruncatedSeries<Rational>;
    S one_plus(std::vector<Rational>{1, 1, 0});
    S one_minus(std::vector<Rational>{1, -1, 0});
    S product = one_plus * one_minus;
    CHECK(product.precision() == 3);
    CHECK(product[0] == 1);
    CHECK(product[1] == 0);
    CHECK(product[2] == -1);

    // f * 1 = f
    S f(std::vector<Rational>{Rational(2, 3), 5, Rational(-1, 7)});
    S unit(std::vector<Rational>{1, 0, 0});
    CHECK(f * unit == f);

    // geometric series times (1 - x) telescopes to 1; the expected value is
    // frozen from direct convolution of the defining sequences
    S geometric(std::vector<Rational>{1, 1, 1, 1, 1});
    S kill(std::vector<Rational>{1, -1, 0, 0, 0});
    S telescoped = geometric * kill;
    for (long n = 0; n < 5; ++n) CHECK(telescoped[n] == (n == 0 ? 1 : 0));
}

TEST_CASE("series multiplication commutative and associative at fixed precision") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 20; ++trial) {
        long prec = std::uniform_int_distribution<long>(1, 12)(rng);
        std::vector<Rational> ca(prec), cb(prec), cc(prec);
        for (long i = 0; i < prec; ++i) {
            ca[i] = random_rational(rng);
            cb[i] = random_rational(rng);
            cc[i] = random_rational(rng);
        }
        TruncatedSeries<Rational> a(ca), b(cb), c(cc);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("binary operations truncate to the minimum precision") {
    TruncatedSeries<Rational> f(std::vector<Rational>{1, 2, 3, 4, 5});
    TruncatedSeries<Rational> g(std::vector<Rational>{1, 1});
    CHECK((f * g).precision() == 2);
    CHECK((f + g).precision() == 2);
    CHECK((f * g)[1] == 3);
}

TEST_CASE("exp series") {
    auto e0 = exp_series(Rational(0), 4);
    CHECK(e0[0] == 1);
    CHECK(e0[1] == 0);
    CHECK(e0[2] == 0);

    auto e1 = exp_series(Rational(1), 4);
    CHECK(e1[2] == Rational(1, 2));
    CHECK(e1[3] == Rational(1, 6));

    auto e2 = exp_series(Rational(2), 3);
    CHECK(e2[1] == 2);
    CHECK(e2[2] == 2);  // 2^2/2!

    CHECK_THROWS_AS(exp_series(Rational(1), 0), Error);
}

TEST_CASE("exp series satisfies the addition law at every precision") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 20; ++trial) {
        Rational a = random_rational(rng);
        Rational b = random_rational(rng);
        long prec = std::uniform_int_distribution<long>(1, 10)(rng);
        CHECK(exp_series(a, prec) * exp_series(b, prec) == exp_series(a + b, prec));
    }
}

TEST_CASE("series inversion") {
    // 1/(1 - x) is the geometric series
    TruncatedSeries<Rational> f(std::vector<Rational>{1, -1, 0, 0, 0, 0});
    auto inv = f.inverse();
    for (long n = 0; n < 6; ++n) CHECK(inv[n] == 1);
    CHECK((f * inv)[3] == 0);
    CHECK((f * inv)[0] == 1);

    TruncatedSeries<Rational> zero_const(std::vector<Rational>{0, 1});
    CHECK_THROWS_AS(zero_const.inverse(), Error);
}
