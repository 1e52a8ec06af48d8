#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eiscurve/error.hpp"
#include "eiscurve/json_io.hpp"

using namespace eiscurve;
using io::json;

TEST_CASE("rational codec") {
    CHECK(io::encode_rational(Rational(-3, 4)) == json("-3/4"));
    CHECK(io::encode_rational(Rational(5)) == json("5"));
    CHECK(io::decode_rational(json("2/4"), "$") == Rational(1, 2));
    // re-encode normalizes
    CHECK(io::encode_rational(io::decode_rational(json("2/4"), "$")) == json("1/2"));
    CHECK_THROWS_AS(io::decode_rational(json(0.5), "$"), Error);
    try {
        io::decode_rational(json("x"), "$.coeffs[3]");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::decode);
        CHECK(std::string(e.what()).find("$.coeffs[3]") != std::string::npos);
    }
}

TEST_CASE("cyclotomic codec") {
    auto z = CyclotomicNumber::root_of_unity(5, 2);
    json encoded = io::encode_cyclotomic(z);
    CHECK(io::decode_cyclotomic(encoded, "$") == z);
    // rational values collapse to strings
    CHECK(io::encode_cyclotomic(CyclotomicNumber(Rational(7, 2))) == json("7/2"));
    CHECK(io::decode_cyclotomic(json("7/2"), "$") == CyclotomicNumber(Rational(7, 2)));
    // coefficient count must be phi(order)
    json bad = {{"order", 5}, {"coeffs", {"1", "0"}}};
    CHECK_THROWS_AS(io::decode_cyclotomic(bad, "$"), Error);
    json unknown = {{"order", 5}, {"coeffs", {"1", "0", "0", "0"}}, {"extra", 1}};
    CHECK_THROWS_AS(io::decode_cyclotomic(unknown, "$"), Error);
}

TEST_CASE("character codec") {
    for (long n : {1L, 5L, 8L, 12L}) {
        for (const auto& chi : characters_mod(n)) {
            json encoded = io::encode_character(chi);
            CHECK(io::decode_character(encoded, "$") == chi);
        }
    }
    // stated order must match
    json bad = {{"modulus", 5}, {"exponents", {1}}, {"order", 2}};
    CHECK_THROWS_AS(io::decode_character(bad, "$"), Error);
    // order is optional
    json no_order = {{"modulus", 5}, {"exponents", {1}}};
    CHECK(io::decode_character(no_order, "$").order() == 4);
    // exponent range enforced
    json out_of_range = {{"modulus", 5}, {"exponents", {7}}};
    CHECK_THROWS_AS(io::decode_character(out_of_range, "$"), Error);
}

TEST_CASE("q-expansion codec round trip") {
    auto f = critical_refinement(e2_series(50), 5);
    json encoded = io::encode_qexpansion(f);
    QExpansion decoded = io::decode_qexpansion(encoded);
    CHECK(decoded.series() == f.series());
    CHECK(decoded.weight() == f.weight());
    CHECK(decoded.level_hint() == f.level_hint());
    CHECK(decoded.chi() == f.chi());
    // byte-stable canonical encoding
    CHECK(io::encode_qexpansion(decoded).dump() == encoded.dump());

    // a non-reduced coefficient is accepted and normalized on re-encode
    json tweaked = encoded;
    tweaked["coeffs"][2] = "6/2";
    QExpansion renorm = io::decode_qexpansion(tweaked);
    CHECK(io::encode_qexpansion(renorm)["coeffs"][2] == json("3"));

    // coefficient count must match prec
    json bad = encoded;
    bad["coeffs"].erase(0);
    CHECK_THROWS_AS(io::decode_qexpansion(bad), Error);

    // constant-term invariant: nonzero a_0 with nontrivial chi is rejected
    auto quad3 = characters_mod(3)[1];
    json forged = io::encode_qexpansion(eisenstein_series(1, quad3, DirichletCharacter::trivial(), 8));
    forged["coeffs"][0] = "1";
    CHECK_THROWS_AS(io::decode_qexpansion(forged), Error);
}

TEST_CASE("eigensystem codec expands the prime law") {
    auto f = critical_refinement(ordinary_refinement(e2_series(200), 7), 5);
    json spec = {{"entries", json::array({json{{"op", "U:5"}, {"value", "5"}},
                                          json{{"op", "U:7"}, {"value", "1"}}})},
                 {"t_primes", {{"bound", 20}, {"value", "1+l"}}}};
    EigenSystem sys = io::decode_eigensystem(spec, f);
    CHECK(sys.t_prime_bound == 20);
    // primes up to 20 are 2,3,5,7,11,13,17,19; 5 and 7 are taken by U entries
    CHECK(sys.entries.size() == 2 + 6);
    auto report = eigensystem_verify(f, sys);
    CHECK(report.all_pass);

    json bad_law = spec;
    bad_law["t_primes"]["value"] = "2l";
    CHECK_THROWS_AS(io::decode_eigensystem(bad_law, f), Error);
}

TEST_CASE("matrix rep codec") {
    json rep_json = {{"p", 3},
                     {"generators", json::array({json::array({json::array({"1", "1"}),
                                                              json::array({"0", "1"})}),
                                                 json::array({json::array({"1", "0"}),
                                                              json::array({"3", "1"})})})},
                     {"labels", {"M1", "M2"}}};
    MatrixRep rep = io::decode_matrix_rep(rep_json);
    CHECK(rep.p == 3);
    CHECK(rep.generators.size() == 2);
    CHECK(rep.generators[1].e[1][0] == 3);
    json back = io::encode_matrix_rep(rep);
    CHECK(io::decode_matrix_rep(back).generators[0] == rep.generators[0]);
    // labels default to g0, g1, ...
    json unlabeled = rep_json;
    unlabeled.erase("labels");
    CHECK(io::decode_matrix_rep(unlabeled).labels == std::vector<std::string>{"g0", "g1"});
}

TEST_CASE("selmer problem codec") {
    json w1 = {{"p", 5},
               {"chi", {{"modulus", 1}, {"exponents", json::array()}, {"order", 1}}},
               {"j", 1},
               {"sigma", {7, 5, "inf"}},
               {"conditions", {{"7", "full"}, {"5", "crystalline"}, {"inf", "zero"}}}};
    SelmerProblem problem = io::decode_selmer_problem(w1);
    CHECK(problem.character.p() == 5);
    CHECK(problem.character.j() == 1);
    CHECK(problem.sigma.size() == 3);
    // round trip through the canonical encoding
    json encoded = io::encode_selmer_problem(problem);
    SelmerProblem again = io::decode_selmer_problem(encoded);
    CHECK(again.conditions == problem.conditions);
    CHECK(encoded.dump() == io::encode_selmer_problem(again).dump());

    json bad_condition = w1;
    bad_condition["conditions"]["7"] = "everything";
    CHECK_THROWS_AS(io::decode_selmer_problem(bad_condition), Error);
    json bad_sigma = w1;
    bad_sigma["sigma"] = {6, 5, "inf"};
    CHECK_THROWS_AS(io::decode_selmer_problem(bad_sigma), Error);
}

TEST_CASE("malformed documents report the byte position") {
    try {
        io::parse_document("{\"p\": 5,,}");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::decode);
        CHECK(std::string(e.what()).find("byte") != std::string::npos);
    }
}

TEST_CASE("selmer result encoding carries the ledger") {
    json w1 = {{"p", 5},
               {"chi", {{"modulus", 1}, {"exponents", json::array()}}},
               {"j", 1},
               {"sigma", {7, 5, "inf"}},
               {"conditions", {{"7", "full"}, {"5", "crystalline"}, {"inf", "zero"}}}};
    auto result = selmer_dimension(io::decode_selmer_problem(w1));
    json encoded = io::encode_selmer_result(result);
    CHECK(encoded["dimension"] == json(1));
    CHECK(encoded["ledger"].size() == 6);
    CHECK(encoded["dual"]["kind"] == json("known"));
}
