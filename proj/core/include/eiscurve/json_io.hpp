#pragma once

#include "eiscurve/btree.hpp"
#include "eiscurve/cyclotomic.hpp"
#include "eiscurve/dirichlet.hpp"
#include "eiscurve/hecke.hpp"
#include "eiscurve/qexpansion.hpp"
#include "eiscurve/selmer.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace eiscurve::io {

using json = nlohmann::json;

// Encoding is canonical: object keys sort alphabetically, rationals print in
// lowest terms, rational cyclotomic values collapse to plain strings.
// Decoding is liberal where harmless (non-reduced rationals, order-1
// cyclotomics as strings) and rejects everything else with the offending
// JSON path in the message.

json encode_rational(const Rational& r);
Rational decode_rational(const json& j, const std::string& path);

json encode_cyclotomic(const CyclotomicNumber& x);
CyclotomicNumber decode_cyclotomic(const json& j, const std::string& path);

json encode_character(const DirichletCharacter& chi);
DirichletCharacter decode_character(const json& j, const std::string& path);

json encode_qexpansion(const QExpansion& f);
QExpansion decode_qexpansion(const json& j, const std::string& path = "$");

json encode_eigen_report(const EigenReport& report);
// Needs the form for weight/nebentypus context of the descriptors.
EigenSystem decode_eigensystem(const json& j, const QExpansion& f, const std::string& path = "$");

json encode_matrix_rep(const MatrixRep& rep);
MatrixRep decode_matrix_rep(const json& j, const std::string& path = "$");

json encode_vertex(const LatticeVertex& v);
json encode_stable_set(const StableSet& set, const MatrixRep& rep);
json encode_reduction(const Reduction& red);

json encode_selmer_problem(const SelmerProblem& problem);
SelmerProblem decode_selmer_problem(const json& j, const std::string& path = "$");
json encode_selmer_result(const SelmerResult& result);

// Strict parse of a whole document; malformed input reports the byte
// position of the failure.
json parse_document(const std::string& text);

}  // namespace eiscurve::io
