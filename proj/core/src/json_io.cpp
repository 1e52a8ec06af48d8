#include "eiscurve/json_io.hpp"

#include "eiscurve/error.hpp"

#include <algorithm>

namespace eiscurve::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw Error(ErrorCode::decode, path + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(path, "missing field \"" + std::string(key) + "\"");
    return *it;
}

long int_field(const json& j, const char* key, const std::string& path) {
    const json& v = field(j, key, path);
    if (!v.is_number_integer()) fail(path + "." + key, "expected an integer");
    return v.get<long>();
}

void reject_unknown(const json& j, std::initializer_list<const char*> keys,
                    const std::string& path) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (std::find_if(keys.begin(), keys.end(),
                         [&](const char* k) { return it.key() == k; }) == keys.end())
            fail(path, "unknown field \"" + it.key() + "\"");
    }
}

}  // namespace

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::decode,
                    "malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

json encode_rational(const Rational& r) {
    return rational_to_string(r);
}

Rational decode_rational(const json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a rational string like \"-3/4\"");
    try {
        return rational_from_string(j.get<std::string>());
    } catch (const Error& e) {
        fail(path, e.what());
    }
}

json encode_cyclotomic(const CyclotomicNumber& x) {
    if (x.order() == 1) return encode_rational(x.coeffs()[0]);
    json coeffs = json::array();
    for (const Rational& c : x.coeffs()) coeffs.push_back(encode_rational(c));
    return json{{"order", x.order()}, {"coeffs", std::move(coeffs)}};
}

CyclotomicNumber decode_cyclotomic(const json& j, const std::string& path) {
    if (j.is_string()) return CyclotomicNumber(decode_rational(j, path));
    if (!j.is_object()) fail(path, "expected a rational string or {order, coeffs}");
    reject_unknown(j, {"order", "coeffs"}, path);
    long order = int_field(j, "order", path);
    if (order < 1) fail(path + ".order", "order must be >= 1");
    const json& coeffs = field(j, "coeffs", path);
    if (!coeffs.is_array()) fail(path + ".coeffs", "expected an array");
    if (static_cast<long>(coeffs.size()) != euler_phi(order))
        fail(path + ".coeffs", "expected exactly phi(order) coefficients");
    std::vector<Rational> raw;
    raw.reserve(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        raw.push_back(decode_rational(coeffs[i], path + ".coeffs[" + std::to_string(i) + "]"));
    return CyclotomicNumber(order, std::move(raw));
}

json encode_character(const DirichletCharacter& chi) {
    return json{{"modulus", chi.modulus()},
                {"exponents", chi.exponents()},
                {"order", chi.order()}};
}

DirichletCharacter decode_character(const json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected a character object");
    reject_unknown(j, {"modulus", "exponents", "order"}, path);
    long modulus = int_field(j, "modulus", path);
    if (modulus < 1) fail(path + ".modulus", "modulus must be >= 1");
    const json& exps = field(j, "exponents", path);
    if (!exps.is_array()) fail(path + ".exponents", "expected an array");
    std::vector<long> exponents;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (!exps[i].is_number_integer())
            fail(path + ".exponents[" + std::to_string(i) + "]", "expected an integer");
        exponents.push_back(exps[i].get<long>());
    }
    DirichletCharacter chi = [&]() {
        try {
            return DirichletCharacter(modulus, std::move(exponents));
        } catch (const Error& e) {
            fail(path, e.what());
        }
    }();
    if (j.contains("order") && int_field(j, "order", path) != chi.order())
        fail(path + ".order", "stated order does not match the exponents");
    return chi;
}

json encode_qexpansion(const QExpansion& f) {
    json coeffs = json::array();
    for (long n = 0; n < f.prec(); ++n) coeffs.push_back(encode_cyclotomic(f.coefficient(n)));
    return json{{"weight", f.weight()},   {"chi", encode_character(f.chi())},
                {"psi", encode_character(f.psi())}, {"level_hint", f.level_hint()},
                {"prec", f.prec()},       {"coeffs", std::move(coeffs)}};
}

QExpansion decode_qexpansion(const json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected a q-expansion object");
    reject_unknown(j, {"weight", "chi", "psi", "level_hint", "prec", "coeffs"}, path);
    long weight = int_field(j, "weight", path);
    DirichletCharacter chi = decode_character(field(j, "chi", path), path + ".chi");
    DirichletCharacter psi = decode_character(field(j, "psi", path), path + ".psi");
    long level_hint = int_field(j, "level_hint", path);
    long prec = int_field(j, "prec", path);
    const json& coeffs = field(j, "coeffs", path);
    if (!coeffs.is_array()) fail(path + ".coeffs", "expected an array");
    if (static_cast<long>(coeffs.size()) != prec)
        fail(path + ".coeffs", "coefficient count must equal prec");
    if (prec < 2) fail(path + ".prec", "prec must be >= 2");
    std::vector<CyclotomicNumber> values;
    values.reserve(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        values.push_back(decode_cyclotomic(coeffs[i], path + ".coeffs[" + std::to_string(i) + "]"));
    try {
        return QExpansion(TruncatedSeries<CyclotomicNumber>(std::move(values)), weight, chi, psi,
                          level_hint);
    } catch (const Error& e) {
        fail(path, e.what());
    }
}

json encode_eigen_report(const EigenReport& report) {
    json entries = json::array();
    for (const auto& entry : report.entries) {
        json e{{"op", entry.op.name()},
               {"expected", encode_cyclotomic(entry.expected)},
               {"pass", entry.pass}};
        e["found"] = entry.found ? encode_cyclotomic(*entry.found) : json(nullptr);
        entries.push_back(std::move(e));
    }
    return json{{"entries", std::move(entries)}, {"all_pass", report.all_pass}};
}

EigenSystem decode_eigensystem(const json& j, const QExpansion& f, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an eigensystem object");
    reject_unknown(j, {"entries", "t_primes"}, path);
    EigenSystem sys;
    const json& entries = field(j, "entries", path);
    if (!entries.is_array()) fail(path + ".entries", "expected an array");
    std::vector<long> taken_params;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        std::string entry_path = path + ".entries[" + std::to_string(i) + "]";
        const json& e = entries[i];
        reject_unknown(e, {"op", "value"}, entry_path);
        const json& op_field = field(e, "op", entry_path);
        if (!op_field.is_string()) fail(entry_path + ".op", "expected a string like \"U:5\"");
        HeckeDescriptor op = [&]() {
            try {
                return descriptor_for(op_field.get<std::string>(), f);
            } catch (const Error& err) {
                fail(entry_path + ".op", err.what());
            }
        }();
        CyclotomicNumber value =
            decode_cyclotomic(field(e, "value", entry_path), entry_path + ".value");
        taken_params.push_back(op.parameter);
        sys.entries.emplace_back(std::move(op), std::move(value));
    }
    if (j.contains("t_primes")) {
        const json& tp = j["t_primes"];
        std::string tp_path = path + ".t_primes";
        reject_unknown(tp, {"bound", "value"}, tp_path);
        long bound = int_field(tp, "bound", tp_path);
        const json& value = field(tp, "value", tp_path);
        if (!value.is_string() || value.get<std::string>() != "1+l")
            fail(tp_path + ".value", "only the weight-2 Eisenstein law \"1+l\" is supported");
        sys.t_prime_bound = bound;
        for (long l : primes_upto(bound)) {
            if (std::find(taken_params.begin(), taken_params.end(), l) != taken_params.end())
                continue;
            sys.entries.emplace_back(
                HeckeDescriptor{HeckeKind::T, l, f.weight(), f.chi() * f.psi()},
                CyclotomicNumber(Rational(1 + l)));
        }
    }
    try {
        sys.validate();
    } catch (const Error& e) {
        fail(path, e.what());
    }
    return sys;
}

json encode_matrix_rep(const MatrixRep& rep) {
    json gens = json::array();
    for (const Mat2& g : rep.generators) {
        json rows = json::array();
        for (int i = 0; i < 2; ++i) {
            json row = json::array();
            for (int k = 0; k < 2; ++k) row.push_back(encode_rational(g.e[i][k]));
            rows.push_back(std::move(row));
        }
        gens.push_back(std::move(rows));
    }
    return json{{"p", rep.p}, {"generators", std::move(gens)}, {"labels", rep.labels}};
}

MatrixRep decode_matrix_rep(const json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected a matrix representation object");
    reject_unknown(j, {"p", "generators", "labels"}, path);
    MatrixRep rep;
    rep.p = int_field(j, "p", path);
    const json& gens = field(j, "generators", path);
    if (!gens.is_array() || gens.empty()) fail(path + ".generators", "expected a nonempty array");
    for (std::size_t g = 0; g < gens.size(); ++g) {
        std::string gpath = path + ".generators[" + std::to_string(g) + "]";
        const json& rows = gens[g];
        if (!rows.is_array() || rows.size() != 2) fail(gpath, "expected two rows");
        Mat2 m;
        for (int i = 0; i < 2; ++i) {
            if (!rows[i].is_array() || rows[i].size() != 2)
                fail(gpath + "[" + std::to_string(i) + "]", "expected two entries");
            for (int k = 0; k < 2; ++k)
                m.e[i][k] = decode_rational(rows[i][k], gpath + "[" + std::to_string(i) + "][" +
                                                            std::to_string(k) + "]");
        }
        rep.generators.push_back(std::move(m));
    }
    if (j.contains("labels")) {
        const json& labels = j["labels"];
        if (!labels.is_array()) fail(path + ".labels", "expected an array");
        for (const auto& l : labels) {
            if (!l.is_string()) fail(path + ".labels", "expected strings");
            rep.labels.push_back(l.get<std::string>());
        }
    }
    if (rep.labels.empty())
        for (std::size_t i = 0; i < rep.generators.size(); ++i)
            rep.labels.push_back("g" + std::to_string(i));
    try {
        rep.validate();
    } catch (const Error& e) {
        fail(path, e.what());
    }
    return rep;
}

json encode_vertex(const LatticeVertex& v) {
    return json{{"a", v.a()}, {"b", v.b().str()}, {"c", v.c()}};
}

json encode_stable_set(const StableSet& set, const MatrixRep& rep) {
    json vertices = json::array();
    for (const LatticeVertex& v : set.vertices) {
        json entry = encode_vertex(v);
        entry["matrix"] = v.to_string();
        entry["class"] = reduction_class_name(reduction_at(v, rep).cls);
        vertices.push_back(std::move(entry));
    }
    const char* geometry = set.geometry == StableGeometry::segment        ? "segment"
                           : set.geometry == StableGeometry::not_a_segment ? "not_a_segment"
                                                                           : "empty";
    json out{{"vertices", std::move(vertices)},
             {"geometry", geometry},
             {"length", set.length},
             {"unbounded", set.unbounded}};
    if (set.endpoints)
        out["endpoints"] =
            json::array({encode_vertex(set.endpoints->first), encode_vertex(set.endpoints->second)});
    return out;
}

json encode_reduction(const Reduction& red) {
    json gens = json::array();
    for (const ResidueMat& m : red.generators) {
        gens.push_back(json::array({json::array({m.e[0][0], m.e[0][1]}),
                                    json::array({m.e[1][0], m.e[1][1]})}));
    }
    json lines = json::array();
    for (const auto& l : red.stable_lines) lines.push_back(json::array({l[0], l[1]}));
    return json{{"class", reduction_class_name(red.cls)},
                {"generators_mod_p", std::move(gens)},
                {"stable_lines", std::move(lines)}};
}

json encode_selmer_problem(const SelmerProblem& problem) {
    json sigma = json::array();
    json conditions = json::object();
    for (const Place& v : problem.sigma) {
        if (v.is_infinity()) sigma.push_back("inf");
        else sigma.push_back(v.prime());
        conditions[v.name()] = condition_name(problem.conditions.at(v));
    }
    return json{{"p", problem.character.p()},
                {"chi", encode_character(problem.character.chi())},
                {"j", problem.character.j()},
                {"sigma", std::move(sigma)},
                {"conditions", std::move(conditions)}};
}

SelmerProblem decode_selmer_problem(const json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected a selmer problem object");
    reject_unknown(j, {"p", "chi", "j", "sigma", "conditions"}, path);
    long p = int_field(j, "p", path);
    DirichletCharacter chi = decode_character(field(j, "chi", path), path + ".chi");
    long twist = int_field(j, "j", path);
    GaloisCharacter character = [&]() {
        try {
            return GaloisCharacter(p, chi, twist);
        } catch (const Error& e) {
            fail(path, e.what());
        }
    }();
    const json& sigma_field = field(j, "sigma", path);
    if (!sigma_field.is_array()) fail(path + ".sigma", "expected an array");
    std::set<Place> sigma;
    for (std::size_t i = 0; i < sigma_field.size(); ++i) {
        const json& s = sigma_field[i];
        std::string spath = path + ".sigma[" + std::to_string(i) + "]";
        if (s.is_string()) {
            if (s.get<std::string>() != "inf") fail(spath, "expected a prime or \"inf\"");
            sigma.insert(Place::infinity());
        } else if (s.is_number_integer()) {
            long q = s.get<long>();
            if (!is_prime(q)) fail(spath, "sigma members must be prime");
            sigma.insert(Place::finite(q));
        } else {
            fail(spath, "expected a prime or \"inf\"");
        }
    }
    const json& cond_field = field(j, "conditions", path);
    if (!cond_field.is_object()) fail(path + ".conditions", "expected an object");
    std::map<Place, LocalConditionKind> conditions;
    for (auto it = cond_field.begin(); it != cond_field.end(); ++it) {
        std::string cpath = path + ".conditions." + it.key();
        Place place = Place::infinity();
        if (it.key() != "inf") {
            try {
                std::size_t used = 0;
                long q = std::stol(it.key(), &used);
                if (used != it.key().size() || !is_prime(q)) throw std::invalid_argument("");
                place = Place::finite(q);
            } catch (const std::exception&) {
                fail(cpath, "condition keys must be primes or \"inf\"");
            }
        }
        if (!it.value().is_string()) fail(cpath, "expected a condition name");
        auto kind = condition_from_name(it.value().get<std::string>());
        if (!kind)
            fail(cpath, "expected one of unramified, crystalline, full, zero");
        conditions.emplace(place, *kind);
    }
    SelmerProblem problem{std::move(character), std::move(sigma), std::move(conditions)};
    try {
        problem.validate();
    } catch (const Error& e) {
        fail(path, e.what());
    }
    return problem;
}

json encode_selmer_result(const SelmerResult& result) {
    json ledger = json::array();
    for (const LedgerEntry& entry : result.ledger) {
        ledger.push_back(json{{"label", entry.label},
                              {"value", entry.value},
                              {"justification", entry.justification}});
    }
    const char* dual_kind = result.dual_term.kind == DualTermResult::Kind::known     ? "known"
                            : result.dual_term.kind == DualTermResult::Kind::assumed ? "assumed"
                                                                                     : "unknown";
    json out{{"ledger", std::move(ledger)},
             {"dual", json{{"kind", dual_kind},
                           {"value", result.dual_term.value},
                           {"reason", result.dual_term.reason}}},
             {"symbolic", result.symbolic}};
    out["dimension"] = result.dimension ? json(*result.dimension) : json(nullptr);
    return out;
}

}  // namespace eiscurve::io
