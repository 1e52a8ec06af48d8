#include "commands.hpp"

#include "eiscurve/error.hpp"

#include <memory>
#include <sstream>

namespace eiscurve::cli {

namespace {

MatrixRep load_rep(const std::string& path) {
    return io::decode_matrix_rep(load_json_file(path));
}

struct StableSetOptions {
    std::string rep_path;
    long cap = 6;
    IoOptions io;
};

void run_stable_set(const StableSetOptions& opt) {
    MatrixRep rep = load_rep(opt.rep_path);
    StableSet set = stable_set(rep, opt.cap);
    if (opt.io.json) {
        emit_json(opt.io, io::encode_stable_set(set, rep));
        return;
    }
    std::ostringstream os;
    const char* geometry = set.geometry == StableGeometry::segment        ? "segment"
                           : set.geometry == StableGeometry::not_a_segment ? "not_a_segment"
                                                                           : "empty";
    os << "stable set: " << set.vertices.size() << " vertices\n";
    os << "geometry: " << geometry << "\n";
    if (set.geometry == StableGeometry::segment) os << "length: " << set.length << "\n";
    os << "unbounded: " << (set.unbounded ? "true" : "false") << "\n";
    for (const LatticeVertex& v : set.vertices)
        os << "  " << v.to_string() << "  " << reduction_class_name(reduction_at(v, rep).cls)
           << "\n";
    write_output(opt.io, os.str());
}

struct ClassifyOptions {
    std::string rep_path;
    std::string vertex;
    IoOptions io;
};

LatticeVertex parse_vertex(const std::string& text, long p) {
    // "a,b" or "a,b,c"; the matrix [[p^a, b], [0, p^c]] is normalized
    std::vector<std::string> parts;
    std::string current;
    for (char ch : text) {
        if (ch == ',') {
            parts.push_back(current);
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    parts.push_back(current);
    if (parts.size() != 2 && parts.size() != 3)
        throw Error(ErrorCode::argument, "--vertex expects \"a,b\" or \"a,b,c\"");
    try {
        long a = std::stol(parts[0]);
        Integer b(parts[1]);
        long c = parts.size() == 3 ? std::stol(parts[2]) : 0;
        if (a < 0 || c < 0) throw std::invalid_argument("negative exponent");
        Mat2 m;
        m.e[0][0] = Rational(pow_integer(Integer(p), a));
        m.e[0][1] = Rational(b);
        m.e[1][0] = 0;
        m.e[1][1] = Rational(pow_integer(Integer(p), c));
        return vertex_normalize(m, p);
    } catch (const std::exception& e) {
        throw Error(ErrorCode::argument, std::string("malformed --vertex: ") + e.what());
    }
}

void run_classify(const ClassifyOptions& opt) {
    MatrixRep rep = load_rep(opt.rep_path);
    LatticeVertex v = parse_vertex(opt.vertex, rep.p);
    Reduction red = reduction_at(v, rep);
    if (opt.io.json) {
        io::json out = io::encode_reduction(red);
        out["vertex"] = io::encode_vertex(v);
        emit_json(opt.io, out);
        return;
    }
    std::ostringstream os;
    os << "vertex: " << v.to_string() << "\n";
    os << "class: " << reduction_class_name(red.cls) << "\n";
    os << "reduced generators mod " << rep.p << ":";
    for (const ResidueMat& m : red.generators)
        os << " [[" << m.e[0][0] << "," << m.e[0][1] << "],[" << m.e[1][0] << "," << m.e[1][1]
           << "]]";
    os << "\n";
    os << "stable lines:";
    if (red.stable_lines.empty()) os << " none";
    for (const auto& line : red.stable_lines) os << " (" << line[0] << ":" << line[1] << ")";
    os << "\n";
    write_output(opt.io, os.str());
}

struct IndexCheckOptions {
    std::string rep_path;
    std::string psi1, psi2;
    long n = 1;
    long words = 6;
    IoOptions io;
};

std::vector<Integer> parse_values(const std::string& text) {
    std::vector<Integer> out;
    std::string current;
    for (char ch : text) {
        if (ch == ',') {
            out.emplace_back(current);
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    out.emplace_back(current);
    return out;
}

void run_index_check(const IndexCheckOptions& opt) {
    MatrixRep rep = load_rep(opt.rep_path);
    std::vector<Integer> psi1, psi2;
    try {
        psi1 = parse_values(opt.psi1);
        psi2 = parse_values(opt.psi2);
    } catch (const std::exception&) {
        throw Error(ErrorCode::argument, "--psi1/--psi2 expect comma-separated integers");
    }
    bool pass = reducibility_index_check(rep, psi1, psi2, opt.n, opt.words);
    if (opt.io.json) {
        emit_json(opt.io,
                  io::json{{"pass", pass}, {"n", opt.n}, {"word_cap", opt.words}});
        return;
    }
    std::ostringstream os;
    os << "index-check: " << (pass ? "PASS" : "FAIL") << " (n=" << opt.n << ", words<=" << opt.words
       << ")\n";
    write_output(opt.io, os.str());
}

}  // namespace

void register_btree_commands(CLI::App& app) {
    CLI::App* btree = app.add_subcommand(
        "btree", "Bruhat-Tits tree computations for a 2-dimensional representation");
    btree->require_subcommand(1);

    auto ss_opt = std::make_shared<StableSetOptions>();
    CLI::App* ss = btree->add_subcommand("stable-set",
                                         "BFS the classes fixed by every generator");
    ss->add_option("--rep", ss_opt->rep_path, "Matrix representation JSON file")->required();
    ss->add_option("--cap", ss_opt->cap, "Radius cap for the search")->required();
    add_output_flag(ss, ss_opt->io);
    add_json_flag(ss, ss_opt->io);
    ss->callback([ss_opt]() { run_stable_set(*ss_opt); });

    auto cl_opt = std::make_shared<ClassifyOptions>();
    CLI::App* cl = btree->add_subcommand("classify",
                                         "Reduce the generators at a vertex and classify");
    cl->add_option("--rep", cl_opt->rep_path, "Matrix representation JSON file")->required();
    cl->add_option("--vertex", cl_opt->vertex, "Vertex as \"a,b\" or \"a,b,c\"")->required();
    add_output_flag(cl, cl_opt->io);
    add_json_flag(cl, cl_opt->io);
    cl->callback([cl_opt]() { run_classify(*cl_opt); });

    auto ic_opt = std::make_shared<IndexCheckOptions>();
    CLI::App* ic = btree->add_subcommand(
        "index-check", "Trace congruence tr rho(w) = psi1(w) + psi2(w) mod p^n over words");
    ic->add_option("--rep", ic_opt->rep_path, "Matrix representation JSON file")->required();
    ic->add_option("--psi1", ic_opt->psi1, "Character values on the generators, e.g. 1,1")
        ->required();
    ic->add_option("--psi2", ic_opt->psi2, "Character values on the generators")->required();
    ic->add_option("--n", ic_opt->n, "Congruence depth p^n")->required();
    ic->add_option("--words", ic_opt->words, "Maximum word length")->required();
    add_output_flag(ic, ic_opt->io);
    add_json_flag(ic, ic_opt->io);
    ic->callback([ic_opt]() { run_index_check(*ic_opt); });
}

}  // namespace eiscurve::cli
