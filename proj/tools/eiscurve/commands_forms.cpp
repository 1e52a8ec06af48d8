#include "commands.hpp"

#include "eiscurve/bernoulli.hpp"
#include "eiscurve/error.hpp"

#include <memory>
#include <sstream>

namespace eiscurve::cli {

namespace {

struct BernoulliOptions {
    long k = 0;
    long modulus = 1;
    long index = 0;
    IoOptions io;
};

void run_bernoulli(const BernoulliOptions& opt) {
    DirichletCharacter psi = character_by_index(opt.modulus, opt.index);
    if (!psi.is_primitive())
        throw Error(ErrorCode::argument,
                    "character " + std::to_string(opt.index) + " mod " +
                        std::to_string(opt.modulus) + " is imprimitive (conductor " +
                        std::to_string(psi.conductor()) + "); rerun with the conductor as modulus");
    BernoulliValue value = gen_bernoulli(opt.k, psi);
    if (opt.io.json) {
        emit_json(opt.io, io::json{{"k", value.k},
                                   {"character", io::encode_character(value.character)},
                                   {"value", io::encode_cyclotomic(value.value)}});
    } else if (value.value.is_rational()) {
        write_output(opt.io, rational_to_string(value.value.rational_value()) + "\n");
    } else {
        write_output(opt.io, io::encode_cyclotomic(value.value).dump() + "\n");
    }
}

struct CharactersOptions {
    long modulus = 1;
    IoOptions io;
};

void run_characters(const CharactersOptions& opt) {
    auto all = characters_mod(opt.modulus);
    if (opt.io.json) {
        io::json out = io::json::array();
        for (std::size_t i = 0; i < all.size(); ++i) {
            io::json entry = io::encode_character(all[i]);
            entry["index"] = i;
            entry["conductor"] = all[i].conductor();
            entry["parity"] = all[i].parity();
            out.push_back(std::move(entry));
        }
        emit_json(opt.io, out);
        return;
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < all.size(); ++i) {
        os << "index " << i << ": exponents [";
        for (std::size_t g = 0; g < all[i].exponents().size(); ++g) {
            if (g) os << ",";
            os << all[i].exponents()[g];
        }
        os << "], order " << all[i].order() << ", conductor " << all[i].conductor() << ", "
           << (all[i].parity() == 1 ? "even" : "odd") << "\n";
    }
    write_output(opt.io, os.str());
}

struct EisensteinOptions {
    long k = 4;
    long chi_modulus = 1;
    long chi_index = 0;
    long psi_modulus = 1;
    long psi_index = 0;
    long prec = 20;
    bool e2 = false;
    IoOptions io;
};

void run_eisenstein(const EisensteinOptions& opt) {
    QExpansion f = opt.e2 ? e2_series(opt.prec)
                          : eisenstein_series(opt.k, character_by_index(opt.chi_modulus, opt.chi_index),
                                              character_by_index(opt.psi_modulus, opt.psi_index),
                                              opt.prec);
    emit_json(opt.io, io::encode_qexpansion(f));
}

struct RefineOptions {
    std::string mode;
    long prime = 2;
    IoOptions io;
};

void run_refine(const RefineOptions& opt) {
    if (!is_prime(opt.prime)) throw Error(ErrorCode::argument, "--prime must be prime");
    QExpansion f = load_qexpansion(opt.io);
    QExpansion out = opt.mode == "ord" ? ordinary_refinement(f, opt.prime)
                                       : critical_refinement(f, opt.prime);
    emit_json(opt.io, io::encode_qexpansion(out));
}

struct HeckeOptions {
    std::string op;
    IoOptions io;
};

void run_hecke(const HeckeOptions& opt) {
    QExpansion f = load_qexpansion(opt.io);
    emit_json(opt.io, io::encode_qexpansion(hecke_apply(descriptor_for(opt.op, f), f)));
}

void run_eigencheck(const HeckeOptions& opt) {
    QExpansion f = load_qexpansion(opt.io);
    auto lambda = eigencheck(descriptor_for(opt.op, f), f);
    if (opt.io.json) {
        emit_json(opt.io, io::json{{"eigenvalue",
                                    lambda ? io::encode_cyclotomic(*lambda) : io::json(nullptr)}});
        return;
    }
    std::string text = lambda ? (lambda->is_rational() ? rational_to_string(lambda->rational_value())
                                                       : io::encode_cyclotomic(*lambda).dump())
                              : "absent";
    write_output(opt.io, "eigenvalue: " + text + "\n");
}

struct EigenSystemOptions {
    std::string spec_path;
    IoOptions io;
};

void run_eigensystem(const EigenSystemOptions& opt) {
    QExpansion f = load_qexpansion(opt.io);
    EigenSystem sys = io::decode_eigensystem(load_json_file(opt.spec_path), f);
    EigenReport report = eigensystem_verify(f, sys);
    if (opt.io.json) {
        emit_json(opt.io, io::encode_eigen_report(report));
        return;
    }
    std::ostringstream os;
    for (const auto& entry : report.entries) {
        os << entry.op.name() << " expected "
           << io::encode_cyclotomic(entry.expected).dump() << " found "
           << (entry.found ? io::encode_cyclotomic(*entry.found).dump() : "absent") << " "
           << (entry.pass ? "PASS" : "FAIL") << "\n";
    }
    os << "overall: " << (report.all_pass ? "PASS" : "FAIL") << "\n";
    write_output(opt.io, os.str());
}

}  // namespace

void register_forms_commands(CLI::App& app) {
    auto bernoulli_opt = std::make_shared<BernoulliOptions>();
    CLI::App* bernoulli = app.add_subcommand(
        "bernoulli", "Generalized Bernoulli number B_{k,psi} for a primitive character");
    bernoulli->add_option("--k", bernoulli_opt->k, "Weight index k >= 0")->required();
    bernoulli->add_option("--modulus", bernoulli_opt->modulus, "Character modulus")->required();
    bernoulli->add_option("--char-index", bernoulli_opt->index,
                          "Index into the characters_mod list");
    add_output_flag(bernoulli, bernoulli_opt->io);
    add_json_flag(bernoulli, bernoulli_opt->io);
    bernoulli->callback([bernoulli_opt]() { run_bernoulli(*bernoulli_opt); });

    auto chars_opt = std::make_shared<CharactersOptions>();
    CLI::App* chars =
        app.add_subcommand("characters", "List the Dirichlet characters modulo N");
    chars->add_option("--modulus", chars_opt->modulus, "Modulus N >= 1")->required();
    add_output_flag(chars, chars_opt->io);
    add_json_flag(chars, chars_opt->io);
    chars->callback([chars_opt]() { run_characters(*chars_opt); });

    auto eis_opt = std::make_shared<EisensteinOptions>();
    CLI::App* eis = app.add_subcommand(
        "eisenstein", "Eisenstein q-expansion E_{k,chi,psi} (or E_2 with --e2)");
    eis->add_option("--k", eis_opt->k, "Weight k >= 1");
    eis->add_option("--chi-modulus", eis_opt->chi_modulus, "Modulus of chi");
    eis->add_option("--chi-index", eis_opt->chi_index, "Index of chi");
    eis->add_option("--psi-modulus", eis_opt->psi_modulus, "Modulus of psi");
    eis->add_option("--psi-index", eis_opt->psi_index, "Index of psi");
    eis->add_option("--prec", eis_opt->prec, "Truncation order >= 2")->required();
    eis->add_flag("--e2", eis_opt->e2, "Produce E_2 instead (ignores character flags)");
    add_output_flag(eis, eis_opt->io);
    eis->callback([eis_opt]() { run_eisenstein(*eis_opt); });

    auto refine_opt = std::make_shared<RefineOptions>();
    CLI::App* refine = app.add_subcommand(
        "refine", "Ordinary or critical p-stabilization f(q) - c f(q^p)");
    refine->add_option("--mode", refine_opt->mode, "ord or crit")
        ->required()
        ->check(CLI::IsMember({"ord", "crit"}));
    refine->add_option("--prime", refine_opt->prime, "The prime p")->required();
    add_input_flag(refine, refine_opt->io);
    add_output_flag(refine, refine_opt->io);
    refine->callback([refine_opt]() { run_refine(*refine_opt); });

    auto hecke_opt = std::make_shared<HeckeOptions>();
    CLI::App* hecke = app.add_subcommand("hecke", "Apply a Hecke operator to a q-expansion");
    hecke->add_option("--op", hecke_opt->op, "Operator, e.g. T:7, U:5 or V:3")->required();
    add_input_flag(hecke, hecke_opt->io);
    add_output_flag(hecke, hecke_opt->io);
    hecke->callback([hecke_opt]() { run_hecke(*hecke_opt); });

    auto eigencheck_opt = std::make_shared<HeckeOptions>();
    CLI::App* eigen = app.add_subcommand(
        "eigencheck", "Eigenvalue of a Hecke operator on a q-expansion, if any");
    eigen->add_option("--op", eigencheck_opt->op, "Operator, e.g. U:5")->required();
    add_input_flag(eigen, eigencheck_opt->io);
    add_output_flag(eigen, eigencheck_opt->io);
    add_json_flag(eigen, eigencheck_opt->io);
    eigen->callback([eigencheck_opt]() { run_eigencheck(*eigencheck_opt); });

    auto system_opt = std::make_shared<EigenSystemOptions>();
    CLI::App* system = app.add_subcommand(
        "eigensystem", "Verify a whole eigenvalue system against a q-expansion");
    system->add_option("--spec", system_opt->spec_path, "Eigensystem JSON file")->required();
    add_input_flag(system, system_opt->io);
    add_output_flag(system, system_opt->io);
    add_json_flag(system, system_opt->io);
    system->callback([system_opt]() { run_eigensystem(*system_opt); });
}

}  // namespace eiscurve::cli
