#include "commands.hpp"

#include "eiscurve/error.hpp"

#include <memory>
#include <sstream>

namespace eiscurve::cli {

namespace {

struct SelmerOptions {
    std::string problem_path;
    long assume_dual = 0;
    bool has_assume = false;
    IoOptions io;
};

void run_selmer(const SelmerOptions& opt) {
    SelmerProblem problem = io::decode_selmer_problem(load_json_file(opt.problem_path));
    std::optional<int> assume;
    if (opt.has_assume) {
        if (opt.assume_dual < 0)
            throw Error(ErrorCode::argument, "--assume-dual must be non-negative");
        assume = static_cast<int>(opt.assume_dual);
    }
    SelmerResult result = selmer_dimension(problem, assume);
    if (opt.io.json) {
        emit_json(opt.io, io::encode_selmer_result(result));
        return;
    }
    std::ostringstream os;
    os << "dimension: " << result.symbolic << "\n";
    os << "ledger: ";
    for (std::size_t i = 0; i < result.ledger.size(); ++i) {
        if (i) os << ",";
        os << result.ledger[i].value;
    }
    os << "\n";
    for (const LedgerEntry& entry : result.ledger)
        os << "  " << entry.label << ": " << entry.value << " [" << entry.justification << "]\n";
    write_output(opt.io, os.str());
}

}  // namespace

void register_selmer_commands(CLI::App& app) {
    auto opt = std::make_shared<SelmerOptions>();
    CLI::App* selmer = app.add_subcommand(
        "selmer", "Selmer dimension of chi * omega_p^j with a term-by-term ledger");
    selmer->add_option("--problem", opt->problem_path, "Problem JSON file")->required();
    CLI::Option* assume =
        selmer->add_option("--assume-dual", opt->assume_dual,
                           "Assume this value for the dual Selmer term");
    add_output_flag(selmer, opt->io);
    add_json_flag(selmer, opt->io);
    selmer->callback([opt, assume]() {
        opt->has_assume = assume->count() > 0;
        run_selmer(*opt);
    });
}

}  // namespace eiscurve::cli
