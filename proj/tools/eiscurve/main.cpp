#include "commands.hpp"

#include "eiscurve/error.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace eiscurve::cli {

void add_input_flag(CLI::App* cmd, IoOptions& io) {
    cmd->add_option("--input,-i", io.input, "Input file (default: stdin)");
}

void add_output_flag(CLI::App* cmd, IoOptions& io) {
    cmd->add_option("--output,-o", io.output, "Output file (default: stdout)");
}

void add_json_flag(CLI::App* cmd, IoOptions& io) {
    cmd->add_flag("--json", io.json, "Structured JSON output");
}

std::string read_input(const IoOptions& io) {
    if (io.input == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin),
                           std::istreambuf_iterator<char>());
    }
    std::ifstream in(io.input);
    if (!in) throw Error(ErrorCode::argument, "cannot open input file " + io.input);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_output(const IoOptions& io, const std::string& text) {
    if (io.output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(io.output);
    if (!out) throw Error(ErrorCode::argument, "cannot open output file " + io.output);
    out << text;
}

io::json load_json(const IoOptions& io) {
    return io::parse_document(read_input(io));
}

io::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::argument, "cannot open file " + path);
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return io::parse_document(text);
}

void emit_json(const IoOptions& io, const io::json& payload) {
    write_output(io, payload.dump(2) + "\n");
}

QExpansion load_qexpansion(const IoOptions& io) {
    return io::decode_qexpansion(load_json(io));
}

DirichletCharacter character_by_index(long modulus, long index) {
    if (modulus < 1) throw Error(ErrorCode::argument, "modulus must be >= 1");
    auto all = characters_mod(modulus);
    if (index < 0 || index >= static_cast<long>(all.size()))
        throw Error(ErrorCode::argument,
                    "char index out of range; modulus " + std::to_string(modulus) + " has " +
                        std::to_string(all.size()) + " characters");
    return all[index];
}

}  // namespace eiscurve::cli

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic for Eisenstein q-expansions, Hecke eigen-systems,\n"
                 "Selmer dimension ledgers and Bruhat-Tits stable lattices"};
    app.require_subcommand(1);

    eiscurve::cli::register_forms_commands(app);
    eiscurve::cli::register_selmer_commands(app);
    eiscurve::cli::register_btree_commands(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    } catch (const eiscurve::Error& e) {
        std::cerr << "eiscurve: error[" << e.code_name() << "] " << e.what() << "\n";
        return e.exit_status();
    } catch (const std::exception& e) {
        std::cerr << "eiscurve: error[internal] " << e.what() << "\n";
        return 1;
    }
    return 0;
}
