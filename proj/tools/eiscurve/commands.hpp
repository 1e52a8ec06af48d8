#pragma once

#include "eiscurve/json_io.hpp"

#include <CLI11.hpp>

#include <optional>
#include <string>

namespace eiscurve::cli {

// Shared --input/--output/--json plumbing for every subcommand.
struct IoOptions {
    std::string input = "-";   // "-" is stdin
    std::string output = "-";  // "-" is stdout
    bool json = false;
};

void add_input_flag(CLI::App* cmd, IoOptions& io);
void add_output_flag(CLI::App* cmd, IoOptions& io);
void add_json_flag(CLI::App* cmd, IoOptions& io);

std::string read_input(const IoOptions& io);
void write_output(const IoOptions& io, const std::string& text);

io::json load_json(const IoOptions& io);
io::json load_json_file(const std::string& path);
void emit_json(const IoOptions& io, const io::json& payload);

QExpansion load_qexpansion(const IoOptions& io);

// characters_mod lookup by CLI index.
DirichletCharacter character_by_index(long modulus, long index);

void register_forms_commands(CLI::App& app);
void register_selmer_commands(CLI::App& app);
void register_btree_commands(CLI::App& app);

}  // namespace eiscurve::cli
