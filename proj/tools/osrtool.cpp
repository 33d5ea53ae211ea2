/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The osrkit authors
 */

// osrtool: command-line driver over the osr C interface.
//
// Exit status: 0 success, 1 a theorem verdict failed, 2 input error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>

#include "osr/osr.h"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verdict = 1;
constexpr int exit_input = 2;

struct Input {
    std::string file;
    std::string builder;
    bool json = false;
    bool timings = false;
    std::string target = "idl";
};

using Handle = std::unique_ptr<osr_semiring, decltype(&osr_semiring_free)>;

int exit_code(osr_status status)
{
    switch (status) {
    case OSR_OK:
        return exit_ok;
    case OSR_ERR_VERIFICATION:
    case OSR_ERR_INTERNAL:
        return exit_verdict;
    default:
        return exit_input;
    }
}

int report_error(osr_status status)
{
    std::cerr << "osrtool: " << osr_last_error_message() << "\n";
    return exit_code(status);
}

int run(osr_command command, const Input& in)
{
    if (in.file.empty() == in.builder.empty()) {
        std::cerr << "osrtool: give exactly one of FILE or --builder NAME:ARG\n";
        return exit_input;
    }
    osr_semiring* raw = nullptr;
    osr_status status;
    if (!in.builder.empty()) {
        status = osr_semiring_build(in.builder.c_str(), &raw);
    } else {
        std::ifstream file(in.file, std::ios::binary);
        if (!file) {
            std::cerr << "osrtool: cannot open " << in.file << "\n";
            return exit_input;
        }
        std::ostringstream text;
        text << file.rdbuf();
        const std::string s = text.str();
        status = osr_semiring_parse(s.data(), s.size(), &raw);
        if (status != OSR_OK && osr_last_error_line() != 0) {
            std::cerr << in.file << ":" << osr_last_error_line() << ":" << osr_last_error_column() << ": ";
        }
    }
    if (status != OSR_OK) {
        return report_error(status);
    }
    Handle semiring(raw, osr_semiring_free);

    unsigned flags = 0;
    flags |= in.json ? unsigned{OSR_FLAG_JSON} : 0U;
    flags |= in.timings ? unsigned{OSR_FLAG_TIMINGS} : 0U;
    char* out = nullptr;
    status = osr_run(semiring.get(), command, flags, &out);
    if (out) {
        std::fputs(out, stdout);
        osr_string_free(out);
    }
    if (status != OSR_OK) {
        return report_error(status);
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Finite ordered semirings: ideals, radicals, spectra and verification"};
    app.require_subcommand(1);

    Input in;
    const std::map<std::string, osr_command> commands = {
        {"validate", OSR_CMD_VALIDATE}, {"ideals", OSR_CMD_IDEALS}, {"radicals", OSR_CMD_RADICALS},
        {"primes", OSR_CMD_PRIMES},     {"spec", OSR_CMD_SPEC},     {"reflect", OSR_CMD_REFLECT},
        {"pt", OSR_CMD_PT},             {"check", OSR_CMD_CHECK},   {"dot", OSR_CMD_DOT_IDL},
    };
    const std::map<std::string, std::string> help = {
        {"validate", "check the ordered-semiring laws"},
        {"ideals", "list Idl(A) in canonical order"},
        {"radicals", "list Rad(A) and the radicals of principal ideals"},
        {"primes", "list prime ideals, marking maximal ones"},
        {"spec", "prime spectrum with its basic opens"},
        {"reflect", "distributive lattice reflection L(A)"},
        {"pt", "points of the frame Rad(A)"},
        {"check", "run every verification and report verdicts"},
        {"dot", "Hasse diagram in DOT"},
    };

    osr_command selected = OSR_CMD_VALIDATE;
    for (const auto& [name, command] : commands) {
        CLI::App* sub = app.add_subcommand(name, help.at(name));
        sub->add_option("file", in.file, ".osr input file");
        sub->add_option("--builder", in.builder, "builtin instance, e.g. zmod:6, chain:3, bool:2");
        if (name != "dot") {
            sub->add_flag("--json", in.json, "machine-readable output");
        }
        if (name == "check") {
            sub->add_flag("--timings", in.timings, "include per-phase timings");
        }
        if (name == "dot") {
            sub->add_option("--target", in.target, "idl, rad or spec")
                ->check(CLI::IsMember({"idl", "rad", "spec"}));
        }
        sub->callback([&selected, command = command] { selected = command; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? exit_ok : exit_input;
    }

    if (selected == OSR_CMD_DOT_IDL) {
        selected = in.target == "rad" ? OSR_CMD_DOT_RAD : in.target == "spec" ? OSR_CMD_DOT_SPEC : OSR_CMD_DOT_IDL;
    }
    return run(selected, in);
}
