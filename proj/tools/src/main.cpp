#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qdef_cli/commands.hpp"
#include "qdef_cli/spec_io.hpp"

namespace {

using namespace qdef_cli;

std::optional<Arith> parse_arith_flag(const std::string& s) {
    if (s == "float") return Arith::Float;
    if (s == "rational") return Arith::Rational;
    return std::nullopt;
}

int fail_spec(const SpecError& err) {
    std::cerr << "error: " << err.message << "\n";
    return kExitSpecError;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Definiteness certificates for quartic scalar potentials"};
    app.require_subcommand(1);

    std::string file, arith_flag, out_path, axis1_text, axis2_text;
    bool as_json = false;
    double tolerance = 1e-9;
    int grid = 4096;
    int workers = 1;

    auto* check = app.add_subcommand("check", "Classify a potential with the closed-form tests");
    check->add_option("file", file, "potential spec (JSON)")->required();
    check->add_flag("--json", as_json, "emit a single JSON object");
    check->add_option("--tolerance", tolerance, "relative comparison band (float mode)");
    check->add_option("--arith", arith_flag, "force arithmetic: float|rational");

    auto* oracle = app.add_subcommand("oracle", "Minimize the potential on the unit sphere");
    oracle->add_option("file", file, "potential spec (JSON)")->required();
    oracle->add_flag("--json", as_json, "emit a single JSON object");
    oracle->add_option("--grid", grid, "outer samples for the 3-D sweep");
    oracle->add_option("--tolerance", tolerance, "sign-classification band");

    auto* scan = app.add_subcommand("scan", "Classify a 2-parameter grid into a CSV");
    scan->add_option("file", file, "base potential spec (JSON)")->required();
    scan->add_option("--axis1", axis1_text, "name:min:max:steps (outer, row-major)")->required();
    scan->add_option("--axis2", axis2_text, "name:min:max:steps (inner)")->required();
    scan->add_option("-o,--output", out_path, "output CSV path")->required();
    scan->add_option("--workers", workers, "concurrent grid workers (output is index-ordered)");
    scan->add_option("--tolerance", tolerance, "relative comparison band");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitSpecError;
    }

    std::optional<Arith> forced;
    if (!arith_flag.empty()) {
        forced = parse_arith_flag(arith_flag);
        if (!forced) {
            std::cerr << "error: --arith must be float or rational\n";
            return kExitSpecError;
        }
    }

    auto loaded = load_potential_spec(file, forced);
    if (std::holds_alternative<SpecError>(loaded)) return fail_spec(std::get<SpecError>(loaded));
    const PotentialSpec& spec = std::get<PotentialSpec>(loaded);

    try {
        if (check->parsed()) {
            const CommandResult r = run_check(spec, CheckOptions{as_json, tolerance});
            std::cout << r.output;
            return r.exit_code;
        }
        if (oracle->parsed()) {
            const CommandResult r = run_oracle(spec, OracleOptions{as_json, tolerance, grid});
            std::cout << r.output;
            return r.exit_code;
        }
        if (scan->parsed()) {
            const auto a1 = parse_axis(axis1_text);
            const auto a2 = parse_axis(axis2_text);
            if (!a1 || !a2) {
                std::cerr << "error: axes must be name:min:max:steps\n";
                return kExitSpecError;
            }
            ScanOptions so;
            so.axis1 = *a1;
            so.axis2 = *a2;
            so.output_path = out_path;
            so.workers = workers;
            so.tolerance = tolerance;
            const CommandResult r = run_scan(spec, so);
            if (r.exit_code == 0) std::cout << r.output;
            else std::cerr << "error: " << r.output << "\n";
            return r.exit_code;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSpecError;
    }
    return kExitSpecError;
}
