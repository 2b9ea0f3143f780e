#pragma once

#include <optional>
#include <string>

#include "qdef_cli/spec_io.hpp"

namespace qdef_cli {

// Exit codes: 0 PositiveDefinite, 1 PositiveSemidefiniteOnly, 2 Indefinite,
// 3 AnalyticInconclusive, 64 spec/usage errors, 66 unwritable output.
inline constexpr int kExitSpecError = 64;
inline constexpr int kExitCannotWrite = 66;

struct CommandResult {
    int exit_code;
    std::string output; // report text (or error diagnostic)
};

struct CheckOptions {
    bool json = false;
    double tolerance = 1e-9;
};

struct OracleOptions {
    bool json = false;
    double tolerance = 1e-9;
    int grid = 4096;
};

struct ScanAxis {
    std::string name;
    double lo = 0.0;
    double hi = 0.0;
    int steps = 0;
};

struct ScanOptions {
    ScanAxis axis1, axis2;
    std::string output_path;
    int workers = 1;
    double tolerance = 1e-9;
};

/// Shortest round-trip decimal form; locale-free and deterministic.
std::string format_double(double v);

CommandResult run_check(const PotentialSpec& spec, const CheckOptions& opt);
CommandResult run_oracle(const PotentialSpec& spec, const OracleOptions& opt);
CommandResult run_scan(const PotentialSpec& base, const ScanOptions& opt);

/// "name:min:max:steps" -> axis; nullopt when malformed.
std::optional<ScanAxis> parse_axis(const std::string& text);

} // namespace qdef_cli
