#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sigma/dsl.hpp"
#include "sigma/poly.hpp"
#include "sigma/recurrence.hpp"

namespace sigma {

enum ExitCode : int {
    kExitOk = 0,
    kExitInput = 1,
    kExitCapability = 2,
    kExitVerification = 3,
};

struct CliOptions {
    long terms = 10;
    long verify_upto = kSelfCheckDepth;
    bool json = false;
    Display display = Display::Exps;
    std::vector<double> s_grid{1.0, 1.5, 2.0};
    double tol = 1e-9;
    /// verify: JSON closed form to check instead of the solver's own.
    std::optional<std::string> closed_form_file;
};

struct CommandResult {
    int exit_code = kExitOk;
    std::string out;
    std::string err;
};

/// Each command maps library exceptions to the exit-code contract:
/// 1 parse/semantic/input error, 2 capability error, 3 verification failure.
CommandResult cmd_solve(const std::string& program_text, const CliOptions& opts);
CommandResult cmd_verify(const std::string& program_text, const CliOptions& opts);
CommandResult cmd_table(const CliOptions& opts);

/// Rows of the transform table as (sequence, transform) text pairs.
std::vector<std::pair<std::string, std::string>> transform_table(Display display);

/// Full command line: "solve|verify|table [file|-] [-e text] [flags]".
/// Program text comes from -e, the file argument, or `in` (stdin).
CommandResult run_cli(const std::vector<std::string>& args, std::istream& in);

} // namespace sigma
