#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace greenbound::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kViolations = 1,  // verify found bound violations
    kUsage = 2,       // bad flags, unreadable or malformed input
    kDichotomy = 3,   // spectrum meets the imaginary axis
    kNumerical = 4,   // eigen/expm/quadrature failure
};

struct RunConfig {
    std::string command;
    std::optional<std::string> matrix_path;
    std::optional<double> t;
    std::optional<double> t_min;
    std::optional<double> t_max;
    int steps = 0;
    int trials = 50;
    std::uint64_t seed = 0;
    int dimension = 4;
    std::string forcing = "constant";
    double omega = 1.0;
    std::optional<std::string> vector;
    double eps = 1e-6;
    std::optional<std::string> output_path;
    std::optional<std::string> format;
};

/// Runs one command. `args` excludes the program name. Reports go to `out`
/// (or the --out file); diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_spectrum(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_green(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_bound(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_solve(const RunConfig& config, std::ostream& out, std::ostream& err);

/// %.17g formatting; round-trips every double.
[[nodiscard]] std::string format_double(double x);

}  // namespace greenbound::cli
