// cli.hpp: run configuration, CSV production, and the config file format
//
// Config files hold one `key = value` per line; `#` starts a comment.
// See README.md for the list of keys.

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "twomode/model.hpp"

namespace twomode::cli {

enum class ModelChoice { Local, Nonlocal, Both };

enum class Output { NA, NB, LogNeg, FidelityA, FidelityB, Covariance };

struct RunConfig {
    ModelParams params;
    InitialState initial;
    ModelChoice model{ModelChoice::Both};
    double t_max{20.0};
    double dt_out{0.1};
    std::vector<Output> outputs;   // canonical order, no duplicates
    std::vector<double> nbar_grid; // steady-sweep only
    int oracle_cutoff{10};
    std::map<std::string, int> key_lines; // key -> 1-based line, for diagnostics
};

/// Parses the key-value format. Throws ConfigError with line and key.
/// Physical validation is left to validate_for_evolve.
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::string& path);

/// Cross-field checks for `evolve`: fidelity outputs need model = both,
/// time grid positive, parameters valid. Throws ConfigError or domain errors.
void validate_for_evolve(const RunConfig& config);

/// Checks for `steady-sweep`: nonempty, nonnegative, nondecreasing grid.
void validate_for_sweep(const RunConfig& config);

/// CSV with header `t,...`; one row per output time.
/// `use_oracle` swaps the Gaussian path for the truncated Fock integrator.
std::string run_evolve(const RunConfig& config, bool use_oracle = false);

/// CSV with header `nbar,logneg_local,logneg_nonlocal,fidelity_onemode`.
std::string run_steady_sweep(const RunConfig& config);

/// General notation, 12 significant digits, independent of locale.
std::string format_number(double value);

/// Splits CSV text into rows of fields (no quoting support needed).
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

} // namespace twomode::cli
