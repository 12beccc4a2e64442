// twomode: evolve / steady-sweep / validate from a key-value config.
//
// Exit codes: 0 ok, 1 unexpected failure, 2 bad config or input,
// 3 unstable dynamics, 4 numerical failure.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "twomode/cli.hpp"
#include "twomode/errors.hpp"

namespace {

int exit_code(twomode::ErrorCategory category) {
    switch (category) {
    case twomode::ErrorCategory::Input: return 2;
    case twomode::ErrorCategory::Stability: return 3;
    case twomode::ErrorCategory::Numerical: return 4;
    }
    return 1;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two coupled damped oscillators: local vs nonlocal dissipation"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    bool use_oracle = false;

    auto* evolve = app.add_subcommand("evolve", "Time evolution under one or both damping models");
    auto* sweep = app.add_subcommand("steady-sweep", "Steady-state quantities over an nbar grid");
    auto* check = app.add_subcommand("validate", "Parse and check a config without running it");
    for (auto* sub : {evolve, sweep, check}) {
        sub->add_option("--config", config_path, "Config file")->required();
    }
    for (auto* sub : {evolve, sweep}) {
        sub->add_option("--out", out_path, "Output CSV path (default stdout)");
    }
    evolve->add_flag("--oracle", use_oracle, "Use the truncated Fock integrator")->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const auto config = twomode::cli::load_config(config_path);
        if (evolve->parsed()) {
            write_output(out_path, twomode::cli::run_evolve(config, use_oracle));
        } else if (sweep->parsed()) {
            write_output(out_path, twomode::cli::run_steady_sweep(config));
        } else {
            twomode::cli::validate_for_evolve(config);
            if (!config.nbar_grid.empty()) twomode::cli::validate_for_sweep(config);
            std::cerr << "config ok\n";
        }
    } catch (const twomode::ConfigError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const twomode::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code(e.category());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
