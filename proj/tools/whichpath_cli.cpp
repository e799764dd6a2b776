// Command-line front end: run, sweep and validate.
//
// Exit statuses: 0 success, 1 configuration error, 2 numerical-consistency
// error (or a failed sweep row), 3 invariant failure in validate.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "whichpath/config.hpp"
#include "whichpath/errors.hpp"
#include "whichpath/experiment.hpp"
#include "whichpath/validate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitInvariant = 3;

int guarded(const char* command, const auto& body)
{
    try {
        return body();
    } catch (const whichpath::NumericalConsistencyError& e) {
        std::cerr << command << ": numerical consistency error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const whichpath::Error& e) {
        std::cerr << command << ": " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << command << ": " << e.what() << '\n';
        return kExitConfig;
    }
}

int cmd_run(const std::string& config_path, const std::string& output_dir)
{
    return guarded("run", [&] {
        const whichpath::ExperimentConfig cfg = whichpath::load_experiment_config(config_path);
        const whichpath::RunResult result = whichpath::compute_run(cfg);
        whichpath::write_run_outputs(cfg, result, output_dir);
        for (const auto& [name, ok] : result.invariant_checks)
            if (!ok) std::cerr << "run: check failed: " << name << '\n';
        return result.all_checks_pass() ? kExitOk : kExitNumerical;
    });
}

int cmd_sweep(const std::string& config_path, const std::string& output_dir)
{
    return guarded("sweep", [&] {
        const whichpath::SweepConfig cfg = whichpath::load_sweep_config(config_path);
        const auto rows = whichpath::run_sweep(cfg);
        const auto path = whichpath::resolve_output(cfg.sweep_file, output_dir);
        if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
        std::ofstream out(path, std::ios::binary);
        if (!out) throw whichpath::ConfigurationError("cannot write " + path.string());
        whichpath::write_sweep_csv(out, rows);
        int status = kExitOk;
        for (const auto& row : rows) {
            if (!row.ok) {
                std::cerr << "sweep: " << whichpath::to_string(cfg.parameter) << " = " << row.param_value
                          << " failed: " << row.status << '\n';
                status = kExitNumerical;
            }
        }
        return status;
    });
}

int cmd_validate(bool list_only, double tolerance_scale)
{
    if (list_only) {
        for (const auto& check : whichpath::invariant_suite()) std::cout << check.name << '\n';
        return kExitOk;
    }
    bool all_pass = true;
    for (const auto& r : whichpath::run_invariant_suite(tolerance_scale)) {
        char line[256];
        std::snprintf(line, sizeof line, "%-4s %-44s residual %-12.3e tolerance %.3e", r.pass ? "PASS" : "FAIL",
                      r.name.c_str(), r.residual, r.tolerance);
        std::cout << line;
        if (!r.error.empty()) std::cout << "  error: " << r.error;
        std::cout << '\n';
        all_pass = all_pass && r.pass;
    }
    return all_pass ? kExitOk : kExitInvariant;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Two-path interference of a composite object with an internal which-path recorder"};
    app.require_subcommand(1);

    std::string output_dir;
    app.add_option("--output-dir", output_dir, "Write output files into this directory");

    std::string run_config;
    auto* run = app.add_subcommand("run", "Run one experiment configuration");
    run->add_option("config", run_config, "Experiment config (JSON)")->required();

    std::string sweep_config;
    auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep");
    sweep->add_option("config", sweep_config, "Sweep config (JSON)")->required();

    bool list_only = false;
    double tolerance_scale = 1.0;
    auto* validate = app.add_subcommand("validate", "Run the invariant suite");
    validate->add_flag("--list", list_only, "Print invariant names without running them");
    validate->add_option("--tolerance-scale", tolerance_scale, "Multiply every tolerance (fault injection)")
        ->check(CLI::NonNegativeNumber);

    for (auto* sub : {run, sweep}) sub->add_option("--output-dir", output_dir, "Write output files into this directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    if (*run) return cmd_run(run_config, output_dir);
    if (*sweep) return cmd_sweep(sweep_config, output_dir);
    return cmd_validate(list_only, tolerance_scale);
}
