#pragma once

// End-to-end pipeline behind the `run` and `sweep` commands.

#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "whichpath/config.hpp"
#include "whichpath/densmat.hpp"
#include "whichpath/interference.hpp"

namespace whichpath {

struct RunResult {
    cplx gamma;
    /// Empty when the pattern has no resolvable fringes.
    std::optional<VisibilityReport> visibility;
    double distinguishability;
    double purity;
    double coherence;
    ReducedDensityMatrix2 rho;
    DetectionPattern two_path;
    DetectionPattern path_a;
    DetectionPattern path_b;
    /// Check name -> passed. Checks that do not apply to the configuration are absent.
    std::map<std::string, bool> invariant_checks;

    bool all_checks_pass() const;
};

/// Builds the branches, patterns, visibility and reduced density matrix for one
/// configuration and runs the per-run consistency checks.
RunResult compute_run(const ExperimentConfig& cfg);

/// Header x,intensity_two_path,intensity_A,intensity_B,intensity_incoherent; %.17g.
void write_pattern_csv(std::ostream& out, const RunResult& r);
/// Summary document (gamma, visibility, distinguishability, purity, coherence,
/// fringe_spacing, rho, invariant_checks) serialized with two-space indent.
std::string summary_json(const RunResult& r);

/// Writes both files; a non-empty output_dir replaces the directories of the
/// configured paths.
void write_run_outputs(const ExperimentConfig& cfg, const RunResult& r, const std::filesystem::path& output_dir);

struct SweepRow {
    double param_value;
    /// Pipeline finished and every per-run check passed.
    bool ok;
    /// Pipeline finished (numeric columns are meaningful).
    bool computed;
    std::string status;
    cplx gamma;
    std::optional<double> visibility;
    double distinguishability;
    double purity;
};

/// One row per value, in input order; at most cfg.parallelism runs at once.
/// A failed run yields a row with ok = false and the error text as status.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg);

/// Header param_value,gamma_re,gamma_im,visibility,distinguishability,purity,status.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

std::filesystem::path resolve_output(const std::filesystem::path& configured, const std::filesystem::path& output_dir);

} // namespace whichpath
