#pragma once

// Strict JSON experiment and sweep configurations.
//
// Experiment file:
//   {
//     "geometry": {"slit_separation": 20, "packet_width": 1, "propagation_time": 800},
//     "recorder": {"n_qubits": 4, "kick_angle": 0.5, "record_on_path": "B"},
//     "grid":     {"x_min": -4096, "x_max": 4096, "n_points": 16384},
//     "numerics": {"propagator": "analytic", "dt": 0.001, "envelope_threshold": 0.25},
//     "outputs":  {"pattern_file": "pattern.csv", "summary_file": "summary.json"}
//   }
// geometry and recorder (except record_on_path) are required; the remaining
// sections and keys fall back to the defaults below. Unknown keys are errors.
//
// Sweep file:
//   {
//     "base":   { ...experiment... },
//     "sweep":  {"parameter": "kick_angle" | "n_qubits" | "slit_separation",
//                "values": [...], "parallelism": 4},
//     "output": {"sweep_file": "sweep.csv"}
//   }

#include <filesystem>
#include <string>
#include <vector>

#include "whichpath/core.hpp"
#include "whichpath/environment.hpp"
#include "whichpath/propagation.hpp"

namespace whichpath {

struct GridConfig {
    double x_min = -4096.0;
    double x_max = 4096.0;
    std::size_t n_points = 16384;

    SpatialGrid make() const { return SpatialGrid(x_min, x_max, n_points); }
};

struct NumericsConfig {
    PropagationMethod propagation{};
    double envelope_threshold = 0.25;
};

struct OutputConfig {
    std::filesystem::path pattern_file = "pattern.csv";
    std::filesystem::path summary_file = "summary.json";
};

struct ExperimentConfig {
    TwoSlitGeometry geometry;
    RecorderSpec recorder;
    GridConfig grid;
    NumericsConfig numerics;
    OutputConfig outputs;

    /// Every constituent invariant, including the grid-covers-geometry margin.
    void validate() const;
};

enum class SweepParameter { kick_angle, n_qubits, slit_separation };

const char* to_string(SweepParameter p);

struct SweepConfig {
    ExperimentConfig base;
    SweepParameter parameter = SweepParameter::kick_angle;
    std::vector<double> values;
    unsigned parallelism = 1;
    std::filesystem::path sweep_file = "sweep.csv";

    /// base with the swept parameter set to `value`.
    ExperimentConfig at(double value) const;
    void validate() const;
};

/// Far-field reference setup used by validate and the tests: σ0 = 1, d = 20,
/// t = 800 on the default grid. Branch envelopes coincide to within ~1e-3 in the
/// fringe region, giving about five resolved fringes.
ExperimentConfig reference_experiment(unsigned n_qubits, double kick_angle);

/// ConfigurationError on malformed JSON, unknown keys, wrong types or
/// out-of-domain values; the returned config has passed validate().
ExperimentConfig parse_experiment_config(const std::string& text);
SweepConfig parse_sweep_config(const std::string& text);

ExperimentConfig load_experiment_config(const std::filesystem::path& path);
SweepConfig load_sweep_config(const std::filesystem::path& path);

} // namespace whichpath
