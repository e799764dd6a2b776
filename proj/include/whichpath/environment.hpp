#pragma once

// Path-conditional recording dynamics of the internal environment.
//
// The recorder rotates every qubit of the register about the Bloch y-axis by
// kick_angle when the object takes `record_on_path`, and does nothing on the
// other path. The two branch environments then overlap by cos(θ/2)^M: θ = 0
// leaves them identical, θ = π makes them orthogonal.

#include <complex>
#include <vector>

#include "whichpath/core.hpp"

namespace whichpath {

struct RecorderSpec {
    unsigned n_qubits = 0;
    double kick_angle = 0.0;
    Path record_on_path = Path::B;

    /// Throws ConfigurationError / CapacityError for θ outside [0, π] or M > kMaxQubits.
    void validate() const;
};

/// Common internal dynamics applied identically to both branches. Qubit k
/// evolves under H_k = phase_rates[k] |1><1| + (flip_rates[k]/2) σ_x for
/// `duration`. Empty rate vectors mean zero rates; otherwise each must have
/// one entry per qubit.
struct CommonUnitarySpec {
    std::vector<double> phase_rates;
    std::vector<double> flip_rates;
    double duration = 0.0;
};

/// All-|0> product state of M qubits.
EnvironmentState initial_env(unsigned n_qubits);

EnvironmentState apply_recorder(const EnvironmentState& env, const RecorderSpec& spec, Path path);

/// <Φ_B|Φ_A> after recording the initial register on each path.
cplx branch_overlap_after_recording(const RecorderSpec& spec);

EnvironmentState apply_common_unitary(const EnvironmentState& env, const CommonUnitarySpec& spec);

/// sqrt(1 - |γ|²); DomainError when |γ| > 1 + 1e-9.
double distinguishability(cplx gamma);

} // namespace whichpath
