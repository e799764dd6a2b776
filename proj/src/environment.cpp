#include "whichpath/environment.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "whichpath/errors.hpp"
#include "whichpath/kernels.hpp"

namespace whichpath {

namespace {

constexpr double kOverlapDomainTol = 1e-9;

kernels::Gate2 y_rotation(double theta)
{
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    return {cplx{c, 0.0}, cplx{-s, 0.0}, cplx{s, 0.0}, cplx{c, 0.0}};
}

// exp(-i τ H) for H = a|1><1| + (b/2)σ_x = (a/2)I + r n·σ with n = (b/2, 0, -a/2)/r.
kernels::Gate2 single_qubit_propagator(double a, double b, double tau)
{
    const double r = 0.5 * std::hypot(a, b);
    const cplx global = std::exp(cplx{0.0, -0.5 * a * tau});
    if (r == 0.0) return {global, cplx{}, cplx{}, global};
    const double nx = 0.5 * b / r;
    const double nz = -0.5 * a / r;
    const double c = std::cos(r * tau);
    const double s = std::sin(r * tau);
    const cplx i{0.0, 1.0};
    // cos(rτ) I - i sin(rτ)(nx σx + nz σz)
    return {global * (c - i * s * nz), global * (-i * s * nx), global * (-i * s * nx),
            global * (c + i * s * nz)};
}

void check_rates(const std::vector<double>& rates, unsigned n_qubits, const char* name)
{
    if (!rates.empty() && rates.size() != n_qubits)
        throw ShapeError(std::string("common unitary: ") + name + " has " +
                         std::to_string(rates.size()) + " entries for " + std::to_string(n_qubits) +
                         " qubits");
}

} // namespace

void RecorderSpec::validate() const
{
    if (n_qubits > kMaxQubits)
        throw CapacityError("recorder: n_qubits " + std::to_string(n_qubits) + " exceeds cap " +
                            std::to_string(kMaxQubits));
    if (!(kick_angle >= 0.0 && kick_angle <= std::numbers::pi))
        throw ConfigurationError("recorder: kick_angle must lie in [0, pi]");
}

EnvironmentState initial_env(unsigned n_qubits)
{
    if (n_qubits > kMaxQubits)
        throw CapacityError("initial_env: " + std::to_string(n_qubits) + " qubits exceeds cap " +
                            std::to_string(kMaxQubits));
    std::vector<cplx> amps(std::size_t{1} << n_qubits, cplx{0.0, 0.0});
    amps[0] = 1.0;
    return EnvironmentState(n_qubits, std::move(amps));
}

EnvironmentState apply_recorder(const EnvironmentState& env, const RecorderSpec& spec, Path path)
{
    spec.validate();
    if (env.n_qubits() != spec.n_qubits)
        throw ShapeError("apply_recorder: register has " + std::to_string(env.n_qubits()) +
                         " qubits, recorder expects " + std::to_string(spec.n_qubits));
    if (path != spec.record_on_path) return env;
    std::vector<cplx> amps(env.amplitudes().begin(), env.amplitudes().end());
    const kernels::Gate2 ry = y_rotation(spec.kick_angle);
    for (unsigned q = 0; q < spec.n_qubits; ++q) kernels::active::apply_qubit_gate(amps, q, ry);
    return EnvironmentState(env.n_qubits(), std::move(amps));
}

cplx branch_overlap_after_recording(const RecorderSpec& spec)
{
    const EnvironmentState start = initial_env(spec.n_qubits);
    return overlap_env(apply_recorder(start, spec, Path::A), apply_recorder(start, spec, Path::B));
}

EnvironmentState apply_common_unitary(const EnvironmentState& env, const CommonUnitarySpec& spec)
{
    check_rates(spec.phase_rates, env.n_qubits(), "phase_rates");
    check_rates(spec.flip_rates, env.n_qubits(), "flip_rates");
    if (!std::isfinite(spec.duration)) throw ConfigurationError("common unitary: non-finite duration");
    std::vector<cplx> amps(env.amplitudes().begin(), env.amplitudes().end());
    for (unsigned q = 0; q < env.n_qubits(); ++q) {
        const double a = spec.phase_rates.empty() ? 0.0 : spec.phase_rates[q];
        const double b = spec.flip_rates.empty() ? 0.0 : spec.flip_rates[q];
        kernels::active::apply_qubit_gate(amps, q, single_qubit_propagator(a, b, spec.duration));
    }
    return EnvironmentState(env.n_qubits(), std::move(amps));
}

double distinguishability(cplx gamma)
{
    const double mag = std::abs(gamma);
    if (!(mag <= 1.0 + kOverlapDomainTol))
        throw DomainError("distinguishability: |gamma| = " + std::to_string(mag) + " exceeds 1");
    return std::sqrt(std::max(0.0, 1.0 - mag * mag));
}

} // namespace whichpath
