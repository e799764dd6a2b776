#pragma once

// Center-of-mass propagation under H_0 = P²/2 + V(X) on a periodic grid.

#include <cstdint>
#include <vector>

#include "whichpath/core.hpp"
#include "whichpath/environment.hpp"

namespace whichpath {

struct GaussianPacketSpec {
    double center = 0.0;
    double momentum = 0.0;
    /// Position standard deviation σ0 of |ψ|² at t = 0.
    double width = 1.0;
    double global_phase = 0.0;
};

/// Real potential sampled on a grid.
class PotentialSpec {
public:
    static PotentialSpec zero(const SpatialGrid& grid);
    /// V(X) = ω²(X - center)²/2.
    static PotentialSpec harmonic(const SpatialGrid& grid, double omega, double center = 0.0);
    static PotentialSpec table(const SpatialGrid& grid, std::vector<double> values);

    const SpatialGrid& grid() const { return grid_; }
    const std::vector<double>& values() const { return values_; }

private:
    PotentialSpec(SpatialGrid grid, std::vector<double> values);

    SpatialGrid grid_;
    std::vector<double> values_;
};

/// Symmetric slits at ±d/2 with identical Gaussian packets of width σ0 and no
/// transverse momentum; longitudinal motion is folded into propagation_time.
struct TwoSlitGeometry {
    double slit_separation = 0.0;
    double packet_width = 0.0;
    double propagation_time = 0.0;

    void validate() const;
    /// σ(t) = σ0 sqrt(1 + (t / 2σ0²)²).
    double width_at_detection() const;
    /// ConfigurationError unless the grid spans both slits plus 6σ(t) on each side.
    void check_fits(const SpatialGrid& grid) const;
};

struct PropagationMethod {
    enum class Kind { analytic, split_step };
    Kind kind = Kind::analytic;
    /// Requested step for split_step; the step actually used is t / round(t / dt).
    double dt = 1e-3;
};

/// σ(t) for a free packet of initial width σ0.
double free_width(double sigma0, double t);

/// Closed-form free evolution of a Gaussian packet. TruncationError when the
/// amplitude at either grid edge exceeds 1e-8 of the peak amplitude.
GridWavefunction free_gaussian_evolve(const GaussianPacketSpec& spec, double t, const SpatialGrid& grid);

/// Strang splitting exp(-iV dt/2) exp(-iP² dt/2) exp(-iV dt/2), n_steps times.
/// Any finite nonzero dt is accepted (negative dt runs backwards). ResolutionError
/// when the spectrum at the Nyquist edge exceeds 1e-8 of its peak, before or after.
GridWavefunction split_step(const GridWavefunction& psi, const PotentialSpec& v, double dt,
                            std::int64_t n_steps);

/// <X> = Σ x_i |ψ_i|² dx.
double position_expectation(const GridWavefunction& psi);

/// <P> evaluated in momentum space.
double momentum_expectation(const GridWavefunction& psi);

TwoPathState make_two_path_branches(const TwoSlitGeometry& geom, const RecorderSpec& recorder,
                                    const SpatialGrid& grid, const PropagationMethod& method = {});

} // namespace whichpath
