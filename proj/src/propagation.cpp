#include "whichpath/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fft.hpp"
#include "whichpath/errors.hpp"
#include "whichpath/kernels.hpp"

namespace whichpath {

namespace {

constexpr double kEdgeAmplitudeRatio = 1e-8;
constexpr double kNyquistAmplitudeRatio = 1e-8;

// Angular wavenumber of DFT bin i on a periodic grid.
std::vector<double> wavenumbers(const SpatialGrid& grid)
{
    const std::size_t n = grid.size();
    const double dk = 2.0 * std::numbers::pi / (grid.x_max() - grid.x_min());
    std::vector<double> k(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto signed_i = i < n / 2 ? static_cast<double>(i) : static_cast<double>(i) - static_cast<double>(n);
        k[i] = signed_i * dk;
    }
    return k;
}

void check_nyquist(std::span<const cplx> spectrum, const char* when)
{
    const std::size_t n = spectrum.size();
    double peak = 0.0;
    for (const cplx& z : spectrum) peak = std::max(peak, std::abs(z));
    double edge = 0.0;
    for (std::size_t i = n / 2 - 1; i <= n / 2 + 1; ++i) edge = std::max(edge, std::abs(spectrum[i]));
    if (edge > kNyquistAmplitudeRatio * peak)
        throw ResolutionError(std::string("split_step: momentum content at the Nyquist edge ") + when +
                              " (ratio " + std::to_string(edge / peak) + "); refine the grid");
}

} // namespace

PotentialSpec::PotentialSpec(SpatialGrid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values))
{
    if (values_.size() != grid_.size())
        throw ShapeError("potential has " + std::to_string(values_.size()) + " samples on a " +
                         std::to_string(grid_.size()) + "-point grid");
    for (double v : values_)
        if (!std::isfinite(v)) throw ConfigurationError("potential: non-finite sample");
}

PotentialSpec PotentialSpec::zero(const SpatialGrid& grid)
{
    return PotentialSpec(grid, std::vector<double>(grid.size(), 0.0));
}

PotentialSpec PotentialSpec::harmonic(const SpatialGrid& grid, double omega, double center)
{
    std::vector<double> v(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double y = grid.x(i) - center;
        v[i] = 0.5 * omega * omega * y * y;
    }
    return PotentialSpec(grid, std::move(v));
}

PotentialSpec PotentialSpec::table(const SpatialGrid& grid, std::vector<double> values)
{
    return PotentialSpec(grid, std::move(values));
}

void TwoSlitGeometry::validate() const
{
    if (!(slit_separation > 0.0) || !std::isfinite(slit_separation))
        throw ConfigurationError("geometry: slit_separation must be positive");
    if (!(packet_width > 0.0) || !std::isfinite(packet_width))
        throw ConfigurationError("geometry: packet_width must be positive");
    if (!(propagation_time >= 0.0) || !std::isfinite(propagation_time))
        throw ConfigurationError("geometry: propagation_time must be non-negative");
}

double TwoSlitGeometry::width_at_detection() const { return free_width(packet_width, propagation_time); }

void TwoSlitGeometry::check_fits(const SpatialGrid& grid) const
{
    const double reach = 0.5 * slit_separation + 6.0 * width_at_detection();
    if (grid.x_min() > -reach || grid.x_max() < reach)
        throw ConfigurationError("geometry: grid [" + std::to_string(grid.x_min()) + ", " +
                                 std::to_string(grid.x_max()) + "] must cover +/-" +
                                 std::to_string(reach) + " (slits plus 6 sigma(t))");
}

double free_width(double sigma0, double t)
{
    const double tau = t / (2.0 * sigma0 * sigma0);
    return sigma0 * std::sqrt(1.0 + tau * tau);
}

GridWavefunction free_gaussian_evolve(const GaussianPacketSpec& spec, double t, const SpatialGrid& grid)
{
    if (!(spec.width > 0.0)) throw ConfigurationError("gaussian packet: width must be positive");
    if (!(t >= 0.0) || !std::isfinite(t)) throw ConfigurationError("free_gaussian_evolve: need t >= 0");
    const double s0 = spec.width;
    const cplx st = s0 * cplx{1.0, t / (2.0 * s0 * s0)};
    const cplx prefactor = std::pow(2.0 * std::numbers::pi * s0 * s0, -0.25) * std::sqrt(s0 / st);
    const double k0 = spec.momentum;
    const double x0 = spec.center;
    std::vector<cplx> amps(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = grid.x(i);
        const double shifted = x - x0 - k0 * t;
        const cplx exponent = -shifted * shifted / (4.0 * s0 * st) +
                              cplx{0.0, k0 * (x - x0) - 0.5 * k0 * k0 * t + spec.global_phase};
        amps[i] = prefactor * std::exp(exponent);
    }
    double peak = 0.0;
    for (const cplx& z : amps) peak = std::max(peak, std::abs(z));
    const double edge = std::max(std::abs(amps.front()), std::abs(amps.back()));
    if (!(edge <= kEdgeAmplitudeRatio * peak))
        throw TruncationError("free_gaussian_evolve: packet reaches the grid edge (edge/peak = " +
                              std::to_string(peak > 0.0 ? edge / peak : 1.0) + "); widen the grid");
    return GridWavefunction(grid, std::move(amps));
}

GridWavefunction split_step(const GridWavefunction& psi, const PotentialSpec& v, double dt,
                            std::int64_t n_steps)
{
    if (!(psi.grid() == v.grid())) throw ShapeError("split_step: potential and wavefunction grids differ");
    if (n_steps < 0) throw ConfigurationError("split_step: n_steps must be non-negative");
    if (!std::isfinite(dt) || dt == 0.0) throw ConfigurationError("split_step: dt must be finite and nonzero");
    if (n_steps == 0) return psi;

    const SpatialGrid& grid = psi.grid();
    const std::size_t n = grid.size();
    const std::vector<double> k = wavenumbers(grid);

    // The 1/n of the backward transform is folded into the kinetic factor.
    std::vector<cplx> kinetic(n);
    for (std::size_t i = 0; i < n; ++i)
        kinetic[i] = std::polar(1.0 / static_cast<double>(n), -0.5 * k[i] * k[i] * dt);
    std::vector<cplx> half_potential(n);
    std::vector<cplx> full_potential(n);
    for (std::size_t i = 0; i < n; ++i) {
        half_potential[i] = std::polar(1.0, -0.5 * v.values()[i] * dt);
        full_potential[i] = half_potential[i] * half_potential[i];
    }

    detail::FftBuffer fft(n);
    auto buf = fft.data();
    std::copy(psi.amplitudes().begin(), psi.amplitudes().end(), buf.begin());

    namespace kr = kernels::active;
    kr::multiply(buf, half_potential);
    for (std::int64_t step = 0; step < n_steps; ++step) {
        fft.forward();
        if (step == 0) check_nyquist(buf, "at start");
        kr::multiply(buf, kinetic);
        fft.backward();
        kr::multiply(buf, step + 1 < n_steps ? std::span<const cplx>(full_potential)
                                              : std::span<const cplx>(half_potential));
    }

    std::vector<cplx> out(buf.begin(), buf.end());
    fft.forward();
    check_nyquist(buf, "at end");
    return GridWavefunction(grid, std::move(out));
}

double position_expectation(const GridWavefunction& psi)
{
    const SpatialGrid& g = psi.grid();
    std::vector<double> weighted(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) weighted[i] = g.x(i) * std::norm(psi[i]);
    return kernels::active::sum(weighted) * g.dx() / psi.norm_squared();
}

double momentum_expectation(const GridWavefunction& psi)
{
    const std::size_t n = psi.size();
    detail::FftBuffer fft(n);
    auto buf = fft.data();
    std::copy(psi.amplitudes().begin(), psi.amplitudes().end(), buf.begin());
    fft.forward();
    const std::vector<double> k = wavenumbers(psi.grid());
    std::vector<double> weighted(n);
    std::vector<double> density(n);
    for (std::size_t i = 0; i < n; ++i) {
        density[i] = std::norm(buf[i]);
        weighted[i] = k[i] * density[i];
    }
    namespace kr = kernels::active;
    return kr::sum(weighted) / kr::sum(density);
}

TwoPathState make_two_path_branches(const TwoSlitGeometry& geom, const RecorderSpec& recorder,
                                    const SpatialGrid& grid, const PropagationMethod& method)
{
    geom.validate();
    recorder.validate();
    geom.check_fits(grid);

    const double t = geom.propagation_time;
    const auto evolve = [&](double center) {
        const GaussianPacketSpec packet{center, 0.0, geom.packet_width, 0.0};
        if (method.kind == PropagationMethod::Kind::analytic || t == 0.0)
            return free_gaussian_evolve(packet, t, grid);
        if (!(method.dt > 0.0)) throw ConfigurationError("split_step propagation: dt must be positive");
        const auto steps = std::max<std::int64_t>(1, std::llround(t / method.dt));
        return split_step(free_gaussian_evolve(packet, 0.0, grid), PotentialSpec::zero(grid),
                          t / static_cast<double>(steps), steps);
    };

    const EnvironmentState start = initial_env(recorder.n_qubits);
    BranchState a(evolve(-0.5 * geom.slit_separation), apply_recorder(start, recorder, Path::A), Path::A);
    BranchState b(evolve(0.5 * geom.slit_separation), apply_recorder(start, recorder, Path::B), Path::B);
    return TwoPathState(std::move(a), std::move(b));
}

} // namespace whichpath
