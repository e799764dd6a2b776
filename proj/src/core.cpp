#include "whichpath/core.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "whichpath/errors.hpp"
#include "whichpath/kernels.hpp"

namespace whichpath {

namespace {

constexpr double kBranchGridNormTol = 1e-9;
constexpr double kBranchEnvNormTol = 1e-12;

} // namespace

SpatialGrid::SpatialGrid(double x_min, double x_max, std::size_t n_points)
    : x_min_(x_min), x_max_(x_max), n_points_(n_points)
{
    if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_max > x_min))
        throw ConfigurationError("grid: need finite x_max > x_min");
    if (n_points < 8 || !std::has_single_bit(n_points))
        throw ConfigurationError("grid: n_points must be a power of two >= 8, got " +
                                 std::to_string(n_points));
    if (!(dx() > 0.0)) throw ConfigurationError("grid: spacing underflows to zero");
}

std::vector<double> SpatialGrid::points() const
{
    std::vector<double> xs(n_points_);
    for (std::size_t i = 0; i < n_points_; ++i) xs[i] = x(i);
    return xs;
}

GridWavefunction::GridWavefunction(SpatialGrid grid, std::vector<cplx> amplitudes)
    : grid_(grid), amplitudes_(std::move(amplitudes))
{
    if (amplitudes_.size() != grid_.size())
        throw ShapeError("wavefunction has " + std::to_string(amplitudes_.size()) +
                         " amplitudes on a " + std::to_string(grid_.size()) + "-point grid");
}

double GridWavefunction::norm_squared() const
{
    return kernels::active::sum_abs2(amplitudes_) * grid_.dx();
}

EnvironmentState::EnvironmentState(unsigned n_qubits, std::vector<cplx> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes))
{
    if (n_qubits_ > kMaxQubits)
        throw CapacityError("environment register of " + std::to_string(n_qubits_) +
                            " qubits exceeds cap " + std::to_string(kMaxQubits));
    if (amplitudes_.size() != (std::size_t{1} << n_qubits_))
        throw ShapeError("environment of " + std::to_string(n_qubits_) + " qubits needs 2^M amplitudes");
}

double EnvironmentState::norm_squared() const { return kernels::active::sum_abs2(amplitudes_); }

const char* to_string(Path p) { return p == Path::A ? "A" : "B"; }

BranchState::BranchState(GridWavefunction psi, EnvironmentState phi, Path label)
    : psi_(std::move(psi)), phi_(std::move(phi)), label_(label)
{
    if (std::abs(psi_.norm_squared() - 1.0) > kBranchGridNormTol)
        throw DegenerateStateError(std::string("branch ") + to_string(label) +
                                   ": spatial factor not normalized");
    if (std::abs(phi_.norm_squared() - 1.0) > kBranchEnvNormTol)
        throw DegenerateStateError(std::string("branch ") + to_string(label) +
                                   ": environment factor not normalized");
}

TwoPathState::TwoPathState(BranchState branch_a, BranchState branch_b)
    : a_(std::move(branch_a)), b_(std::move(branch_b))
{
    if (a_.label() != Path::A || b_.label() != Path::B)
        throw ConfigurationError("two-path state needs branches labelled A then B");
    if (!(a_.psi().grid() == b_.psi().grid()))
        throw ShapeError("two-path branches live on different grids");
    if (a_.phi().n_qubits() != b_.phi().n_qubits())
        throw ShapeError("two-path branches carry different environment sizes");
}

ComDecomposition com_decompose(const MassConfiguration& cfg)
{
    if (cfg.masses.empty()) throw ConfigurationError("mass configuration has no particles");
    if (cfg.masses.size() != cfg.positions.size())
        throw ConfigurationError("mass configuration: masses and positions differ in length");
    double total = 0.0;
    Vec3 weighted{0.0, 0.0, 0.0};
    for (std::size_t a = 0; a < cfg.masses.size(); ++a) {
        const double m = cfg.masses[a];
        if (!(m > 0.0) || !std::isfinite(m))
            throw ConfigurationError("mass configuration: masses must be finite and positive");
        total += m;
        for (int k = 0; k < 3; ++k) weighted[k] += m * cfg.positions[a][k];
    }
    ComDecomposition out;
    for (int k = 0; k < 3; ++k) out.com[k] = weighted[k] / total;
    out.relative.reserve(cfg.masses.size() - 1);
    for (std::size_t a = 1; a < cfg.positions.size(); ++a) {
        Vec3 q;
        for (int k = 0; k < 3; ++k) q[k] = cfg.positions[a][k] - out.com[k];
        out.relative.push_back(q);
    }
    return out;
}

std::vector<Vec3> reconstruct_positions(const ComDecomposition& d, std::span<const double> masses)
{
    if (masses.size() != d.relative.size() + 1)
        throw ShapeError("reconstruct_positions: mass count does not match decomposition");
    Vec3 q1{0.0, 0.0, 0.0};
    for (std::size_t a = 0; a < d.relative.size(); ++a)
        for (int k = 0; k < 3; ++k) q1[k] -= masses[a + 1] * d.relative[a][k];
    std::vector<Vec3> xs;
    xs.reserve(masses.size());
    Vec3 x1;
    for (int k = 0; k < 3; ++k) x1[k] = d.com[k] + q1[k] / masses[0];
    xs.push_back(x1);
    for (const Vec3& q : d.relative) {
        Vec3 x;
        for (int k = 0; k < 3; ++k) x[k] = d.com[k] + q[k];
        xs.push_back(x);
    }
    return xs;
}

cplx inner_product_grid(const GridWavefunction& f, const GridWavefunction& g)
{
    if (!(f.grid() == g.grid())) throw ShapeError("inner_product_grid: grids differ");
    return kernels::active::inner(f.amplitudes(), g.amplitudes()) * f.grid().dx();
}

cplx overlap_env(const EnvironmentState& phi_a, const EnvironmentState& phi_b)
{
    if (phi_a.n_qubits() != phi_b.n_qubits())
        throw ShapeError("overlap_env: register sizes differ (" + std::to_string(phi_a.n_qubits()) +
                         " vs " + std::to_string(phi_b.n_qubits()) + ")");
    return kernels::active::inner(phi_b.amplitudes(), phi_a.amplitudes());
}

double l2_distance(const GridWavefunction& f, const GridWavefunction& g)
{
    if (!(f.grid() == g.grid())) throw ShapeError("l2_distance: grids differ");
    std::vector<cplx> diff(f.amplitudes().begin(), f.amplitudes().end());
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= g[i];
    return std::sqrt(kernels::active::sum_abs2(diff) * f.grid().dx());
}

GridWavefunction normalize(const GridWavefunction& psi)
{
    const double n2 = psi.norm_squared();
    if (!(n2 > 0.0) || !std::isfinite(n2)) throw DegenerateStateError("normalize: zero-norm wavefunction");
    std::vector<cplx> amps(psi.amplitudes().begin(), psi.amplitudes().end());
    kernels::active::scale(amps, 1.0 / std::sqrt(n2));
    return GridWavefunction(psi.grid(), std::move(amps));
}

EnvironmentState normalize(const EnvironmentState& phi)
{
    const double n2 = phi.norm_squared();
    if (!(n2 > 0.0) || !std::isfinite(n2)) throw DegenerateStateError("normalize: zero-norm environment state");
    std::vector<cplx> amps(phi.amplitudes().begin(), phi.amplitudes().end());
    kernels::active::scale(amps, 1.0 / std::sqrt(n2));
    return EnvironmentState(phi.n_qubits(), std::move(amps));
}

} // namespace whichpath
