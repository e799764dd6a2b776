#pragma once

// State types for a composite object split into its center-of-mass coordinate X
// (sampled on a 1-D grid) and an internal environment register.
//
// Units: hbar = 1, center-of-mass mass = 1.

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace whichpath {

using cplx = std::complex<double>;
using Vec3 = std::array<double, 3>;

/// Largest environment register stored as a dense amplitude vector.
inline constexpr unsigned kMaxQubits = 20;

/// Uniform periodic grid x_i = x_min + i*dx, i in [0, n_points), dx = (x_max - x_min)/n_points.
class SpatialGrid {
public:
    SpatialGrid(double x_min, double x_max, std::size_t n_points);

    double x_min() const { return x_min_; }
    double x_max() const { return x_max_; }
    std::size_t size() const { return n_points_; }
    double dx() const { return (x_max_ - x_min_) / static_cast<double>(n_points_); }
    double x(std::size_t i) const { return x_min_ + static_cast<double>(i) * dx(); }
    std::vector<double> points() const;

    friend bool operator==(const SpatialGrid&, const SpatialGrid&) = default;

private:
    double x_min_;
    double x_max_;
    std::size_t n_points_;
};

class GridWavefunction {
public:
    GridWavefunction(SpatialGrid grid, std::vector<cplx> amplitudes);

    const SpatialGrid& grid() const { return grid_; }
    std::span<const cplx> amplitudes() const { return amplitudes_; }
    std::size_t size() const { return amplitudes_.size(); }
    const cplx& operator[](std::size_t i) const { return amplitudes_[i]; }

    /// Riemann sum Σ|ψ_i|² dx.
    double norm_squared() const;

private:
    SpatialGrid grid_;
    std::vector<cplx> amplitudes_;
};

/// Dense state of an M-qubit register; basis index bit k is qubit k.
/// M = 0 is the trivial one-amplitude environment.
class EnvironmentState {
public:
    EnvironmentState(unsigned n_qubits, std::vector<cplx> amplitudes);

    unsigned n_qubits() const { return n_qubits_; }
    std::span<const cplx> amplitudes() const { return amplitudes_; }
    std::size_t dimension() const { return amplitudes_.size(); }
    const cplx& operator[](std::size_t i) const { return amplitudes_[i]; }

    double norm_squared() const;

private:
    unsigned n_qubits_;
    std::vector<cplx> amplitudes_;
};

enum class Path { A, B };

const char* to_string(Path p);

/// One path's product state ψ(X)Φ(q). Both factors must be normalized.
class BranchState {
public:
    BranchState(GridWavefunction psi, EnvironmentState phi, Path label);

    const GridWavefunction& psi() const { return psi_; }
    const EnvironmentState& phi() const { return phi_; }
    Path label() const { return label_; }

private:
    GridWavefunction psi_;
    EnvironmentState phi_;
    Path label_;
};

/// Equal-weight superposition (Ψ_A + Ψ_B)/√2.
class TwoPathState {
public:
    TwoPathState(BranchState branch_a, BranchState branch_b);

    const BranchState& branch_a() const { return a_; }
    const BranchState& branch_b() const { return b_; }
    const SpatialGrid& grid() const { return a_.psi().grid(); }
    unsigned n_qubits() const { return a_.phi().n_qubits(); }

private:
    BranchState a_;
    BranchState b_;
};

struct MassConfiguration {
    std::vector<double> masses;
    std::vector<Vec3> positions;
};

/// Center of mass plus positions of particles 2..N relative to it.
/// The relative position of particle 1 is fixed by Σ m_a q_a = 0 and not stored.
struct ComDecomposition {
    Vec3 com;
    std::vector<Vec3> relative;
};

ComDecomposition com_decompose(const MassConfiguration& cfg);

/// Inverse of com_decompose: x_a = X + q_a, with q_1 = -Σ_{a≥2} m_a q_a / m_1.
std::vector<Vec3> reconstruct_positions(const ComDecomposition& d, std::span<const double> masses);

/// Riemann sum Σ conj(f_i) g_i dx.
cplx inner_product_grid(const GridWavefunction& f, const GridWavefunction& g);

/// Σ conj(phi_b_j) phi_a_j, i.e. <Φ_B|Φ_A>.
cplx overlap_env(const EnvironmentState& phi_a, const EnvironmentState& phi_b);

/// sqrt(Σ|f_i - g_i|² dx).
double l2_distance(const GridWavefunction& f, const GridWavefunction& g);

GridWavefunction normalize(const GridWavefunction& psi);
EnvironmentState normalize(const EnvironmentState& phi);

} // namespace whichpath
