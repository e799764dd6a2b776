#pragma once

// Reduced 2x2 density matrix of the center-of-mass motion in the ordered basis
// (|ψ_A>, |ψ_B>) after tracing out the internal environment:
//
//     ρ = ½ [[1, γ], [conj(γ), 1]],   γ = <Φ_B|Φ_A> in the upper-right entry.

#include <array>
#include <complex>

#include "whichpath/core.hpp"

namespace whichpath {

class ReducedDensityMatrix2 {
public:
    /// Entries row-major {ρ_AA, ρ_AB, ρ_BA, ρ_BB}. Throws NumericalConsistencyError
    /// unless Hermitian, unit trace and positive semidefinite within 1e-12.
    explicit ReducedDensityMatrix2(const std::array<cplx, 4>& entries);

    const cplx& operator()(int row, int col) const { return m_[2 * row + col]; }
    const std::array<cplx, 4>& entries() const { return m_; }
    /// Ascending eigenvalues.
    std::array<double, 2> eigenvalues() const;
    cplx trace() const { return m_[0] + m_[3]; }

private:
    std::array<cplx, 4> m_;
};

/// DomainError when |γ| > 1 + 1e-9.
ReducedDensityMatrix2 reduced_rho_closed_form(cplx gamma);

/// Literal partial trace over the environment basis of (|A>|Φ_A> + |B>|Φ_B>)/√2,
/// treating the two spatial branches as an orthonormal basis. BasisValidityError
/// when |<ψ_A|ψ_B>| > 1e-6.
ReducedDensityMatrix2 reduced_rho_partial_trace(const TwoPathState& state);

/// Tr ρ².
double purity(const ReducedDensityMatrix2& rho);

/// 2|ρ_AB| (= |γ|).
double coherence_magnitude(const ReducedDensityMatrix2& rho);

/// ρ² entrywise.
std::array<cplx, 4> square(const ReducedDensityMatrix2& rho);

} // namespace whichpath
