#include "whichpath/densmat.hpp"

#include <cmath>
#include <string>

#include "whichpath/errors.hpp"
#include "whichpath/kernels.hpp"

namespace whichpath {

namespace {
constexpr double kMatrixTol = 1e-12;
constexpr double kOverlapDomainTol = 1e-9;
constexpr double kBasisOverlapTol = 1e-6;
} // namespace

ReducedDensityMatrix2::ReducedDensityMatrix2(const std::array<cplx, 4>& entries) : m_(entries)
{
    const double herm = std::max({std::abs(m_[0].imag()), std::abs(m_[3].imag()),
                                  std::abs(m_[1] - std::conj(m_[2]))});
    if (herm > kMatrixTol) throw NumericalConsistencyError("density matrix not Hermitian");
    if (std::abs(trace() - 1.0) > kMatrixTol) throw NumericalConsistencyError("density matrix trace != 1");
    const auto ev = eigenvalues();
    if (ev[0] < -kMatrixTol || ev[1] > 1.0 + kMatrixTol)
        throw NumericalConsistencyError("density matrix eigenvalues outside [0, 1]: " + std::to_string(ev[0]) +
                                        ", " + std::to_string(ev[1]));
}

std::array<double, 2> ReducedDensityMatrix2::eigenvalues() const
{
    const double a = m_[0].real();
    const double d = m_[3].real();
    const double mean = 0.5 * (a + d);
    const double radius = std::hypot(0.5 * (a - d), std::abs(m_[1]));
    return {mean - radius, mean + radius};
}

ReducedDensityMatrix2 reduced_rho_closed_form(cplx gamma)
{
    if (!(std::abs(gamma) <= 1.0 + kOverlapDomainTol))
        throw DomainError("reduced_rho_closed_form: |gamma| = " + std::to_string(std::abs(gamma)) + " exceeds 1");
    return ReducedDensityMatrix2({cplx{0.5, 0.0}, 0.5 * gamma, 0.5 * std::conj(gamma), cplx{0.5, 0.0}});
}

ReducedDensityMatrix2 reduced_rho_partial_trace(const TwoPathState& state)
{
    const cplx spatial = inner_product_grid(state.branch_a().psi(), state.branch_b().psi());
    if (std::abs(spatial) > kBasisOverlapTol)
        throw BasisValidityError("reduced_rho_partial_trace: |<psi_A|psi_B>| = " + std::to_string(std::abs(spatial)) +
                                 " exceeds 1e-6; branches are not a two-level basis");
    return ReducedDensityMatrix2(kernels::active::two_branch_partial_trace(state.branch_a().phi().amplitudes(),
                                                                           state.branch_b().phi().amplitudes()));
}

std::array<cplx, 4> square(const ReducedDensityMatrix2& rho)
{
    const auto& m = rho.entries();
    return {m[0] * m[0] + m[1] * m[2], m[0] * m[1] + m[1] * m[3], m[2] * m[0] + m[3] * m[2],
            m[2] * m[1] + m[3] * m[3]};
}

double purity(const ReducedDensityMatrix2& rho)
{
    const auto sq = square(rho);
    return (sq[0] + sq[3]).real();
}

double coherence_magnitude(const ReducedDensityMatrix2& rho) { return 2.0 * std::abs(rho(0, 1)); }

} // namespace whichpath
