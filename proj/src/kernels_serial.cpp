#include "whichpath/kernels.hpp"

#include <cassert>
#include <cmath>

namespace whichpath::kernels::serial {

double sum(std::span<const double> v)
{
    double acc = 0.0;
    for (double x : v) acc += x;
    return acc;
}

double sum_abs2(std::span<const cplx> v)
{
    double acc = 0.0;
    for (const cplx& z : v) acc += std::norm(z);
    return acc;
}

cplx inner(std::span<const cplx> f, std::span<const cplx> g)
{
    assert(f.size() == g.size());
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < f.size(); ++i) acc += std::conj(f[i]) * g[i];
    return acc;
}

void scale(std::span<cplx> v, double factor)
{
    for (cplx& z : v) z *= factor;
}

void multiply(std::span<cplx> v, std::span<const cplx> factors)
{
    assert(v.size() == factors.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] *= factors[i];
}

void apply_qubit_gate(std::span<cplx> amps, unsigned qubit, const Gate2& u)
{
    const std::size_t bit = std::size_t{1} << qubit;
    assert(bit < amps.size() || amps.size() == 1);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & bit) continue;
        const cplx a0 = amps[i];
        const cplx a1 = amps[i | bit];
        amps[i] = u[0] * a0 + u[1] * a1;
        amps[i | bit] = u[2] * a0 + u[3] * a1;
    }
}

void two_path_intensity(std::span<const cplx> a, std::span<const cplx> b, cplx cross_weight,
                        std::span<double> out)
{
    assert(a.size() == b.size() && a.size() == out.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = 0.5 * (std::norm(a[i]) + std::norm(b[i])) +
                 std::real(cross_weight * std::conj(a[i]) * b[i]);
}

void joint_marginal(std::span<const cplx> a, std::span<const cplx> b,
                    std::span<const cplx> phi_a, std::span<const cplx> phi_b,
                    std::span<double> out)
{
    assert(a.size() == b.size() && a.size() == out.size());
    assert(phi_a.size() == phi_b.size());
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < phi_a.size(); ++j)
            acc += std::norm((a[i] * phi_a[j] + b[i] * phi_b[j]) * inv_sqrt2);
        out[i] = acc;
    }
}

Matrix2 two_branch_partial_trace(std::span<const cplx> phi_a, std::span<const cplx> phi_b)
{
    assert(phi_a.size() == phi_b.size());
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Matrix2 rho{};
    for (std::size_t j = 0; j < phi_a.size(); ++j) {
        const std::array<cplx, 2> c{phi_a[j] * inv_sqrt2, phi_b[j] * inv_sqrt2};
        for (int r = 0; r < 2; ++r)
            for (int s = 0; s < 2; ++s) rho[2 * r + s] += c[r] * std::conj(c[s]);
    }
    return rho;
}

} // namespace whichpath::kernels::serial
