#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library's numerical kernels.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

/// Kronecker product of single-qubit states; qubit k is bit k of the index.
inline std::vector<cplx> kron(const std::vector<std::array<cplx, 2>>& qubits)
{
    std::vector<cplx> out{cplx{1.0, 0.0}};
    for (std::size_t k = 0; k < qubits.size(); ++k) {
        std::vector<cplx> next(out.size() * 2);
        for (std::size_t i = 0; i < out.size(); ++i) {
            next[i] = out[i] * qubits[k][0];
            next[i + out.size()] = out[i] * qubits[k][1];
        }
        out = std::move(next);
    }
    return out;
}

/// Σ conj(b_j) a_j.
inline cplx dot(const std::vector<cplx>& a, const std::vector<cplx>& b)
{
    cplx acc{};
    for (std::size_t j = 0; j < a.size(); ++j) acc += std::conj(b[j]) * a[j];
    return acc;
}

/// y-rotated |0>: cos(θ/2)|0> + sin(θ/2)|1>.
inline std::array<cplx, 2> rotated_zero(double theta) { return {std::cos(theta / 2), std::sin(theta / 2)}; }

/// <g_0|g_d> for real Gaussians whose densities have standard deviation σ.
inline double gaussian_overlap(double separation, double sigma)
{
    return std::exp(-separation * separation / (8.0 * sigma * sigma));
}

/// Free Gaussian ψ(x, t) (ħ = m = 1), density std σ0 at t = 0.
inline cplx free_gaussian(double x, double x0, double k0, double s0, double t)
{
    const cplx st = s0 * cplx{1.0, t / (2 * s0 * s0)};
    return std::pow(2 * std::numbers::pi * s0 * s0, -0.25) * std::sqrt(s0 / st) *
           std::exp(-(x - x0 - k0 * t) * (x - x0 - k0 * t) / (4 * s0 * st) + cplx{0, k0 * (x - x0) - 0.5 * k0 * k0 * t});
}

/// ω = 1 oscillator coherent state released at rest from x0.
inline cplx coherent_state(double x, double x0, double t)
{
    const double y = x - x0 * std::cos(t);
    return std::pow(std::numbers::pi, -0.25) *
           std::exp(cplx{-0.5 * y * y, -x * x0 * std::sin(t) + 0.25 * x0 * x0 * std::sin(2 * t) - 0.5 * t});
}

/// Eigenvalues of a 2x2 Hermitian matrix from its characteristic polynomial.
inline std::array<double, 2> eig2(const std::array<cplx, 4>& m)
{
    const double tr = (m[0] + m[3]).real();
    const double det = (m[0] * m[3] - m[1] * m[2]).real();
    const double disc = std::sqrt(std::max(0.0, tr * tr / 4 - det));
    return {tr / 2 - disc, tr / 2 + disc};
}

/// Ordinary least-squares fit y = a + b x; returns {a, b, max residual}.
inline std::array<double, 3> line_fit(const std::vector<double>& x, const std::vector<double>& y)
{
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double b = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double a = (sy - b * sx) / n;
    double r = 0;
    for (std::size_t i = 0; i < x.size(); ++i) r = std::max(r, std::abs(y[i] - (a + b * x[i])));
    return {a, b, r};
}

/// Sign changes of the forward difference of a moving-average-smoothed signal,
/// counted only where the signal is above `floor` times its maximum.
inline int derivative_sign_changes(const std::vector<double>& v, std::size_t window, double floor)
{
    std::vector<double> s(v.size(), 0.0);
    for (std::size_t i = window; i + window < v.size(); ++i) {
        double acc = 0;
        for (std::size_t j = i - window; j <= i + window; ++j) acc += v[j];
        s[i] = acc / static_cast<double>(2 * window + 1);
    }
    double vmax = 0;
    for (double x : s) vmax = std::max(vmax, x);
    int changes = 0;
    int last = 0;
    for (std::size_t i = window; i + window + 1 < v.size(); ++i) {
        if (s[i] < floor * vmax) continue;
        const double d = s[i + 1] - s[i];
        const int sign = d > 0 ? 1 : (d < 0 ? -1 : 0);
        if (sign != 0 && last != 0 && sign != last) ++changes;
        if (sign != 0) last = sign;
    }
    return changes;
}

inline std::vector<cplx> random_state(std::mt19937_64& rng, std::size_t dim)
{
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cplx> v(dim);
    double n2 = 0;
    for (cplx& z : v) {
        z = {u(rng), u(rng)};
        n2 += std::norm(z);
    }
    for (cplx& z : v) z /= std::sqrt(n2);
    return v;
}

} // namespace oracle
