#include "whichpath/kernels.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <vector>

namespace whichpath::kernels::parallel {

namespace {

std::size_t block_count(std::size_t n) { return (n + kReductionBlock - 1) / kReductionBlock; }

// Sums term(i) over [0, n) block by block; block partials are combined in order.
template <typename T, typename Term>
T blocked_sum(std::size_t n, Term term)
{
    const std::size_t nblocks = block_count(n);
    if (nblocks <= 1) {
        T acc{};
        for (std::size_t i = 0; i < n; ++i) acc += term(i);
        return acc;
    }
    std::vector<T> partial(nblocks);
#pragma omp parallel for schedule(static)
    for (std::int64_t blk = 0; blk < static_cast<std::int64_t>(nblocks); ++blk) {
        const std::size_t lo = static_cast<std::size_t>(blk) * kReductionBlock;
        const std::size_t hi = std::min(n, lo + kReductionBlock);
        T acc{};
        for (std::size_t i = lo; i < hi; ++i) acc += term(i);
        partial[static_cast<std::size_t>(blk)] = acc;
    }
    T total{};
    for (const T& p : partial) total += p;
    return total;
}

std::int64_t ssize(std::size_t n) { return static_cast<std::int64_t>(n); }

} // namespace

double sum(std::span<const double> v)
{
    return blocked_sum<double>(v.size(), [&](std::size_t i) { return v[i]; });
}

double sum_abs2(std::span<const cplx> v)
{
    return blocked_sum<double>(v.size(), [&](std::size_t i) { return std::norm(v[i]); });
}

cplx inner(std::span<const cplx> f, std::span<const cplx> g)
{
    assert(f.size() == g.size());
    return blocked_sum<cplx>(f.size(), [&](std::size_t i) { return std::conj(f[i]) * g[i]; });
}

void scale(std::span<cplx> v, double factor)
{
#pragma omp parallel for schedule(static) if (v.size() > kReductionBlock)
    for (std::int64_t i = 0; i < ssize(v.size()); ++i) v[i] *= factor;
}

void multiply(std::span<cplx> v, std::span<const cplx> factors)
{
    assert(v.size() == factors.size());
#pragma omp parallel for schedule(static) if (v.size() > kReductionBlock)
    for (std::int64_t i = 0; i < ssize(v.size()); ++i) v[i] *= factors[i];
}

void apply_qubit_gate(std::span<cplx> amps, unsigned qubit, const Gate2& u)
{
    const std::size_t bit = std::size_t{1} << qubit;
    const std::size_t pairs = amps.size() / 2;
    const std::size_t low_mask = bit - 1;
#pragma omp parallel for schedule(static) if (pairs > kReductionBlock)
    for (std::int64_t p = 0; p < ssize(pairs); ++p) {
        const std::size_t up = static_cast<std::size_t>(p);
        const std::size_t i0 = ((up & ~low_mask) << 1) | (up & low_mask);
        const std::size_t i1 = i0 | bit;
        const cplx a0 = amps[i0];
        const cplx a1 = amps[i1];
        amps[i0] = u[0] * a0 + u[1] * a1;
        amps[i1] = u[2] * a0 + u[3] * a1;
    }
}

void two_path_intensity(std::span<const cplx> a, std::span<const cplx> b, cplx cross_weight,
                        std::span<double> out)
{
    assert(a.size() == b.size() && a.size() == out.size());
#pragma omp parallel for schedule(static) if (a.size() > kReductionBlock)
    for (std::int64_t i = 0; i < ssize(a.size()); ++i)
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
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < ssize(a.size()); ++i) {
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
    const std::size_t n = phi_a.size();
    const auto entry = [&](int r, int s) {
        const std::span<const cplx> cr = r == 0 ? phi_a : phi_b;
        const std::span<const cplx> cs = s == 0 ? phi_a : phi_b;
        return blocked_sum<cplx>(n, [&](std::size_t j) {
            return (cr[j] * inv_sqrt2) * std::conj(cs[j] * inv_sqrt2);
        });
    };
    return {entry(0, 0), entry(0, 1), entry(1, 0), entry(1, 1)};
}

} // namespace whichpath::kernels::parallel
