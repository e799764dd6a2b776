#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "whichpath/core.hpp"
#include "whichpath/errors.hpp"

using namespace whichpath;

namespace {

GridWavefunction gaussian(const SpatialGrid& grid, double center, double sigma)
{
    std::vector<cplx> amps(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double y = grid.x(i) - center;
        amps[i] = std::exp(-y * y / (4 * sigma * sigma));
    }
    return normalize(GridWavefunction(grid, std::move(amps)));
}

} // namespace

TEST_CASE("spatial grid invariants")
{
    const SpatialGrid g(-4.0, 4.0, 16);
    CHECK(g.dx() == 0.5);
    CHECK(g.x(0) == -4.0);
    CHECK(g.x(15) == 3.5);
    CHECK_THROWS_AS(SpatialGrid(1.0, 1.0, 16), ConfigurationError);
    CHECK_THROWS_AS(SpatialGrid(0.0, 1.0, 4), ConfigurationError);
    CHECK_THROWS_AS(SpatialGrid(0.0, 1.0, 24), ConfigurationError);
    CHECK_THROWS_AS(SpatialGrid(0.0, std::nan(""), 16), ConfigurationError);
}

TEST_CASE("com_decompose examples")
{
    SUBCASE("symmetric pair")
    {
        const auto d = com_decompose({{1.0, 1.0}, {{-1, 0, 0}, {1, 0, 0}}});
        CHECK(d.com == Vec3{0, 0, 0});
        REQUIRE(d.relative.size() == 1);
        CHECK(d.relative[0] == Vec3{1, 0, 0});
    }
    SUBCASE("weighted mean")
    {
        const auto d = com_decompose({{1.0, 3.0}, {{0, 0, 0}, {4, 0, 0}}});
        CHECK(d.com == Vec3{3, 0, 0});
        CHECK(d.relative[0] == Vec3{1, 0, 0});
    }
    SUBCASE("five random particles reconstruct")
    {
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> u(-10, 10), um(0.5, 5);
        MassConfiguration cfg;
        for (int a = 0; a < 5; ++a) {
            cfg.masses.push_back(um(rng));
            cfg.positions.push_back({u(rng), u(rng), u(rng)});
        }
        const auto d = com_decompose(cfg);
        // Direct recomputation of X = Σ m x / Σ m.
        double total = 0;
        Vec3 ref{0, 0, 0};
        for (int a = 0; a < 5; ++a) {
            total += cfg.masses[a];
            for (int k = 0; k < 3; ++k) ref[k] += cfg.masses[a] * cfg.positions[a][k];
        }
        double residual = 0;
        for (int k = 0; k < 3; ++k) residual = std::max(residual, std::abs(d.com[k] - ref[k] / total));
        for (int a = 1; a < 5; ++a)
            for (int k = 0; k < 3; ++k)
                residual = std::max(residual, std::abs(cfg.positions[a][k] - (d.com[k] + d.relative[a - 1][k])));
        const auto back = reconstruct_positions(d, cfg.masses);
        for (int k = 0; k < 3; ++k) residual = std::max(residual, std::abs(back[0][k] - cfg.positions[0][k]));
        CHECK(residual < 1e-12);
    }
    SUBCASE("errors")
    {
        CHECK_THROWS_AS(com_decompose({}), ConfigurationError);
        CHECK_THROWS_AS(com_decompose({{1.0, -1.0}, {{0, 0, 0}, {1, 0, 0}}}), ConfigurationError);
        CHECK_THROWS_AS(com_decompose({{1.0}, {{0, 0, 0}, {1, 0, 0}}}), ConfigurationError);
    }
}

TEST_CASE("inner_product_grid examples")
{
    const SpatialGrid grid(-30.0, 30.0, 1024);
    const auto f = gaussian(grid, 0.0, 1.0);
    CHECK(std::abs(inner_product_grid(f, f) - 1.0) < 1e-9);

    std::vector<cplx> left(grid.size()), right(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid.x(i) >= -5 && grid.x(i) < -1) left[i] = 1.0;
        if (grid.x(i) >= 1 && grid.x(i) < 5) right[i] = 1.0;
    }
    CHECK(inner_product_grid(normalize(GridWavefunction(grid, left)), normalize(GridWavefunction(grid, right))) ==
          cplx{0.0, 0.0});

    const auto g = gaussian(grid, 2.0, 1.0);
    const cplx ov = inner_product_grid(f, g);
    CHECK(std::abs(ov - oracle::gaussian_overlap(2.0, 1.0)) < 1e-6);
    CHECK(std::abs(ov - std::exp(-0.5)) < 1e-6);
    CHECK(std::abs(ov - std::conj(inner_product_grid(g, f))) < 1e-15);

    CHECK_THROWS_AS(inner_product_grid(f, gaussian(SpatialGrid(-30.0, 30.0, 512), 0.0, 1.0)), ShapeError);
}

TEST_CASE("overlap_env examples")
{
    const EnvironmentState zero(1, {1.0, 0.0});
    const EnvironmentState one(1, {0.0, 1.0});
    CHECK(overlap_env(zero, zero) == cplx{1.0, 0.0});
    CHECK(overlap_env(zero, one) == cplx{0.0, 0.0});

    // Each of four qubits rotated by π/2 against |0000>: brute-force 16-amplitude product.
    std::vector<std::array<cplx, 2>> rotated(4, oracle::rotated_zero(std::numbers::pi / 2));
    std::vector<std::array<cplx, 2>> ground(4, {cplx{1}, cplx{0}});
    const EnvironmentState a(4, oracle::kron(ground));
    const EnvironmentState b(4, oracle::kron(rotated));
    CHECK(std::abs(overlap_env(a, b) - 0.25) < 1e-12);
    CHECK(std::abs(overlap_env(a, b) - std::pow(std::cos(std::numbers::pi / 4), 4)) < 1e-12);

    CHECK_THROWS_AS(overlap_env(zero, a), ShapeError);
}

TEST_CASE("overlap_env properties on random pairs")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const unsigned m = trial % 6;
        const EnvironmentState a(m, oracle::random_state(rng, std::size_t{1} << m));
        const EnvironmentState b(m, oracle::random_state(rng, std::size_t{1} << m));
        CHECK(std::abs(overlap_env(a, b) - std::conj(overlap_env(b, a))) < 1e-12);
        CHECK(std::abs(overlap_env(a, b)) <= 1.0 + 1e-12);
        CHECK(std::abs(overlap_env(a, b) - oracle::dot(std::vector<cplx>(a.amplitudes().begin(), a.amplitudes().end()),
                                                       std::vector<cplx>(b.amplitudes().begin(), b.amplitudes().end()))) <
              1e-14);
    }
}

TEST_CASE("normalize")
{
    SUBCASE("uniform register amplitudes become 2^{-M/2}")
    {
        const auto n = normalize(EnvironmentState(3, std::vector<cplx>(8, cplx{5.0, 0.0})));
        for (std::size_t i = 0; i < 8; ++i) CHECK(std::abs(n[i] - std::pow(2.0, -1.5)) < 1e-15);
    }
    SUBCASE("normalized Gaussian unchanged and idempotent")
    {
        const SpatialGrid grid(-20.0, 20.0, 512);
        const auto f = gaussian(grid, 0.3, 1.2);
        const auto g = normalize(f);
        for (std::size_t i = 0; i < grid.size(); ++i) CHECK(std::abs(f[i] - g[i]) < 1e-12);
    }
    SUBCASE("random vector gets unit norm")
    {
        std::mt19937_64 rng(3);
        std::uniform_real_distribution<double> u(-3, 3);
        const SpatialGrid grid(-5.0, 5.0, 64);
        std::vector<cplx> amps(64);
        for (cplx& z : amps) z = {u(rng), u(rng)};
        const auto n = normalize(GridWavefunction(grid, amps));
        double s = 0;
        for (std::size_t i = 0; i < 64; ++i) s += std::norm(n[i]) * grid.dx();
        CHECK(std::abs(s - 1.0) < 1e-12);
    }
    SUBCASE("zero norm is degenerate")
    {
        CHECK_THROWS_AS(normalize(EnvironmentState(2, std::vector<cplx>(4))), DegenerateStateError);
        CHECK_THROWS_AS(normalize(GridWavefunction(SpatialGrid(0, 1, 8), std::vector<cplx>(8))), DegenerateStateError);
    }
}

TEST_CASE("state type invariants")
{
    const SpatialGrid grid(-20.0, 20.0, 256);
    const auto psi = gaussian(grid, 0.0, 1.0);
    CHECK_THROWS_AS(GridWavefunction(grid, std::vector<cplx>(10)), ShapeError);
    CHECK_THROWS_AS(EnvironmentState(2, std::vector<cplx>(3)), ShapeError);
    CHECK_THROWS_AS(EnvironmentState(21, std::vector<cplx>(1)), CapacityError);
    CHECK_THROWS_AS(BranchState(psi, EnvironmentState(1, {1.0, 1.0}), Path::A), DegenerateStateError);

    const EnvironmentState e0(0, {1.0});
    const EnvironmentState e1(1, {1.0, 0.0});
    BranchState a(psi, e0, Path::A);
    BranchState b(psi, e0, Path::B);
    CHECK_NOTHROW(TwoPathState(a, b));
    CHECK_THROWS_AS(TwoPathState(b, a), ConfigurationError);
    CHECK_THROWS_AS(TwoPathState(a, BranchState(psi, e1, Path::B)), ShapeError);
    const auto other = gaussian(SpatialGrid(-20.0, 20.0, 512), 0.0, 1.0);
    CHECK_THROWS_AS(TwoPathState(a, BranchState(other, e0, Path::B)), ShapeError);
}
