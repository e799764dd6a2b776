#include <doctest.h>

#include <omp.h>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "whichpath/kernels.hpp"

namespace serial = whichpath::kernels::serial;
namespace parallel = whichpath::kernels::parallel;
using whichpath::kernels::cplx;

namespace {

std::vector<cplx> vec(std::size_t n, unsigned seed)
{
    std::mt19937_64 rng(seed);
    return oracle::random_state(rng, n);
}

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b)
{
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

// Sizes straddling the reduction block length.
const std::size_t kSizes[] = {1, 7, 4096, 4097, 50000};

} // namespace

TEST_CASE("reductions agree with the serial reference")
{
    for (std::size_t n : kSizes) {
        const auto f = vec(n, 1);
        const auto g = vec(n, 2);
        std::vector<double> re(n);
        for (std::size_t i = 0; i < n; ++i) re[i] = f[i].real();
        CHECK(std::abs(parallel::inner(f, g) - serial::inner(f, g)) < 1e-14);
        CHECK(parallel::sum_abs2(f) == doctest::Approx(serial::sum_abs2(f)).epsilon(1e-14));
        CHECK(std::abs(parallel::sum(re) - serial::sum(re)) < 1e-13);
    }
}

TEST_CASE("parallel reductions are independent of the thread count")
{
    const auto f = vec(100000, 3);
    const auto g = vec(100000, 4);
    omp_set_num_threads(1);
    const cplx one = parallel::inner(f, g);
    const auto tr1 = parallel::two_branch_partial_trace(f, g);
    omp_set_num_threads(4);
    const cplx four = parallel::inner(f, g);
    const auto tr4 = parallel::two_branch_partial_trace(f, g);
    CHECK(one == four);
    CHECK(tr1 == tr4);
}

TEST_CASE("elementwise kernels match the serial reference exactly")
{
    for (std::size_t n : kSizes) {
        auto a = vec(n, 5);
        auto b = a;
        const auto w = vec(n, 6);
        serial::multiply(a, w);
        parallel::multiply(b, w);
        CHECK(max_diff(a, b) == 0.0);
        serial::scale(a, 0.75);
        parallel::scale(b, 0.75);
        CHECK(max_diff(a, b) == 0.0);

        std::vector<double> out_s(n), out_p(n);
        serial::two_path_intensity(a, w, cplx{0.3, -0.2}, out_s);
        parallel::two_path_intensity(a, w, cplx{0.3, -0.2}, out_p);
        CHECK(out_s == out_p);
    }
}

TEST_CASE("qubit gate kernels agree for every qubit position")
{
    const whichpath::kernels::Gate2 u{cplx{0.6, 0.1}, cplx{-0.8, 0.0}, cplx{0.8, 0.0}, cplx{0.6, -0.1}};
    for (unsigned m : {1u, 3u, 14u}) {
        auto a = vec(std::size_t{1} << m, 7);
        auto b = a;
        for (unsigned q = 0; q < m; ++q) {
            serial::apply_qubit_gate(a, q, u);
            parallel::apply_qubit_gate(b, q, u);
        }
        CHECK(max_diff(a, b) == 0.0);
    }
}

TEST_CASE("qubit gate acts on the addressed bit")
{
    // X on qubit 1 of |00> gives |10>, i.e. basis index 2.
    std::vector<cplx> amps{1.0, 0.0, 0.0, 0.0};
    const whichpath::kernels::Gate2 x{cplx{0}, cplx{1}, cplx{1}, cplx{0}};
    parallel::apply_qubit_gate(amps, 1, x);
    CHECK(amps[2] == cplx{1.0, 0.0});
    CHECK(std::abs(amps[0]) == 0.0);
}

TEST_CASE("joint marginal and partial trace agree with the serial reference")
{
    const auto a = vec(6000, 8);
    const auto b = vec(6000, 9);
    const auto pa = vec(64, 10);
    const auto pb = vec(64, 11);
    std::vector<double> out_s(a.size()), out_p(a.size());
    serial::joint_marginal(a, b, pa, pb, out_s);
    parallel::joint_marginal(a, b, pa, pb, out_p);
    CHECK(out_s == out_p);

    const auto big_a = vec(1 << 15, 12);
    const auto big_b = vec(1 << 15, 13);
    const auto ts = serial::two_branch_partial_trace(big_a, big_b);
    const auto tp = parallel::two_branch_partial_trace(big_a, big_b);
    for (int k = 0; k < 4; ++k) CHECK(std::abs(ts[k] - tp[k]) < 1e-14);
    CHECK(std::abs(tp[1] - 0.5 * oracle::dot(big_a, big_b)) < 1e-14);
}
