#pragma once

// Data-parallel inner loops shared by every module.
//
// Two implementations with identical signatures live here: `serial` is the
// plain-loop reference kept for testing and benchmarking, `parallel` is the
// OpenMP version the library calls through `active`. Reductions in `parallel`
// split the input into fixed-size blocks and combine the block partials in
// index order, so results never depend on the thread count.

#include <array>
#include <complex>
#include <cstddef>
#include <span>

namespace whichpath::kernels {

using cplx = std::complex<double>;

/// Row-major 2x2 matrix acting on one qubit: {u00, u01, u10, u11}.
using Gate2 = std::array<cplx, 4>;

/// Entries of a 2x2 matrix in row-major order.
using Matrix2 = std::array<cplx, 4>;

/// Block length for the deterministic reductions of `parallel`.
inline constexpr std::size_t kReductionBlock = 4096;

// sum(v)                 Σ v_i
// sum_abs2(v)            Σ |v_i|²
// inner(f, g)            Σ conj(f_i) g_i
// scale(v, c)            v_i *= c
// multiply(v, w)         v_i *= w_i
// apply_qubit_gate       applies u to bit `qubit` of every basis index
// two_path_intensity     out_i = ½(|a_i|² + |b_i|²) + Re[w conj(a_i) b_i]
// joint_marginal         out_i = Σ_j |a_i φa_j + b_i φb_j|² / 2  (joint state built row by row)
// two_branch_partial_trace
//                        Σ_j c_r(j) conj(c_s(j)) over the environment index j, with
//                        c_0 = φa/√2, c_1 = φb/√2 the joint coefficients of
//                        (|A>|φa> + |B>|φb>)/√2; returns {ρ_AA, ρ_AB, ρ_BA, ρ_BB}

namespace serial {
double sum(std::span<const double> v);
double sum_abs2(std::span<const cplx> v);
cplx inner(std::span<const cplx> f, std::span<const cplx> g);
void scale(std::span<cplx> v, double factor);
void multiply(std::span<cplx> v, std::span<const cplx> factors);
void apply_qubit_gate(std::span<cplx> amps, unsigned qubit, const Gate2& u);
void two_path_intensity(std::span<const cplx> a, std::span<const cplx> b, cplx cross_weight,
                        std::span<double> out);
void joint_marginal(std::span<const cplx> a, std::span<const cplx> b,
                    std::span<const cplx> phi_a, std::span<const cplx> phi_b,
                    std::span<double> out);
Matrix2 two_branch_partial_trace(std::span<const cplx> phi_a, std::span<const cplx> phi_b);
} // namespace serial

namespace parallel {
double sum(std::span<const double> v);
double sum_abs2(std::span<const cplx> v);
cplx inner(std::span<const cplx> f, std::span<const cplx> g);
void scale(std::span<cplx> v, double factor);
void multiply(std::span<cplx> v, std::span<const cplx> factors);
void apply_qubit_gate(std::span<cplx> amps, unsigned qubit, const Gate2& u);
void two_path_intensity(std::span<const cplx> a, std::span<const cplx> b, cplx cross_weight,
                        std::span<double> out);
void joint_marginal(std::span<const cplx> a, std::span<const cplx> b,
                    std::span<const cplx> phi_a, std::span<const cplx> phi_b,
                    std::span<double> out);
Matrix2 two_branch_partial_trace(std::span<const cplx> phi_a, std::span<const cplx> phi_b);
} // namespace parallel

namespace active = parallel;

} // namespace whichpath::kernels
