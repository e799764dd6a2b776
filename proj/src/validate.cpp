#include "whichpath/validate.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "whichpath/config.hpp"
#include "whichpath/densmat.hpp"
#include "whichpath/environment.hpp"
#include "whichpath/errors.hpp"
#include "whichpath/experiment.hpp"
#include "whichpath/interference.hpp"
#include "whichpath/propagation.hpp"

namespace whichpath {

namespace {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

EnvironmentState random_env(Rng& rng, unsigned m)
{
    std::vector<cplx> amps(std::size_t{1} << m);
    for (cplx& z : amps) z = {uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)};
    return normalize(EnvironmentState(m, std::move(amps)));
}

CommonUnitarySpec random_common_unitary(Rng& rng, unsigned m)
{
    CommonUnitarySpec u;
    for (unsigned q = 0; q < m; ++q) {
        u.phase_rates.push_back(uniform(rng, -3.0, 3.0));
        u.flip_rates.push_back(uniform(rng, -3.0, 3.0));
    }
    u.duration = uniform(rng, 0.0, 2.0);
    return u;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b)
{
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

// Coherent state of the ω = 1 oscillator released from x0 at rest.
GridWavefunction coherent_state(const SpatialGrid& grid, double x0, double t)
{
    std::vector<cplx> amps(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = grid.x(i);
        const double y = x - x0 * std::cos(t);
        amps[i] = std::pow(std::numbers::pi, -0.25) *
                  std::exp(cplx{-0.5 * y * y, -x * x0 * std::sin(t) + 0.25 * x0 * x0 * std::sin(2.0 * t) - 0.5 * t});
    }
    return GridWavefunction(grid, std::move(amps));
}

TwoPathState reference_state(unsigned m, double kick_angle)
{
    const ExperimentConfig cfg = reference_experiment(m, kick_angle);
    return make_two_path_branches(cfg.geometry, cfg.recorder, cfg.grid.make());
}

const std::vector<double>& visibility_law_gammas()
{
    static const std::vector<double> g{0.1, 0.3, 0.5, 0.7, 0.9, 1.0};
    return g;
}

// Symmetric reference configuration with γ = cos(θ/2) on one recorder qubit.
struct SymmetricPoint {
    double gamma;
    double visibility;
    double distinguishability;
    double coherence;
};

std::vector<SymmetricPoint> symmetric_points()
{
    std::vector<SymmetricPoint> pts;
    for (double g : visibility_law_gammas()) {
        const TwoPathState s = reference_state(1, 2.0 * std::acos(g));
        const cplx gamma = overlap_env(s.branch_a().phi(), s.branch_b().phi());
        const VisibilityReport rep = make_visibility_report(measure_visibility(two_path_pattern(s)), gamma);
        pts.push_back({g, rep.visibility, rep.distinguishability, coherence_magnitude(reduced_rho_closed_form(gamma))});
    }
    return pts;
}

std::vector<InvariantCheck> build_suite()
{
    std::vector<InvariantCheck> s;

    s.push_back({"core.overlap_conjugate_symmetry", 1e-12, [] {
                     Rng rng(101);
                     double worst = 0.0;
                     for (int trial = 0; trial < 50; ++trial) {
                         const unsigned m = static_cast<unsigned>(trial % 7);
                         const auto a = random_env(rng, m);
                         const auto b = random_env(rng, m);
                         worst = std::max(worst, std::abs(overlap_env(a, b) - std::conj(overlap_env(b, a))));
                     }
                     return worst;
                 }});
    s.push_back({"core.cauchy_schwarz", 1e-12, [] {
                     Rng rng(102);
                     double worst = 0.0;
                     for (int trial = 0; trial < 50; ++trial) {
                         const unsigned m = static_cast<unsigned>(trial % 7);
                         worst = std::max(worst, std::abs(overlap_env(random_env(rng, m), random_env(rng, m))) - 1.0);
                     }
                     return std::max(0.0, worst);
                 }});
    s.push_back({"core.com_reconstruction", 1e-12, [] {
                     Rng rng(103);
                     double worst = 0.0;
                     for (int trial = 0; trial < 50; ++trial) {
                         MassConfiguration cfg;
                         const int n = 2 + trial % 9;
                         for (int a = 0; a < n; ++a) {
                             cfg.masses.push_back(uniform(rng, 0.1, 10.0));
                             cfg.positions.push_back({uniform(rng, -5, 5), uniform(rng, -5, 5), uniform(rng, -5, 5)});
                         }
                         const auto back = reconstruct_positions(com_decompose(cfg), cfg.masses);
                         for (int a = 0; a < n; ++a)
                             for (int k = 0; k < 3; ++k)
                                 worst = std::max(worst, std::abs(back[a][k] - cfg.positions[a][k]));
                     }
                     return worst;
                 }});
    s.push_back({"core.normalize_idempotent", 1e-12, [] {
                     Rng rng(104);
                     const SpatialGrid grid(-10.0, 10.0, 256);
                     double worst = 0.0;
                     for (int trial = 0; trial < 10; ++trial) {
                         std::vector<cplx> amps(grid.size());
                         for (cplx& z : amps) z = {uniform(rng, -2, 2), uniform(rng, -2, 2)};
                         const auto once = normalize(GridWavefunction(grid, amps));
                         const auto twice = normalize(once);
                         for (std::size_t i = 0; i < grid.size(); ++i) worst = std::max(worst, std::abs(once[i] - twice[i]));
                         const auto e1 = random_env(rng, 5);
                         const auto e2 = normalize(e1);
                         for (std::size_t i = 0; i < e1.dimension(); ++i) worst = std::max(worst, std::abs(e1[i] - e2[i]));
                     }
                     return worst;
                 }});

    s.push_back({"environment.unitarity", 1e-12, [] {
                     Rng rng(201);
                     double worst = 0.0;
                     for (int trial = 0; trial < 30; ++trial) {
                         const unsigned m = static_cast<unsigned>(trial % 9);
                         const auto env = random_env(rng, m);
                         const RecorderSpec rec{m, uniform(rng, 0.0, std::numbers::pi), Path::B};
                         worst = std::max(worst, std::abs(apply_recorder(env, rec, Path::B).norm_squared() - 1.0));
                         worst = std::max(worst,
                                          std::abs(apply_common_unitary(env, random_common_unitary(rng, m)).norm_squared() - 1.0));
                     }
                     return worst;
                 }});
    s.push_back({"environment.overlap_invariance", 1e-12, [] {
                     Rng rng(202);
                     double worst = 0.0;
                     for (int trial = 0; trial < 30; ++trial) {
                         const unsigned m = static_cast<unsigned>(trial % 9);
                         const auto a = random_env(rng, m);
                         const auto b = random_env(rng, m);
                         const auto u = random_common_unitary(rng, m);
                         worst = std::max(worst, std::abs(overlap_env(apply_common_unitary(a, u), apply_common_unitary(b, u)) -
                                                          overlap_env(a, b)));
                     }
                     return worst;
                 }});
    s.push_back({"environment.monotone_decoherence", 1e-15, [] {
                     double worst = 0.0;
                     for (double theta : {0.05, 0.2, 0.7, 1.5, 2.5, std::numbers::pi}) {
                         double prev = 1.0;
                         for (unsigned m = 0; m <= 12; ++m) {
                             const double g = std::abs(branch_overlap_after_recording({m, theta, Path::B}));
                             worst = std::max(worst, g - prev);
                             prev = g;
                         }
                     }
                     for (unsigned m = 1; m <= 8; ++m) {
                         double prev = 1.0;
                         for (int k = 0; k <= 40; ++k) {
                             const double theta = std::numbers::pi * k / 40.0;
                             const double g = std::abs(branch_overlap_after_recording({m, theta, Path::B}));
                             worst = std::max(worst, g - prev);
                             prev = g;
                         }
                     }
                     return worst;
                 }});
    s.push_back({"environment.exponential_law", 1e-9, [] {
                     // Least-squares line through (M, log|γ(M)|), M = 1..12, θ = 0.2.
                     std::vector<double> xs, ys;
                     for (unsigned m = 1; m <= 12; ++m) {
                         xs.push_back(m);
                         ys.push_back(std::log(std::abs(branch_overlap_after_recording({m, 0.2, Path::B}))));
                     }
                     const double n = static_cast<double>(xs.size());
                     double sx = 0, sy = 0, sxx = 0, sxy = 0;
                     for (std::size_t i = 0; i < xs.size(); ++i) {
                         sx += xs[i];
                         sy += ys[i];
                         sxx += xs[i] * xs[i];
                         sxy += xs[i] * ys[i];
                     }
                     const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
                     const double intercept = (sy - slope * sx) / n;
                     double resid = 0.0;
                     for (std::size_t i = 0; i < xs.size(); ++i)
                         resid = std::max(resid, std::abs(ys[i] - (intercept + slope * xs[i])));
                     return std::max(resid, std::abs(slope - std::log(std::cos(0.1))));
                 }});

    s.push_back({"propagation.norm_conservation", 1e-12, [] {
                     const SpatialGrid grid(-20.0, 20.0, 512);
                     const auto psi = free_gaussian_evolve({1.0, 0.5, 1.0, 0.0}, 0.0, grid);
                     const auto out = split_step(psi, PotentialSpec::harmonic(grid, 1.0), 1e-3, 1000);
                     return std::abs(std::sqrt(out.norm_squared()) - std::sqrt(psi.norm_squared()));
                 }});
    s.push_back({"propagation.free_momentum_conservation", 1e-9, [] {
                     const SpatialGrid grid(-40.0, 40.0, 1024);
                     const auto psi = free_gaussian_evolve({-5.0, 1.0, 1.0, 0.0}, 0.0, grid);
                     const auto out = split_step(psi, PotentialSpec::zero(grid), 1e-3, 1000);
                     return std::abs(momentum_expectation(out) - momentum_expectation(psi));
                 }});
    s.push_back({"propagation.convergence_order", 0.8, [] {
                     // Error ratio under dt halving against the analytic coherent state; 4 for second order.
                     const SpatialGrid grid(-20.0, 20.0, 512);
                     const auto psi0 = coherent_state(grid, 3.0, 0.0);
                     const auto exact = coherent_state(grid, 3.0, 1.0);
                     const auto v = PotentialSpec::harmonic(grid, 1.0);
                     const double e1 = l2_distance(split_step(psi0, v, 0.02, 50), exact);
                     const double e2 = l2_distance(split_step(psi0, v, 0.01, 100), exact);
                     return std::abs(e1 / e2 - 4.0);
                 }});
    s.push_back({"propagation.time_reversal", 1e-8, [] {
                     const SpatialGrid grid(-20.0, 20.0, 512);
                     const auto psi = coherent_state(grid, 2.0, 0.0);
                     const auto v = PotentialSpec::harmonic(grid, 1.0);
                     return l2_distance(split_step(split_step(psi, v, 1e-3, 1000), v, -1e-3, 1000), psi);
                 }});

    s.push_back({"interference.oracle_equivalence", 1e-10, [] {
                     Rng rng(401);
                     const SpatialGrid grid(-40.0, 40.0, 512);
                     double worst = 0.0;
                     for (int trial = 0; trial < 20; ++trial) {
                         const unsigned m = static_cast<unsigned>(trial % 7);
                         const auto pa = free_gaussian_evolve(
                             {uniform(rng, -8, 0), uniform(rng, -1, 1), uniform(rng, 0.8, 2), uniform(rng, 0, 6)},
                             uniform(rng, 0, 3), grid);
                         const auto pb = free_gaussian_evolve(
                             {uniform(rng, 0, 8), uniform(rng, -1, 1), uniform(rng, 0.8, 2), uniform(rng, 0, 6)},
                             uniform(rng, 0, 3), grid);
                         const TwoPathState st(BranchState(pa, random_env(rng, m), Path::A),
                                               BranchState(pb, random_env(rng, m), Path::B));
                         worst = std::max(worst, max_abs_diff(two_path_pattern(st).intensity,
                                                              joint_pattern_bruteforce(st).intensity));
                     }
                     return worst;
                 }});
    s.push_back({"interference.decohered_mixture", 1e-12, [] {
                     const TwoPathState st = reference_state(3, std::numbers::pi);
                     const auto p = two_path_pattern(st);
                     const auto a = single_path_pattern(st.branch_a());
                     const auto b = single_path_pattern(st.branch_b());
                     double worst = 0.0;
                     for (std::size_t i = 0; i < p.intensity.size(); ++i)
                         worst = std::max(worst, std::abs(p.intensity[i] - 0.5 * (a.intensity[i] + b.intensity[i])));
                     return worst;
                 }});
    s.push_back({"interference.visibility_law", 1e-2, [] {
                     double worst = 0.0;
                     for (const auto& p : symmetric_points()) worst = std::max(worst, std::abs(p.visibility - p.gamma));
                     return worst;
                 }});
    s.push_back({"interference.complementarity_bound", 1e-6, [] {
                     double worst = 0.0;
                     for (const auto& p : symmetric_points())
                         worst = std::max(worst, p.visibility * p.visibility + p.distinguishability * p.distinguishability - 1.0);
                     return std::max(0.0, worst);
                 }});
    s.push_back({"interference.complementarity_equality", 2e-2, [] {
                     double worst = 0.0;
                     for (const auto& p : symmetric_points())
                         worst = std::max(worst, std::abs(p.visibility * p.visibility +
                                                          p.distinguishability * p.distinguishability - 1.0));
                     return worst;
                 }});
    s.push_back({"interference.normalization", 1e-9, [] {
                     double worst = 0.0;
                     for (double theta : {0.0, 0.9, std::numbers::pi}) {
                         const TwoPathState st = reference_state(2, theta);
                         worst = std::max(worst, std::abs(two_path_pattern(st).integral() - 1.0));
                         worst = std::max(worst, std::abs(joint_pattern_bruteforce(st).integral() - 1.0));
                         worst = std::max(worst, std::abs(single_path_pattern(st.branch_a()).integral() - 1.0));
                     }
                     return worst;
                 }});

    s.push_back({"densmat.partial_trace_equivalence", 1e-12, [] {
                     Rng rng(501);
                     const SpatialGrid grid(-32.0, 32.0, 512);
                     const TwoSlitGeometry geom{20.0, 1.0, 0.0};
                     double worst = 0.0;
                     for (int trial = 0; trial < 30; ++trial) {
                         const unsigned m = static_cast<unsigned>(trial % 9);
                         const RecorderSpec rec{m, uniform(rng, 0.0, std::numbers::pi), trial % 2 ? Path::A : Path::B};
                         const TwoPathState st = make_two_path_branches(geom, rec, grid);
                         const auto traced = reduced_rho_partial_trace(st);
                         const auto closed = reduced_rho_closed_form(overlap_env(st.branch_a().phi(), st.branch_b().phi()));
                         for (int k = 0; k < 4; ++k)
                             worst = std::max(worst, std::abs(traced.entries()[k] - closed.entries()[k]));
                     }
                     return worst;
                 }});
    s.push_back({"densmat.hermitian_unit_trace_psd", 1e-12, [] {
                     Rng rng(502);
                     double worst = 0.0;
                     for (int trial = 0; trial < 100; ++trial) {
                         const cplx gamma = std::polar(std::sqrt(uniform(rng, 0.0, 1.0)), uniform(rng, -3.14, 3.14));
                         const auto rho = reduced_rho_closed_form(gamma);
                         worst = std::max({worst, std::abs(rho(0, 1) - std::conj(rho(1, 0))), std::abs(rho.trace() - 1.0),
                                           std::max(0.0, -rho.eigenvalues()[0])});
                     }
                     return worst;
                 }});
    s.push_back({"densmat.coherence_equals_visibility", 1e-2, [] {
                     double worst = 0.0;
                     for (const auto& p : symmetric_points()) worst = std::max(worst, std::abs(p.coherence - p.visibility));
                     return worst;
                 }});
    s.push_back({"densmat.idempotent_at_unit_overlap", 1e-12, [] {
                     const auto rho = reduced_rho_closed_form(1.0);
                     const auto sq = square(rho);
                     double worst = 0.0;
                     for (int k = 0; k < 4; ++k) worst = std::max(worst, std::abs(sq[k] - rho.entries()[k]));
                     return worst;
                 }});

    s.push_back({"cli.determinism", 0.5, [] {
                     ExperimentConfig cfg = reference_experiment(3, 1.1);
                     const auto render = [&] {
                         const RunResult r = compute_run(cfg);
                         std::ostringstream csv;
                         write_pattern_csv(csv, r);
                         return csv.str() + summary_json(r);
                     };
                     return render() == render() ? 0.0 : 1.0;
                 }});
    s.push_back({"cli.sweep_order_independence", 0.5, [] {
                     SweepConfig sw;
                     sw.base = reference_experiment(0, 0.4);
                     sw.parameter = SweepParameter::n_qubits;
                     sw.values = {6, 0, 3, 1, 5, 2, 4};
                     const auto render = [&](unsigned par) {
                         sw.parallelism = par;
                         std::ostringstream out;
                         write_sweep_csv(out, run_sweep(sw));
                         return out.str();
                     };
                     return render(1) == render(static_cast<unsigned>(sw.values.size())) ? 0.0 : 1.0;
                 }});
    s.push_back({"cli.strict_config_rejection", 0.5, [] {
                     const std::string good_geometry =
                         R"("geometry": {"slit_separation": 20, "packet_width": 1, "propagation_time": 800})";
                     const std::vector<std::string> bad{
                         "{" + good_geometry + R"(, "recorder": {"n_qubits": 1, "kick_angle": 0}, "extra": 1})",
                         "{" + good_geometry + R"(, "recorder": {"n_qubits": 1, "kick_angle": 0, "typo": 2}})",
                         "{" + good_geometry + R"(, "recorder": {"n_qubits": 1, "kick_angle": 4}})",
                         "{" + good_geometry + R"(, "recorder": {"n_qubits": 21, "kick_angle": 0}})",
                         R"({"geometry": {"slit_separation": 20, "packet_width": -1, "propagation_time": 800},
                             "recorder": {"n_qubits": 1, "kick_angle": 0}})",
                         "{" + good_geometry + R"(, "recorder": {"n_qubits": 1, "kick_angle": 0}, "grid": {"n_points": 1000}})",
                     };
                     double accepted = 0.0;
                     for (const std::string& text : bad) {
                         try {
                             parse_experiment_config(text);
                             accepted += 1.0;
                         } catch (const ConfigurationError&) {
                         }
                     }
                     return accepted;
                 }});
    return s;
}

} // namespace

const std::vector<InvariantCheck>& invariant_suite()
{
    static const std::vector<InvariantCheck> suite = build_suite();
    return suite;
}

std::vector<InvariantResult> run_invariant_suite(double tolerance_scale)
{
    std::vector<InvariantResult> results;
    for (const InvariantCheck& check : invariant_suite()) {
        InvariantResult r{check.name, 0.0, check.tolerance * tolerance_scale, false, ""};
        try {
            r.residual = check.measure();
            r.pass = r.residual <= r.tolerance;
        } catch (const std::exception& e) {
            r.error = e.what();
        }
        results.push_back(std::move(r));
    }
    return results;
}

} // namespace whichpath
