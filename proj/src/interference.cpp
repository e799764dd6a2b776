#include "whichpath/interference.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "whichpath/environment.hpp"
#include "whichpath/errors.hpp"
#include "whichpath/kernels.hpp"

namespace whichpath {

namespace {

constexpr double kNegativeAlarm = -1e-9;
constexpr double kComplementarityTol = 1e-6;
constexpr unsigned kBruteForceMaxQubits = 8;
constexpr std::size_t kBruteForceMaxEntries = std::size_t{1} << 24;

// Clamps round-off negatives, then rescales intensity and envelope by 1/∫intensity.
void finish_pattern(DetectionPattern& p)
{
    for (double& v : p.intensity) {
        if (v < kNegativeAlarm)
            throw NumericalConsistencyError("pattern: intensity " + std::to_string(v) +
                                            " below zero beyond round-off");
        if (v < 0.0) v = 0.0;
    }
    const double total = p.integral();
    if (!(total > 0.0)) throw NumericalConsistencyError("pattern: zero total intensity");
    for (double& v : p.intensity) v /= total;
    for (double& v : p.envelope) v /= total;
}

std::vector<double> incoherent_part(const TwoPathState& state)
{
    const auto a = state.branch_a().psi().amplitudes();
    const auto b = state.branch_b().psi().amplitudes();
    std::vector<double> env(a.size());
    kernels::active::two_path_intensity(a, b, cplx{0.0, 0.0}, env);
    return env;
}

struct Extremum {
    double position;
    double value;
    bool is_max;
};

} // namespace

const char* to_string(PatternKind k)
{
    switch (k) {
    case PatternKind::path_A_only: return "path_A_only";
    case PatternKind::path_B_only: return "path_B_only";
    case PatternKind::two_path: return "two_path";
    }
    return "?";
}

double DetectionPattern::integral() const { return kernels::active::sum(intensity) * grid.dx(); }

DetectionPattern single_path_pattern(const BranchState& branch)
{
    const auto amps = branch.psi().amplitudes();
    std::vector<double> density(amps.size());
    for (std::size_t i = 0; i < amps.size(); ++i) density[i] = std::norm(amps[i]);
    const PatternKind kind = branch.label() == Path::A ? PatternKind::path_A_only : PatternKind::path_B_only;
    return DetectionPattern{branch.psi().grid(), density, density, kind};
}

DetectionPattern two_path_pattern(const TwoPathState& state)
{
    const cplx gamma = overlap_env(state.branch_a().phi(), state.branch_b().phi());
    const auto a = state.branch_a().psi().amplitudes();
    const auto b = state.branch_b().psi().amplitudes();
    DetectionPattern p{state.grid(), std::vector<double>(a.size()), incoherent_part(state),
                       PatternKind::two_path};
    // ∫dq Ψ_A* Ψ_B = conj(ψ_A) ψ_B <Φ_A|Φ_B> and <Φ_A|Φ_B> = conj(γ).
    kernels::active::two_path_intensity(a, b, std::conj(gamma), p.intensity);
    finish_pattern(p);
    return p;
}

DetectionPattern joint_pattern_bruteforce(const TwoPathState& state)
{
    const unsigned m = state.n_qubits();
    const std::size_t n = state.grid().size();
    if (m > kBruteForceMaxQubits)
        throw CapacityError("joint_pattern_bruteforce: M = " + std::to_string(m) + " exceeds 8");
    if (n * (std::size_t{1} << m) > kBruteForceMaxEntries)
        throw CapacityError("joint_pattern_bruteforce: joint state of " + std::to_string(n) + " x 2^" +
                            std::to_string(m) + " amplitudes exceeds 2^24");
    DetectionPattern p{state.grid(), std::vector<double>(n), incoherent_part(state), PatternKind::two_path};
    kernels::active::joint_marginal(state.branch_a().psi().amplitudes(), state.branch_b().psi().amplitudes(),
                                    state.branch_a().phi().amplitudes(), state.branch_b().phi().amplitudes(),
                                    p.intensity);
    finish_pattern(p);
    return p;
}

FringeMeasurement measure_visibility(const DetectionPattern& pattern, double envelope_threshold)
{
    if (!(envelope_threshold > 0.0 && envelope_threshold < 1.0))
        throw DomainError("measure_visibility: threshold must lie in (0, 1)");
    const std::vector<double>& env = pattern.envelope;
    const std::vector<double>& inten = pattern.intensity;
    if (env.size() != inten.size() || env.empty()) throw ShapeError("measure_visibility: malformed pattern");

    const auto peak_it = std::max_element(env.begin(), env.end());
    const double cut = envelope_threshold * *peak_it;
    std::size_t lo = static_cast<std::size_t>(peak_it - env.begin());
    std::size_t hi = lo;
    while (lo > 0 && env[lo - 1] >= cut) --lo;
    while (hi + 1 < env.size() && env[hi + 1] >= cut) ++hi;

    const auto ratio = [&](std::size_t i) { return inten[i] / env[i]; };
    const double dx = pattern.grid.dx();
    std::vector<Extremum> ext;
    for (std::size_t i = lo + 1; i < hi; ++i) {
        const double left = ratio(i - 1);
        const double mid = ratio(i);
        const double right = ratio(i + 1);
        const bool is_max = mid > left && mid >= right;
        const bool is_min = mid < left && mid <= right;
        if (!is_max && !is_min) continue;
        const double curvature = left - 2.0 * mid + right;
        const double offset = curvature != 0.0 ? 0.5 * (left - right) / curvature : 0.0;
        ext.push_back({pattern.grid.x(i) + offset * dx, mid - 0.25 * (left - right) * offset, is_max});
    }

    std::vector<double> max_positions;
    for (const Extremum& e : ext)
        if (e.is_max) max_positions.push_back(e.position);
    if (max_positions.size() < 2)
        throw FringeResolutionError("measure_visibility: " + std::to_string(max_positions.size()) +
                                    " fringe maxima inside the envelope region; visibility undefined");

    double contrast_sum = 0.0;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i + 1 < ext.size(); ++i) {
        if (ext[i].is_max == ext[i + 1].is_max) continue;
        const double hi_v = ext[i].is_max ? ext[i].value : ext[i + 1].value;
        const double lo_v = ext[i].is_max ? ext[i + 1].value : ext[i].value;
        contrast_sum += (hi_v - lo_v) / (hi_v + lo_v);
        ++pairs;
    }
    double spacing = 0.0;
    for (std::size_t i = 0; i + 1 < max_positions.size(); ++i) spacing += max_positions[i + 1] - max_positions[i];
    spacing /= static_cast<double>(max_positions.size() - 1);

    return FringeMeasurement{pairs > 0 ? contrast_sum / static_cast<double>(pairs) : 0.0, spacing, lo, hi + 1,
                             max_positions.size()};
}

VisibilityReport make_visibility_report(const FringeMeasurement& fringes, cplx gamma)
{
    const double d = distinguishability(gamma);
    const double v = fringes.visibility;
    if (v * v + d * d > 1.0 + kComplementarityTol)
        throw NumericalConsistencyError("visibility report: V^2 + D^2 = " + std::to_string(v * v + d * d) +
                                        " exceeds 1");
    return VisibilityReport{v, std::abs(gamma), d, fringes.fringe_spacing, fringes.region_begin, fringes.region_end};
}

} // namespace whichpath
