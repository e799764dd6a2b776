#pragma once

// Detection-screen densities for blocked-path and two-path configurations,
// plus fringe visibility.

#include <cstddef>
#include <vector>

#include "whichpath/core.hpp"

namespace whichpath {

enum class PatternKind { path_A_only, path_B_only, two_path };

const char* to_string(PatternKind k);

struct DetectionPattern {
    SpatialGrid grid;
    /// Probability density of X; non-negative, integrates to 1.
    std::vector<double> intensity;
    /// Incoherent part ½(|ψ_A|² + |ψ_B|²) on the same normalization as `intensity`
    /// (equal to `intensity` for a single-path pattern).
    std::vector<double> envelope;
    PatternKind kind;

    double integral() const;
};

/// |ψ|² of one branch; the environment factor plays no role.
DetectionPattern single_path_pattern(const BranchState& branch);

/// Closed form ½(|ψ_A|² + |ψ_B|²) + Re[<Φ_A|Φ_B> conj(ψ_A) ψ_B], divided by the squared
/// norm of the joint state so that it integrates to 1. Values below -1e-9 raise
/// NumericalConsistencyError; smaller negative round-off is clamped to 0.
DetectionPattern two_path_pattern(const TwoPathState& state);

/// Marginal of |Ψ(X_i, q_j)|² over the environment index, with the joint amplitude
/// built literally from both branches. Needs M <= 8 and n_points * 2^M <= 2^24.
DetectionPattern joint_pattern_bruteforce(const TwoPathState& state);

struct FringeMeasurement {
    double visibility;
    double fringe_spacing;
    std::size_t region_begin;
    std::size_t region_end;
    std::size_t n_maxima;
};

/// Contrast of the envelope-normalized pattern I/envelope inside the contiguous
/// region around the envelope peak where envelope >= threshold * max. Extrema are
/// found by 3-point comparison and refined by a parabolic vertex; the visibility is
/// the mean of (I_max - I_min)/(I_max + I_min) over adjacent extremum pairs.
/// FringeResolutionError with fewer than two maxima in the region.
FringeMeasurement measure_visibility(const DetectionPattern& pattern, double envelope_threshold = 0.25);

struct VisibilityReport {
    double visibility;
    double gamma_magnitude;
    double distinguishability;
    double fringe_spacing;
    std::size_t region_begin;
    std::size_t region_end;
};

/// Combines a fringe measurement with the environment overlap γ.
VisibilityReport make_visibility_report(const FringeMeasurement& fringes, cplx gamma);

} // namespace whichpath
