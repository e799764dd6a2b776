#pragma once

// Cross-module invariant suite behind `validate`. Every check measures a
// residual at fixed seeds and passes when residual <= tolerance * scale.

#include <functional>
#include <string>
#include <vector>

namespace whichpath {

struct InvariantCheck {
    std::string name;
    double tolerance;
    std::function<double()> measure;
};

struct InvariantResult {
    std::string name;
    double residual;
    double tolerance;
    bool pass;
    std::string error;
};

const std::vector<InvariantCheck>& invariant_suite();

/// Runs the suite sequentially in declaration order. An exception thrown by a
/// check is reported as a failure with its message in `error`.
std::vector<InvariantResult> run_invariant_suite(double tolerance_scale = 1.0);

} // namespace whichpath
