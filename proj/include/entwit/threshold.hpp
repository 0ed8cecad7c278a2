// entwit: bipartite entanglement-detection toolkit
// threshold.hpp — bisection for detection thresholds along one-parameter families.
#pragma once

#include <functional>

#include "entwit/error.hpp"

namespace entwit {

struct ThresholdResult {
    double p_star = 0.0;       ///< located sign change
    double diagnostic = 0.0;   ///< diagnostic value at p_star
    int iterations = 0;
};

/// Bisection on a signed diagnostic d(p) over [lo, hi] until the interval is
/// shorter than tol. The diagnostic must change sign between the endpoints;
/// otherwise BracketError carrying both endpoint values. The sign convention
/// is irrelevant (only the change is used); monotonicity is assumed per the
/// single-threshold structure of the families and is guarded exactly by the
/// endpoint check.
ThresholdResult bisect_threshold(const std::function<double(double)>& diagnostic,
                                 double lo, double hi, double tol = 1e-5);

} // namespace entwit
