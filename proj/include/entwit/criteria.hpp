// entwit: bipartite entanglement-detection toolkit
// criteria.hpp — the two operational separability tests.
//
// Both tests are one-sided: a firing criterion proves entanglement, a silent
// one proves nothing. Decision tolerance is 1e−10 on the diagnostic excess so
// that false positives are impossible at numerical precision.
#pragma once

#include <string>

#include "entwit/states.hpp"

namespace entwit {

inline constexpr double kCriterionTol = 1e-10;

struct CriterionResult {
    std::string criterion_name;
    double value = 0.0;       ///< the diagnostic norm
    double threshold = 1.0;   ///< detection boundary for `value`
    bool entangled = false;
    double min_eig = 0.0;     ///< ppt only: λ_min(ρ^{T_A}); 0 for realignment
};

/// Realignment test: value = ‖R(ρ)‖₁, entangled iff value > 1 + 1e−10.
CriterionResult realignment_check(const DensityMatrix& rho);

/// PPT test: value = ‖ρ^{T_A}‖₁, min_eig = λ_min(ρ^{T_A});
/// entangled iff min_eig < −1e−10 (equivalently value > 1).
CriterionResult ppt_check(const DensityMatrix& rho);

} // namespace entwit
