// entwit: bipartite entanglement-detection toolkit
// criteria.cpp — realignment and PPT separability tests.

#include "entwit/criteria.hpp"

namespace entwit {

CriterionResult realignment_check(const DensityMatrix& rho) {
    validate_density(rho, "realignment_check");
    CriterionResult r;
    r.criterion_name = "realignment";
    r.value = trace_norm(realign(rho.mat, rho.dims));
    r.threshold = 1.0;
    r.entangled = r.value > r.threshold + kCriterionTol;
    r.min_eig = 0.0;
    return r;
}

CriterionResult ppt_check(const DensityMatrix& rho) {
    validate_density(rho, "ppt_check");
    const Matrix pt = partial_transpose_A(rho.mat, rho.dims);
    CriterionResult r;
    r.criterion_name = "ppt";
    r.value = trace_norm(pt);
    r.threshold = 1.0;
    r.min_eig = min_eigenvalue(pt);
    r.entangled = r.min_eig < -kCriterionTol;
    return r;
}

} // namespace entwit
