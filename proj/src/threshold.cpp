// entwit: bipartite entanglement-detection toolkit
// threshold.cpp — bisection for detection thresholds.

#include "entwit/threshold.hpp"

#include <cmath>
#include <sstream>

namespace entwit {

ThresholdResult bisect_threshold(const std::function<double(double)>& diagnostic,
                                 double lo, double hi, double tol) {
    if (!(tol > 0.0)) throw ParameterError("bisect_threshold: tol must be positive");
    if (!(lo < hi)) throw ParameterError("bisect_threshold: need lo < hi");
    double d_lo = diagnostic(lo);
    const double d_hi = diagnostic(hi);
    if (std::signbit(d_lo) == std::signbit(d_hi)) {
        std::ostringstream msg;
        msg << "bisect_threshold: no sign change on [" << lo << ", " << hi
            << "] (diagnostic " << d_lo << " at lo, " << d_hi << " at hi)";
        throw BracketError(msg.str(), d_lo, d_hi);
    }
    ThresholdResult r;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double d_mid = diagnostic(mid);
        ++r.iterations;
        if (std::signbit(d_mid) == std::signbit(d_lo)) {
            lo = mid;
            d_lo = d_mid;
        } else {
            hi = mid;
        }
    }
    r.p_star = 0.5 * (lo + hi);
    r.diagnostic = diagnostic(r.p_star);
    return r;
}

} // namespace entwit
