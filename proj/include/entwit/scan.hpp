// entwit: bipartite entanglement-detection toolkit
// scan.hpp — parameter scans over the bundled state families, CSV output.
//
// CSV layout (versioned by the "# entwit-scan v1" header):
//   param,realign_norm,ppt_min_eig,witness_value,map_lambda_min,
//   realign_detects,ppt_detects,witness_detects,map_detects
// Witness/map columns are empty when no witness/map is supplied. The
// random-ppt family appends a "# detection_rate <k>/<N> = <r>" trailer.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "entwit/maps.hpp"
#include "entwit/witness.hpp"

namespace entwit {

struct ScanOptions {
    std::string family;   ///< werner | upb-noisy | horodecki | horodecki-noisy | random-ppt
    double lo = 0.0;      ///< grid start (inclusive)
    double hi = 1.0;      ///< grid end (inclusive)
    int steps = 101;      ///< number of grid points
    double b = 0.218;     ///< fixed b for horodecki-noisy
    int samples = 10000;  ///< sample count for random-ppt
    std::uint64_t seed = 7;
    std::optional<Witness> witness;   ///< optional Tr(Wρ) column
    std::optional<LinearMap> map;     ///< optional λ_min[(Id⊗Λ)ρ] column
};

struct ScanSummary {
    int rows = 0;
    int detections = 0;  ///< rows where any requested detector fired
};

/// Runs the scan and streams CSV rows; throws ParameterError on an unknown
/// family or a bad range, DimensionError on a witness/map whose dimensions do
/// not fit the family.
ScanSummary run_scan(const ScanOptions& opt, std::ostream& csv);

/// The state a scan family produces at one parameter value (exposed for tests
/// and the threshold command).
DensityMatrix scan_family_state(const std::string& family, double param, double b);

} // namespace entwit
