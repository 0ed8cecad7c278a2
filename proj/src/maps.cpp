// entwit: bipartite entanglement-detection toolkit
// maps.cpp — Jamiołkowski conversions, map application, duals, the bundled
// indecomposable map, and certification helpers.

#include "entwit/maps.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace entwit {

namespace {

void require_map(const LinearMap& map, const char* where) {
    if (map.in_dim < 1 || map.out_dim < 1 ||
        map.blocks.size() != static_cast<size_t>(map.in_dim)) {
        std::ostringstream msg;
        msg << where << ": malformed map (in_dim " << map.in_dim << ", out_dim "
            << map.out_dim << ", " << map.blocks.size() << " block rows)";
        throw DimensionError(msg.str());
    }
    for (const auto& row : map.blocks) {
        if (row.size() != static_cast<size_t>(map.in_dim))
            throw DimensionError(std::string(where) + ": ragged block grid");
        for (const auto& blk : row)
            if (blk.rows() != map.out_dim || blk.cols() != map.out_dim)
                throw DimensionError(std::string(where) + ": block is not out_dim square");
    }
}

} // namespace

LinearMap from_witness(const Witness& w) {
    require_bipartite(w.mat, w.dims, "from_witness");
    const int m = w.dims.m, n = w.dims.n;
    LinearMap map;
    map.in_dim = m;
    map.out_dim = n;
    map.blocks.assign(m, std::vector<Matrix>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) map.blocks[i][j] = w.mat.block(i * n, j * n, n, n);
    map.flagged_positive = true;  // block-positivity of a witness ⇔ positivity of its map
    return map;
}

Witness to_witness(const LinearMap& map) {
    require_map(map, "to_witness");
    const int m = map.in_dim, n = map.out_dim;
    Matrix raw(m * n, m * n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) raw.block(i * n, j * n, n, n) = map.blocks[i][j];
    Witness w;
    w.mat = hermitize(raw);
    w.dims = {m, n};
    w.origin = "map";
    w.herm_defect_raw = hermiticity_defect(raw);
    w.sv_min = 0.0;
    w.min_eig = min_eigenvalue(w.mat);
    return w;
}

Matrix apply(const LinearMap& map, const Matrix& x) {
    require_map(map, "apply");
    if (x.rows() != map.in_dim || x.cols() != map.in_dim) {
        std::ostringstream msg;
        msg << "apply: input is " << x.rows() << "x" << x.cols() << ", expected "
            << map.in_dim << "x" << map.in_dim;
        throw DimensionError(msg.str());
    }
    Matrix out = Matrix::Zero(map.out_dim, map.out_dim);
    for (int i = 0; i < map.in_dim; ++i)
        for (int j = 0; j < map.in_dim; ++j) out += x(i, j) * map.blocks[i][j];
    return out;
}

Matrix apply_id_tensor(const LinearMap& map, const DensityMatrix& rho) {
    require_map(map, "apply_id_tensor");
    require_bipartite(rho.mat, rho.dims, "apply_id_tensor");
    if (map.in_dim != rho.dims.n) {
        std::ostringstream msg;
        msg << "apply_id_tensor: map acts on M_" << map.in_dim
            << " but the B side has dimension " << rho.dims.n;
        throw DimensionError(msg.str());
    }
    const int m = rho.dims.m, n = rho.dims.n, b = map.out_dim;
    Matrix out(m * b, m * b);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            out.block(i * b, j * b, b, b) =
                entwit::apply(map, rho.mat.block(i * n, j * n, n, n));
    return out;
}

Matrix apply_tensor_id(const LinearMap& map, const DensityMatrix& rho) {
    require_map(map, "apply_tensor_id");
    require_bipartite(rho.mat, rho.dims, "apply_tensor_id");
    if (map.in_dim != rho.dims.m) {
        std::ostringstream msg;
        msg << "apply_tensor_id: map acts on M_" << map.in_dim
            << " but the A side has dimension " << rho.dims.m;
        throw DimensionError(msg.str());
    }
    const int m = rho.dims.m, n = rho.dims.n, b = map.out_dim;
    Matrix out = Matrix::Zero(b * n, b * n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            out += kron(map.blocks[i][j], rho.mat.block(i * n, j * n, n, n));
    return out;
}

LinearMap dual(const LinearMap& map) {
    require_map(map, "dual");
    LinearMap d;
    d.in_dim = map.out_dim;
    d.out_dim = map.in_dim;
    d.flagged_positive = map.flagged_positive;  // adjoint of a positive map is positive
    d.blocks.assign(d.in_dim, std::vector<Matrix>(d.in_dim));
    for (int k = 0; k < d.in_dim; ++k)
        for (int l = 0; l < d.in_dim; ++l) {
            Matrix blk(d.out_dim, d.out_dim);
            for (int i = 0; i < d.out_dim; ++i)
                for (int j = 0; j < d.out_dim; ++j)
                    blk(i, j) = std::conj(map.blocks[i][j](k, l));
            d.blocks[k][l] = blk;
        }
    return d;
}

namespace {

MapDetectionReport report_from(const Matrix& x) {
    MapDetectionReport report;
    report.operator_spectrum = eigenvalues(hermitize(x));
    report.lambda_min = report.operator_spectrum(0);
    report.entangled = report.lambda_min < -kMapTol;
    return report;
}

} // namespace

MapDetectionReport detection_value(const LinearMap& map, const DensityMatrix& rho) {
    return report_from(apply_id_tensor(map, rho));
}

MapDetectionReport detection_value_auto(const LinearMap& map, const DensityMatrix& rho) {
    if (map.in_dim == rho.dims.n) return report_from(apply_id_tensor(map, rho));
    if (map.in_dim == rho.dims.m) return report_from(apply_tensor_id(map, rho));
    std::ostringstream msg;
    msg << "detection_value_auto: map acts on M_" << map.in_dim
        << " but the state has dims (" << rho.dims.m << ", " << rho.dims.n << ")";
    throw DimensionError(msg.str());
}

double positivity_floor(const LinearMap& map, int samples, std::uint64_t seed) {
    require_map(map, "positivity_floor");
    if (samples < 1) throw ParameterError("positivity_floor: samples must be >= 1");
    Rng rng(seed);
    double floor = std::numeric_limits<double>::infinity();
    for (int s = 0; s < samples; ++s) {
        const Vector psi = rng.haar_vector(map.in_dim);
        const Matrix image = hermitize(entwit::apply(map, psi * psi.adjoint()));
        floor = std::min(floor, min_eigenvalue(image));
    }
    return floor;
}

LinearMap tang_map(double u, double eps) {
    if (!(u > 0.0 && u < 1.0)) {
        std::ostringstream msg;
        msg << "tang_map: u must lie in (0, 1), got " << u;
        throw ParameterError(msg.str());
    }
    const double eps_max = u * u / 6.0;
    if (eps < 0.0) eps = eps_max;  // documented default ε = u²/6
    if (!(eps > 0.0 && eps <= eps_max)) {
        std::ostringstream msg;
        msg << "tang_map: eps must lie in (0, u^2/6] = (0, " << eps_max << "], got " << eps;
        throw ParameterError(msg.str());
    }

    // coeff[k][l](i, j) = coefficient of a_ij in output entry (k, l), all 0-based.
    Eigen::Matrix4d c00 = Eigen::Matrix4d::Zero();
    c00(0, 0) = 1.0 - eps;
    c00(1, 1) = 1.0;
    c00(2, 2) = 2.0;
    c00(3, 3) = 1.0;
    Eigen::Matrix4d c01 = Eigen::Matrix4d::Zero();
    c01(1, 2) = -2.0;
    c01(2, 3) = -2.0;
    c01(2, 0) = u;
    c01(0, 1) = -1.0;
    Eigen::Matrix4d c10 = Eigen::Matrix4d::Zero();
    c10(2, 1) = -2.0;
    c10(3, 2) = -2.0;
    c10(0, 2) = u;
    c10(1, 0) = -1.0;
    Eigen::Matrix4d c11 = Eigen::Matrix4d::Zero();
    c11(0, 0) = u * u;
    c11(0, 3) = -u;
    c11(1, 1) = 2.0;
    c11(3, 0) = -u;
    c11(3, 3) = 1.0;

    LinearMap map;
    map.in_dim = 4;
    map.out_dim = 2;
    map.flagged_positive = true;  // documented claim; see README "Known defects"
    map.blocks.assign(4, std::vector<Matrix>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Matrix blk(2, 2);
            blk(0, 0) = c00(i, j);
            blk(0, 1) = c01(i, j);
            blk(1, 0) = c10(i, j);
            blk(1, 1) = c11(i, j);
            map.blocks[i][j] = blk;
        }
    return map;
}

LinearMap tang_dual(double u, double eps) { return dual(tang_map(u, eps)); }

IndecomposabilityReport indecomposability_certificate(const LinearMap& map,
                                                      const DensityMatrix& rho,
                                                      int positivity_samples,
                                                      std::uint64_t seed) {
    IndecomposabilityReport report;
    report.ppt_min_eig = min_eigenvalue(partial_transpose_A(rho.mat, rho.dims));
    const MapDetectionReport det = detection_value(map, rho);
    report.detection_value = det.lambda_min;
    report.certified = report.ppt_min_eig >= -kMapTol && det.entangled;
    report.positivity_samples = positivity_samples;
    report.positivity_floor = positivity_floor(map, positivity_samples, seed);
    return report;
}

} // namespace entwit
