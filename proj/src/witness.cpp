// entwit: bipartite entanglement-detection toolkit
// witness.cpp — Theorem-1/Theorem-2 constructions, projection witness,
// product-expectation optimization, evaluation.

#include "entwit/witness.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include <Eigen/Eigenvalues>

namespace entwit {

namespace {

// G(a) = Σ_{ij} W_ij · a_j · conj(a_i) over the n×n blocks W_ij of w, so that
// Tr(w · aa†⊗bb†) = b† G(a) b. Hermitian whenever w is.
Matrix g_matrix(const Matrix& w, BipartiteDims dims, const Vector& a) {
    const int m = dims.m, n = dims.n;
    Matrix g = Matrix::Zero(n, n);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            const Complex c = a(j) * std::conj(a(i));
            if (c != Complex(0.0, 0.0)) g += c * w.block(i * n, j * n, n, n);
        }
    }
    return g;
}

double extreme_eigenvalue(const Matrix& g, ExtremumMode mode) {
    const int n = static_cast<int>(g.rows());
    if (n == 1) return g(0, 0).real();
    if (n == 2) {
        // Closed form keeps the dense certification grids cheap.
        const double a = g(0, 0).real(), d = g(1, 1).real();
        const double h = std::abs(g(0, 1));
        const double mid = 0.5 * (a + d);
        const double rad = std::sqrt(0.25 * (a - d) * (a - d) + h * h);
        return mode == ExtremumMode::MIN ? mid - rad : mid + rad;
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(g, Eigen::EigenvaluesOnly);
    return mode == ExtremumMode::MIN ? es.eigenvalues()(0) : es.eigenvalues()(n - 1);
}

// Chart of the pure A-state by 2m−2 angles: hyperspherical moduli
// (θ_1..θ_{m−1}) and phases on components 1..m−1 (component 0 real),
// covering CP^{m−1}.
Vector chart_vector(const std::vector<double>& x, int m) {
    Vector a(m);
    if (m == 1) {
        a(0) = 1.0;
        return a;
    }
    double sines = 1.0;
    std::vector<double> r(m);
    for (int k = 0; k < m - 1; ++k) {
        r[k] = sines * std::cos(x[k]);
        sines *= std::sin(x[k]);
    }
    r[m - 1] = sines;
    a(0) = r[0];
    for (int k = 1; k < m; ++k) {
        const double phi = x[m - 1 + (k - 1)];
        a(k) = Complex(r[k] * std::cos(phi), r[k] * std::sin(phi));
    }
    return a;
}

} // namespace

ProductExtremum product_expectation_extremum(const Matrix& w, BipartiteDims dims,
                                             ExtremumMode mode, std::uint64_t seed) {
    require_bipartite(w, dims, "product_expectation_extremum");
    const int m = dims.m, n = dims.n;
    const int d = 2 * m - 2;
    // Internally minimize: MIN mode uses λ_min(G), MAX mode uses −λ_max(G).
    const auto objective = [&](const std::vector<double>& x) {
        const Vector a = chart_vector(x, m);
        const double lam = extreme_eigenvalue(g_matrix(w, dims, a), mode);
        return mode == ExtremumMode::MIN ? lam : -lam;
    };

    Rng rng(seed);
    std::vector<double> best_x(std::max(d, 0), 0.0);
    double best = objective(best_x);

    if (d > 0) {
        constexpr int kRestarts = 50;
        constexpr double kStepMin = 1e-9;
        for (int trial = 0; trial < kRestarts; ++trial) {
            std::vector<double> x(d);
            for (double& xi : x) xi = 2.0 * M_PI * rng.uniform();
            double f = objective(x);
            double step = 0.5;
            while (step >= kStepMin) {
                bool improved = false;
                for (int k = 0; k < d; ++k) {
                    for (double s : {step, -step}) {
                        std::vector<double> y = x;
                        y[k] += s;
                        const double fy = objective(y);
                        if (fy < f) {
                            x = y;
                            f = fy;
                            improved = true;
                        }
                    }
                }
                if (!improved) step *= 0.5;
            }
            if (f < best) {
                best = f;
                best_x = x;
            }
        }
    }

    ProductExtremum out;
    out.a = chart_vector(best_x, m);
    out.value = mode == ExtremumMode::MIN ? best : -best;

    // Independent certification grid for small A-side dimension. The grid is a
    // feasible-point oracle: it can only tighten the bound, never beat a
    // successful search by more than its own resolution.
    if (m == 2) {
        const int kTheta = 1000, kPhi = 1000;
        double grid_best = std::numeric_limits<double>::infinity();
        for (int it = 0; it < kTheta; ++it) {
            const double theta = (0.5 * M_PI) * it / (kTheta - 1);
            for (int ip = 0; ip < kPhi; ++ip) {
                const double phi = (2.0 * M_PI) * ip / kPhi;
                const double f = objective({theta, phi});
                if (f < grid_best) grid_best = f;
            }
        }
        out.grid_value = mode == ExtremumMode::MIN ? grid_best : -grid_best;
        out.grid_ran = true;
    } else if (m == 3) {
        const int kN = 20;
        double grid_best = std::numeric_limits<double>::infinity();
        for (int i1 = 0; i1 < kN; ++i1)
            for (int i2 = 0; i2 < kN; ++i2)
                for (int p1 = 0; p1 < kN; ++p1)
                    for (int p2 = 0; p2 < kN; ++p2) {
                        const double f = objective({(0.5 * M_PI) * i1 / (kN - 1),
                                                    (0.5 * M_PI) * i2 / (kN - 1),
                                                    (2.0 * M_PI) * p1 / kN,
                                                    (2.0 * M_PI) * p2 / kN});
                        if (f < grid_best) grid_best = f;
                    }
        out.grid_value = mode == ExtremumMode::MIN ? grid_best : -grid_best;
        out.grid_ran = true;
    }
    if (out.grid_ran && ((mode == ExtremumMode::MIN && out.grid_value < out.value) ||
                         (mode == ExtremumMode::MAX && out.grid_value > out.value))) {
        // A grid point beat the search: keep the better certified value.
        out.value = out.grid_value;
    }

    // Extremizing B-side vector at the chosen a.
    Eigen::SelfAdjointEigenSolver<Matrix> es(g_matrix(w, dims, out.a));
    out.b = mode == ExtremumMode::MIN ? es.eigenvectors().col(0) : es.eigenvectors().col(n - 1);
    return out;
}

Witness build_thm1(const DensityMatrix& rho) {
    validate_density(rho, "build_thm1");
    const int d = rho.dims.total();
    const SvdResult dec = svd(realign(rho.mat, rho.dims));
    const Matrix c = dec.U.conjugate() * dec.V.transpose();
    const Matrix raw =
        Matrix::Identity(d, d) - realign_inverse(c, rho.dims).transpose();
    Witness w;
    w.mat = hermitize(raw);
    w.dims = rho.dims;
    w.origin = "thm1";
    w.herm_defect_raw = hermiticity_defect(raw);
    w.sv_min = dec.S(dec.S.size() - 1);
    w.min_eig = min_eigenvalue(w.mat);
    return w;
}

Witness build_thm2(const DensityMatrix& rho) {
    validate_density(rho, "build_thm2");
    const int d = rho.dims.total();
    const SvdResult dec = svd(partial_transpose_A(rho.mat, rho.dims));
    const Matrix c = dec.V * dec.U.adjoint();
    const Matrix raw = Matrix::Identity(d, d) - partial_transpose_A(c, rho.dims);
    Witness w;
    w.mat = hermitize(raw);
    w.dims = rho.dims;
    w.origin = "thm2";
    w.herm_defect_raw = hermiticity_defect(raw);
    w.sv_min = dec.S(dec.S.size() - 1);
    w.min_eig = min_eigenvalue(w.mat);
    return w;
}

Witness build_projection(const DensityMatrix& rho, std::uint64_t seed) {
    validate_density(rho, "build_projection");
    const int d = rho.dims.total();
    const ProductExtremum ex =
        product_expectation_extremum(rho.mat, rho.dims, ExtremumMode::MAX, seed);
    Witness w;
    w.mat = ex.value * Matrix::Identity(d, d) - rho.mat;
    w.dims = rho.dims;
    w.origin = "projection";
    w.herm_defect_raw = 0.0;
    w.sv_min = 0.0;
    w.min_eig = min_eigenvalue(w.mat);
    return w;
}

Witness optimize(const Witness& w, std::uint64_t seed) {
    require_bipartite(w.mat, w.dims, "optimize");
    const ProductExtremum ex =
        product_expectation_extremum(w.mat, w.dims, ExtremumMode::MIN, seed);
    Witness out = w;
    out.mat = w.mat - ex.value * Matrix::Identity(w.mat.rows(), w.mat.cols());
    out.origin = "optimized";
    out.opt_epsilon = ex.value;
    out.min_eig = min_eigenvalue(out.mat);
    return out;
}

double evaluate(const Witness& w, const DensityMatrix& rho) {
    if (w.dims.m != rho.dims.m || w.dims.n != rho.dims.n ||
        w.mat.rows() != rho.mat.rows()) {
        std::ostringstream msg;
        msg << "evaluate: witness dims (" << w.dims.m << ", " << w.dims.n
            << ") do not match state dims (" << rho.dims.m << ", " << rho.dims.n << ")";
        throw DimensionError(msg.str());
    }
    const Complex tr = (w.mat * rho.mat).trace();
    if (std::abs(tr.imag()) > 1e-10 * std::max(1.0, std::abs(tr.real()))) {
        std::ostringstream msg;
        msg << "evaluate: Tr(W·rho) has imaginary residue " << tr.imag()
            << " above 1e-10 (non-Hermitian inputs?)";
        throw InvariantError(msg.str());
    }
    return tr.real();
}

} // namespace entwit
