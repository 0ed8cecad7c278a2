// entwit: bipartite entanglement-detection toolkit
// linalg.cpp — dense complex matrix kernel.

#include "entwit/linalg.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace entwit {

namespace {

// Shared validation for the Hermitian-eigenvalue entry points.
Matrix checked_hermitian(const Matrix& h, const char* where) {
    if (h.rows() != h.cols()) {
        std::ostringstream msg;
        msg << where << ": matrix is " << h.rows() << "x" << h.cols() << ", expected square";
        throw DimensionError(msg.str());
    }
    const double defect = hermiticity_defect(h);
    if (defect > 1e-10) {
        std::ostringstream msg;
        msg << where << ": input is not Hermitian (relative defect " << defect
            << " exceeds 1e-10)";
        throw InvariantError(msg.str());
    }
    return hermitize(h);
}

} // namespace

void require_bipartite(const Matrix& mat, BipartiteDims dims, const char* where) {
    if (dims.m < 1 || dims.n < 1) {
        std::ostringstream msg;
        msg << where << ": subsystem dims (" << dims.m << ", " << dims.n
            << ") must both be >= 1";
        throw DimensionError(msg.str());
    }
    if (mat.rows() != dims.total() || mat.cols() != dims.total()) {
        std::ostringstream msg;
        msg << where << ": matrix is " << mat.rows() << "x" << mat.cols()
            << ", expected " << dims.total() << "x" << dims.total() << " for dims ("
            << dims.m << ", " << dims.n << ")";
        throw DimensionError(msg.str());
    }
}

Matrix vec(const Matrix& a) {
    Matrix v(a.rows() * a.cols(), 1);
    for (int j = 0; j < a.cols(); ++j)
        for (int i = 0; i < a.rows(); ++i) v(j * a.rows() + i, 0) = a(i, j);
    return v;
}

Matrix unvec(const Matrix& v, int rows, int cols) {
    if (v.cols() != 1 || v.rows() != static_cast<long>(rows) * cols) {
        std::ostringstream msg;
        msg << "unvec: input is " << v.rows() << "x" << v.cols() << ", expected "
            << rows * cols << "x1";
        throw DimensionError(msg.str());
    }
    Matrix a(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) a(i, j) = v(j * rows + i, 0);
    return a;
}

Matrix realign(const Matrix& z, BipartiteDims dims) {
    require_bipartite(z, dims, "realign");
    const int m = dims.m, n = dims.n;
    Matrix out(m * m, n * n);
    // Row (j·m + i) is vec of block (i, j); blocks run column-major.
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i)
            for (int bj = 0; bj < n; ++bj)
                for (int bi = 0; bi < n; ++bi)
                    out(j * m + i, bj * n + bi) = z(i * n + bi, j * n + bj);
    return out;
}

Matrix realign_inverse(const Matrix& y, BipartiteDims dims) {
    const int m = dims.m, n = dims.n;
    if (dims.m < 1 || dims.n < 1 || y.rows() != static_cast<long>(m) * m ||
        y.cols() != static_cast<long>(n) * n) {
        std::ostringstream msg;
        msg << "realign_inverse: input is " << y.rows() << "x" << y.cols()
            << ", expected " << m * m << "x" << n * n << " for dims (" << m << ", " << n
            << ")";
        throw DimensionError(msg.str());
    }
    Matrix z(m * n, m * n);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i)
            for (int bj = 0; bj < n; ++bj)
                for (int bi = 0; bi < n; ++bi)
                    z(i * n + bi, j * n + bj) = y(j * m + i, bj * n + bi);
    return z;
}

Matrix partial_transpose_A(const Matrix& rho, BipartiteDims dims) {
    require_bipartite(rho, dims, "partial_transpose_A");
    const int m = dims.m, n = dims.n;
    Matrix out(m * n, m * n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            out.block(i * n, j * n, n, n) = rho.block(j * n, i * n, n, n);
    return out;
}

Matrix partial_transpose_B(const Matrix& rho, BipartiteDims dims) {
    require_bipartite(rho, dims, "partial_transpose_B");
    const int m = dims.m, n = dims.n;
    Matrix out(m * n, m * n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            out.block(i * n, j * n, n, n) = rho.block(i * n, j * n, n, n).transpose();
    return out;
}

double trace_norm(const Matrix& g) {
    Eigen::JacobiSVD<Matrix> dec(g);
    return dec.singularValues().sum();
}

SvdResult svd(const Matrix& g) {
    Eigen::JacobiSVD<Matrix> dec(g, Eigen::ComputeThinU | Eigen::ComputeThinV);
    SvdResult r;
    r.U = dec.matrixU();
    r.S = dec.singularValues();
    r.V = dec.matrixV();
    // Deterministic phase convention: rotate each (u_k, v_k) pair by the same
    // unit scalar so that the largest-magnitude entry of u_k is real positive
    // (ties: lowest row index). The joint rotation leaves U·diag(S)·V† intact.
    for (int k = 0; k < r.U.cols(); ++k) {
        int best = 0;
        double best_mag = std::abs(r.U(0, k));
        for (int i = 1; i < r.U.rows(); ++i) {
            const double mag = std::abs(r.U(i, k));
            if (mag > best_mag) {
                best_mag = mag;
                best = i;
            }
        }
        if (best_mag > 0.0) {
            const Complex phase = r.U(best, k) / best_mag;
            r.U.col(k) *= std::conj(phase);
            r.V.col(k) *= std::conj(phase);
        }
    }
    return r;
}

double hermiticity_defect(const Matrix& h) {
    if (h.rows() != h.cols()) throw DimensionError("hermiticity_defect: matrix not square");
    const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
    return (h - h.adjoint()).cwiseAbs().maxCoeff() / scale;
}

Matrix hermitize(const Matrix& h) {
    if (h.rows() != h.cols()) throw DimensionError("hermitize: matrix not square");
    return 0.5 * (h + h.adjoint());
}

double min_eigenvalue(const Matrix& h) {
    const Matrix sym = checked_hermitian(h, "min_eigenvalue");
    Eigen::SelfAdjointEigenSolver<Matrix> es(sym, Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
}

double max_eigenvalue(const Matrix& h) {
    const Matrix sym = checked_hermitian(h, "max_eigenvalue");
    Eigen::SelfAdjointEigenSolver<Matrix> es(sym, Eigen::EigenvaluesOnly);
    return es.eigenvalues()(sym.rows() - 1);
}

Eigen::VectorXd eigenvalues(const Matrix& h) {
    const Matrix sym = checked_hermitian(h, "eigenvalues");
    Eigen::SelfAdjointEigenSolver<Matrix> es(sym, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Matrix max_entangled_projector(int m) {
    if (m < 1) throw DimensionError("max_entangled_projector: m must be >= 1");
    Matrix p = Matrix::Zero(m * m, m * m);
    const double w = 1.0 / m;  // (1/√m)·(1/√m)
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) p(i * m + i, j * m + j) = w;
    return p;
}

} // namespace entwit
