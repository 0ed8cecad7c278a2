// entwit: bipartite entanglement-detection toolkit
// linalg.hpp — dense complex matrix kernel.
//
// Conventions used throughout the toolkit:
//  * A bipartite operator on an (m, n) system is an mn×mn matrix viewed as an
//    m×m grid of n×n blocks; block (i, j) is rows [i·n, (i+1)·n) × cols
//    [j·n, (j+1)·n).
//  * vec() stacks columns.
//  * realign() maps the mn×mn block matrix Z to the m²×n² matrix whose rows are
//    vec(Z_{1,1})ᵀ, …, vec(Z_{m,1})ᵀ, vec(Z_{1,2})ᵀ, …, vec(Z_{m,m})ᵀ
//    (blocks enumerated column-major); realign_inverse is its exact inverse.
#pragma once

#include <complex>

#include <Eigen/Dense>

#include "entwit/error.hpp"

namespace entwit {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Complex = std::complex<double>;

/// Subsystem dimensions (m for side A, n for side B) of a bipartite operator.
struct BipartiteDims {
    int m = 1;
    int n = 1;

    int total() const { return m * n; }
};

/// Throws DimensionError unless `mat` is dims.total() square.
void require_bipartite(const Matrix& mat, BipartiteDims dims, const char* where);

/// Column-stacking vec: m×n matrix → (m·n)×1 vector.
Matrix vec(const Matrix& a);

/// Inverse of vec for a known target shape.
Matrix unvec(const Matrix& v, int rows, int cols);

/// Realignment R(Z): mn×mn → m²×n² (see file header for the row order).
Matrix realign(const Matrix& z, BipartiteDims dims);

/// Exact inverse permutation of realign: m²×n² → mn×mn.
Matrix realign_inverse(const Matrix& y, BipartiteDims dims);

/// Partial transpose on subsystem A: block (i,j) of the output is block (j,i)
/// of the input. Involutive; preserves trace and Hermiticity.
Matrix partial_transpose_A(const Matrix& rho, BipartiteDims dims);

/// Partial transpose on subsystem B: each n×n block is transposed in place.
Matrix partial_transpose_B(const Matrix& rho, BipartiteDims dims);

/// Trace norm ‖G‖₁ = Σ singular values (any rectangular G).
double trace_norm(const Matrix& g);

/// Compact singular value decomposition G = U diag(S) V† with q = min(rows, cols)
/// columns, singular values descending, and a deterministic phase convention:
/// within each column of U the largest-magnitude entry (ties: lowest row index)
/// is rotated to be real positive, with the compensating phase applied to V.
struct SvdResult {
    Matrix U;           ///< rows×q
    Eigen::VectorXd S;  ///< q nonnegative, descending
    Matrix V;           ///< cols×q
};
SvdResult svd(const Matrix& g);

/// Relative Hermiticity defect max|H − H†| / max(1, max|H|).
double hermiticity_defect(const Matrix& h);

/// (H + H†)/2.
Matrix hermitize(const Matrix& h);

/// Smallest real eigenvalue of a Hermitian matrix. The input must be Hermitian
/// within 1e−10 relative tolerance (it is symmetrized before decomposition);
/// otherwise InvariantError.
double min_eigenvalue(const Matrix& h);

/// Largest real eigenvalue under the same contract as min_eigenvalue.
double max_eigenvalue(const Matrix& h);

/// Full ascending eigenvalue list of a Hermitian matrix (same tolerance contract).
Eigen::VectorXd eigenvalues(const Matrix& h);

/// Kronecker product A ⊗ B.
Matrix kron(const Matrix& a, const Matrix& b);

/// Projector |Φ⟩⟨Φ| onto the maximally entangled state
/// |Φ⟩ = (1/√m) Σ_i |ii⟩ in C^m ⊗ C^m.
Matrix max_entangled_projector(int m);

} // namespace entwit
