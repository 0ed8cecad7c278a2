// entwit: bipartite entanglement-detection toolkit
// states.cpp — benchmark states and seeded random samplers.

#include "entwit/states.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace entwit {

void validate_density(const DensityMatrix& rho, const char* where) {
    require_bipartite(rho.mat, rho.dims, where);
    const double defect = hermiticity_defect(rho.mat);
    if (defect > 1e-10) {
        std::ostringstream msg;
        msg << where << ": density matrix not Hermitian (relative defect " << defect
            << " exceeds 1e-10)";
        throw InvariantError(msg.str());
    }
    const double tr = rho.mat.trace().real();
    if (std::abs(tr - 1.0) > 1e-10) {
        std::ostringstream msg;
        msg << where << ": density matrix trace " << tr << " differs from 1 by more than 1e-10";
        throw InvariantError(msg.str());
    }
    const double lmin = min_eigenvalue(rho.mat);
    if (lmin < -1e-9) {
        std::ostringstream msg;
        msg << where << ": density matrix has eigenvalue " << lmin << " below -1e-9";
        throw InvariantError(msg.str());
    }
}

Matrix swap_2x2() {
    Matrix v = Matrix::Zero(4, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) v(i * 2 + j, j * 2 + i) = 1.0;  // |ij⟩⟨ji|
    return v;
}

DensityMatrix werner_2x2(double f) {
    if (!(f >= -1.0 && f <= 1.0)) {
        std::ostringstream msg;
        msg << "werner_2x2: f must lie in [-1, 1], got " << f;
        throw ParameterError(msg.str());
    }
    DensityMatrix rho;
    rho.dims = {2, 2};
    rho.mat = ((2.0 - f) * Matrix::Identity(4, 4) + (2.0 * f - 1.0) * swap_2x2()) / 6.0;
    return rho;
}

Matrix upb_tiles_vectors() {
    // Five orthonormal product vectors on C³⊗C³ (tiles pattern), index a·3+b.
    const double s = 1.0 / std::sqrt(2.0);
    Matrix v = Matrix::Zero(9, 5);
    v(0, 0) = s;  v(1, 0) = -s;               // |0⟩(|0⟩−|1⟩)/√2
    v(2, 1) = s;  v(5, 1) = -s;               // (|0⟩−|1⟩)|2⟩/√2
    v(7, 2) = s;  v(8, 2) = -s;               // |2⟩(|1⟩−|2⟩)/√2
    v(3, 3) = s;  v(6, 3) = -s;               // (|1⟩−|2⟩)|0⟩/√2
    for (int k = 0; k < 9; ++k) v(k, 4) = 1.0 / 3.0;  // uniform product vector
    return v;
}

DensityMatrix upb_tiles_bes() {
    const Matrix v = upb_tiles_vectors();
    DensityMatrix rho;
    rho.dims = {3, 3};
    rho.mat = 0.25 * (Matrix::Identity(9, 9) - v * v.adjoint());
    return rho;
}

DensityMatrix horodecki_2x4(double b) {
    if (!(b > 0.0 && b < 1.0)) {
        std::ostringstream msg;
        msg << "horodecki_2x4: b must lie in (0, 1), got " << b;
        throw ParameterError(msg.str());
    }
    Matrix m = Matrix::Zero(8, 8);
    for (int i = 0; i < 8; ++i) m(i, i) = b;
    m(4, 4) = (1.0 + b) / 2.0;
    m(7, 7) = (1.0 + b) / 2.0;
    for (int i = 0; i < 3; ++i) {
        m(i, i + 5) = b;
        m(i + 5, i) = b;
    }
    const double c = std::sqrt(1.0 - b * b) / 2.0;
    m(4, 7) = c;
    m(7, 4) = c;
    DensityMatrix rho;
    rho.dims = {2, 4};
    rho.mat = m / (7.0 * b + 1.0);
    return rho;
}

DensityMatrix noisy_mixture(const DensityMatrix& rho, double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        std::ostringstream msg;
        msg << "noisy_mixture: p must lie in [0, 1], got " << p;
        throw ParameterError(msg.str());
    }
    const int d = rho.dims.total();
    require_bipartite(rho.mat, rho.dims, "noisy_mixture");
    DensityMatrix out;
    out.dims = rho.dims;
    out.mat = p * rho.mat + ((1.0 - p) / d) * Matrix::Identity(d, d);
    return out;
}

DensityMatrix random_density(BipartiteDims dims, Rng& rng) {
    const int d = dims.total();
    const Matrix g = rng.ginibre(d, d);
    Matrix m = g * g.adjoint();
    m /= m.trace().real();
    return {hermitize(m), dims};
}

DensityMatrix random_density(BipartiteDims dims, std::uint64_t seed) {
    Rng rng(seed);
    return random_density(dims, rng);
}

DensityMatrix random_ppt_symmetric(BipartiteDims dims, Rng& rng, int max_tries) {
    for (int t = 0; t < max_tries; ++t) {
        DensityMatrix sigma = random_density(dims, rng);
        sigma.mat = hermitize(0.5 * (sigma.mat + partial_transpose_A(sigma.mat, dims)));
        Eigen::SelfAdjointEigenSolver<Matrix> es(sigma.mat);
        const Eigen::VectorXd ev = es.eigenvalues();
        if (ev(0) < -1e-10) continue;  // the averaged matrix lost positivity; redraw
        if (ev(0) < 0.0) {
            // Clip the negative dust and renormalize the trace.
            Eigen::VectorXd clipped = ev.cwiseMax(0.0);
            sigma.mat = es.eigenvectors() * clipped.asDiagonal() * es.eigenvectors().adjoint();
            sigma.mat = hermitize(0.5 * (sigma.mat + partial_transpose_A(sigma.mat, dims)));
            sigma.mat /= sigma.mat.trace().real();
        }
        return sigma;
    }
    std::ostringstream msg;
    msg << "random_ppt_symmetric: no PSD sample after " << max_tries << " tries for dims ("
        << dims.m << ", " << dims.n << ")";
    throw Error(msg.str());
}

DensityMatrix random_ppt_symmetric(BipartiteDims dims, std::uint64_t seed, int max_tries) {
    Rng rng(seed);
    return random_ppt_symmetric(dims, rng, max_tries);
}

DensityMatrix random_pure_product(BipartiteDims dims, Rng& rng) {
    const Vector a = rng.haar_vector(dims.m);
    const Vector b = rng.haar_vector(dims.n);
    Vector ab(dims.total());
    for (int i = 0; i < dims.m; ++i)
        for (int j = 0; j < dims.n; ++j) ab(i * dims.n + j) = a(i) * b(j);
    return {ab * ab.adjoint(), dims};
}

DensityMatrix random_pure_product(BipartiteDims dims, std::uint64_t seed) {
    Rng rng(seed);
    return random_pure_product(dims, rng);
}

DensityMatrix random_separable_mixture(BipartiteDims dims, int terms, Rng& rng) {
    if (terms < 1) throw ParameterError("random_separable_mixture: terms must be >= 1");
    const int d = dims.total();
    Matrix m = Matrix::Zero(d, d);
    for (int t = 0; t < terms; ++t) m += random_pure_product(dims, rng).mat;
    return {m / terms, dims};
}

DensityMatrix random_separable_mixture(BipartiteDims dims, int terms, std::uint64_t seed) {
    Rng rng(seed);
    return random_separable_mixture(dims, terms, rng);
}

} // namespace entwit
