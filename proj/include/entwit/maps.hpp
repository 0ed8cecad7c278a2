// entwit: bipartite entanglement-detection toolkit
// maps.hpp — positive-map machinery and the bundled indecomposable map.
//
// A LinearMap Λ : M_a → M_b is stored as its images on matrix units,
// blocks[i][j] = Λ(|i⟩⟨j|) (unnormalized Choi data). A witness W on an (m, n)
// system converts to the map Λ(|i⟩⟨j|) = ⟨i|W|j⟩ (the n×n block (i, j) of W)
// and back via W = Σ_ij |i⟩⟨j| ⊗ blocks[i][j]; the two directions are exact
// mutual inverses because the 1/m normalization of the maximally entangled
// projector is deliberately left out of the stored blocks.
#pragma once

#include <cstdint>
#include <vector>

#include "entwit/witness.hpp"

namespace entwit {

inline constexpr double kMapTol = 1e-10;  ///< detection boundary on λ_min

struct LinearMap {
    int in_dim = 0;
    int out_dim = 0;
    std::vector<std::vector<Matrix>> blocks;  ///< blocks[i][j] = Λ(|i⟩⟨j|), out_dim×out_dim
    bool flagged_positive = false;            ///< carrier of the documented positivity claim
};

struct MapDetectionReport {
    double lambda_min = 0.0;
    bool entangled = false;
    Eigen::VectorXd operator_spectrum;  ///< ascending eigenvalues of (Id⊗Λ)ρ
};

struct IndecomposabilityReport {
    bool certified = false;       ///< PPT input state AND the map fires on it
    double ppt_min_eig = 0.0;     ///< λ_min(ρ^{T_A})
    double detection_value = 0.0; ///< λ_min[(Id⊗Λ)ρ]
    /// Advisory only (positivity of Λ is the caller's precondition): smallest
    /// sampled eigenvalue of Λ(|ψ⟩⟨ψ|) over `positivity_samples` Haar states.
    double positivity_floor = 0.0;
    int positivity_samples = 0;
};

/// Witness → map per the block extraction above; the result is positive
/// exactly when W is block-positive, which holds for every witness this
/// toolkit constructs.
LinearMap from_witness(const Witness& w);

/// Map → witness, the exact inverse of from_witness.
Witness to_witness(const LinearMap& map);

/// Λ(X) = Σ_ij X(i,j)·blocks[i][j]. X must be in_dim square.
Matrix apply(const LinearMap& map, const Matrix& x);

/// (Id ⊗ Λ)ρ: output block (i, j) = Λ(block_ij(ρ)). Requires Λ.in_dim = ρ.dims.n.
Matrix apply_id_tensor(const LinearMap& map, const DensityMatrix& rho);

/// (Λ ⊗ Id)ρ = Σ_ij blocks[i][j] ⊗ block_ij(ρ). Requires Λ.in_dim = ρ.dims.m.
Matrix apply_tensor_id(const LinearMap& map, const DensityMatrix& rho);

/// Hilbert–Schmidt adjoint Λ′ (Tr(Λ(A)†B) = Tr(A†Λ′(B))): index transposition
/// blocks′[k][l](i, j) = conj(blocks[i][j](k, l)).
LinearMap dual(const LinearMap& map);

/// λ_min of the symmetrized (Id⊗Λ)ρ; entangled iff < −1e−10 (valid verdict
/// only for positive Λ).
MapDetectionReport detection_value(const LinearMap& map, const DensityMatrix& rho);

/// Side-matching variant: (Id⊗Λ)ρ when Λ.in_dim = ρ.dims.n (preferred), else
/// (Λ⊗Id)ρ when Λ.in_dim = ρ.dims.m; DimensionError when neither side fits.
/// Both forms are valid one-sided tests for positive Λ.
MapDetectionReport detection_value_auto(const LinearMap& map, const DensityMatrix& rho);

/// Smallest eigenvalue of Λ(|ψ⟩⟨ψ|) over `samples` Haar-random pure ψ —
/// the sampled positivity certification (not a proof).
double positivity_floor(const LinearMap& map, int samples, std::uint64_t seed);

/// Indecomposable 4→2 map with parameters 0 < u < 1 and 0 < ε ≤ u²/6
/// (defaulted to the boundary ε = u²/6 when eps < 0 is passed). On
/// a = [a_ij] ∈ M₄ the output entries are
///   out11 = (1−ε)a₁₁ + a₂₂ + 2a₃₃ + a₄₄
///   out12 = −2a₂₃ − 2a₃₄ + u·a₃₁ − a₁₂
///   out21 = −2a₃₂ − 2a₄₃ + u·a₁₃ − a₂₁
///   out22 = u²a₁₁ − u·a₁₄ + 2a₂₂ − u·a₄₁ + a₄₄
/// NOTE: as published, these coefficients do NOT give a positive map — see
/// README "Known defects" and the tang_claims test suite. The map still flags
/// every state of the bundled 2×4 bound entangled family (its published
/// purpose), and that detection behavior is pinned by green tests.
LinearMap tang_map(double u, double eps = -1.0);

/// Hilbert–Schmidt adjoint of tang_map (2→4), same parameter validation.
LinearMap tang_dual(double u, double eps = -1.0);

/// True iff ρ is PPT (λ_min(ρ^{T_A}) ≥ −1e−10) and Λ fires on it — detection
/// of a PPT state certifies that a positive Λ is not decomposable into
/// CP + CP∘transpose. Positivity of Λ is a precondition; the report carries
/// an advisory sampled floor so the caller can audit it.
IndecomposabilityReport indecomposability_certificate(const LinearMap& map,
                                                      const DensityMatrix& rho,
                                                      int positivity_samples = 2000,
                                                      std::uint64_t seed = 11);

} // namespace entwit
