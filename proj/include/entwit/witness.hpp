// entwit: bipartite entanglement-detection toolkit
// witness.hpp — universal entanglement-witness constructions and optimization.
//
// The two universal constructions build a witness directly from a target state:
//   thm1:  R(ρ) = U Σ V†  →  W = Id − (R⁻¹(U* Vᵀ))ᵀ      with Tr(Wρ) = 1 − ‖R(ρ)‖₁
//   thm2:  ρ^{T_A} = U Σ V†  →  W = Id − (V U†)^{T_A}     with Tr(Wρ) = 1 − ‖ρ^{T_A}‖₁
// Both outputs are Hermitized as (W + W†)/2. For full-rank inputs the raw
// Hermiticity defect is roundoff-level; when the decomposed matrix is
// rank-deficient the zero-singular-value columns are convention-dependent and
// the raw defect can be O(1), so it is recorded (together with the smallest
// singular value) as a degeneracy diagnostic instead of being asserted away.
// The trace identities above hold either way and are the tested contract.
#pragma once

#include <cstdint>
#include <string>

#include "entwit/states.hpp"

namespace entwit {

inline constexpr double kOptTol = 1e-6;       ///< optimizer certification target
inline constexpr double kWitnessTol = 1e-10;  ///< detection boundary on Tr(Wρ)

struct Witness {
    Matrix mat;
    BipartiteDims dims;
    std::string origin;          ///< thm1 | thm2 | projection | optimized | file
    double herm_defect_raw = 0;  ///< Hermiticity defect before symmetrization
    double sv_min = 0;           ///< smallest singular value of the decomposed matrix
    double min_eig = 0;          ///< λ_min(W): negative ⇔ witness can fire (recorded)
    double opt_epsilon = 0;      ///< ε subtracted by optimize(); 0 otherwise
};

/// Theorem-1 witness of ρ (see file header). Contract: Tr(Wρ) = 1 − ‖R(ρ)‖₁.
Witness build_thm1(const DensityMatrix& rho);

/// Theorem-2 witness of ρ (see file header). Contract: Tr(Wρ) = 1 − ‖ρ^{T_A}‖₁.
Witness build_thm2(const DensityMatrix& rho);

/// Projection witness W = ε·Id − ρ with ε the maximum of Tr(ρ·σ_A⊗σ_B) over
/// pure product states (computed by product_expectation_extremum, MAX mode).
Witness build_projection(const DensityMatrix& rho, std::uint64_t seed = 7);

enum class ExtremumMode { MIN, MAX };

/// Result of the product-expectation optimization. `certified` reports the
/// agreement |value − grid_value| when the independent grid oracle ran
/// (m ≤ 3); the search value is always the returned `value`.
struct ProductExtremum {
    double value = 0.0;
    Vector a;              ///< extremizing pure state on A
    Vector b;              ///< extremizing pure state on B (eigenvector of G(a))
    double grid_value = 0.0;
    bool grid_ran = false;
};

/// Extremum over pure product states of Tr(W·σ_A⊗σ_B). For fixed a the inner
/// extremum is the extreme eigenvalue of G(a) = Σ_{ij} W_{ij}·a_j·conj(a_i)
/// over the n×n blocks W_{ij} of W, so only the A-side is searched: 2m−2
/// hypersphere angles, 50 seeded restarts of a derivative-free local descent
/// (convergence when the step drops below 1e−9), plus an independent dense
/// grid as a certifying oracle for m ≤ 3 (1000×1000 over the Bloch sphere when
/// m = 2). Always returns the best value found.
ProductExtremum product_expectation_extremum(const Matrix& w, BipartiteDims dims,
                                             ExtremumMode mode, std::uint64_t seed = 7);

/// W′ = W − ε·Id with ε = product_expectation_extremum(W, MIN).value.
/// W′ is still a witness: its product expectations are ≥ −kOptTol by
/// construction, and it detects at least as much as W when ε ≥ 0.
Witness optimize(const Witness& w, std::uint64_t seed = 7);

/// Re(Tr(W·ρ)); asserts the imaginary residue is below 1e−10 (InvariantError
/// otherwise) and that dimensions match (DimensionError).
double evaluate(const Witness& w, const DensityMatrix& rho);

} // namespace entwit
