// entwit: bipartite entanglement-detection toolkit
// states.hpp — generators for the benchmark states and seeded random samplers.
#pragma once

#include <cstdint>

#include "entwit/linalg.hpp"
#include "entwit/rng.hpp"

namespace entwit {

/// A bipartite density matrix: Hermitian, unit trace, positive semidefinite
/// (all within the documented tolerances), tagged with its subsystem dims.
struct DensityMatrix {
    Matrix mat;
    BipartiteDims dims;
};

/// Validates the DensityMatrix invariants (Hermitian within 1e−10, trace 1
/// within 1e−10, min eigenvalue ≥ −1e−9); throws InvariantError naming the
/// violated bound.
void validate_density(const DensityMatrix& rho, const char* where);

/// Werner state on a 2×2 system: ρ = ((2−f)·I₄ + (2f−1)·V)/6 where
/// V = Σ_{ij} |ij⟩⟨ji| is the swap operator. Entangled iff f < 0.
/// Requires −1 ≤ f ≤ 1.
DensityMatrix werner_2x2(double f);

/// The swap operator V on C² ⊗ C².
Matrix swap_2x2();

/// Bound entangled 3×3 state from the five-tile unextendible product basis:
/// ρ = (1/4)(Id₉ − Σ_{i=0}^{4} |ψ_i⟩⟨ψ_i|).
DensityMatrix upb_tiles_bes();

/// The five orthonormal product vectors underlying upb_tiles_bes, as columns.
Matrix upb_tiles_vectors();

/// Bound entangled 2×4 state with parameter 0 < b < 1 (8×8, real symmetric,
/// prefactor 1/(7b+1)).
DensityMatrix horodecki_2x4(double b);

/// ρ_p = p·ρ + (1−p)·Id/d with d = dims.total(). Requires 0 ≤ p ≤ 1.
DensityMatrix noisy_mixture(const DensityMatrix& rho, double p);

/// Hilbert–Schmidt random density matrix G·G†/Tr(G·G†), G standard complex
/// Gaussian from the given seed.
DensityMatrix random_density(BipartiteDims dims, std::uint64_t seed);
DensityMatrix random_density(BipartiteDims dims, Rng& rng);

/// Random σ with σ = σ^{T_A} exactly and σ PSD: draws random_density, replaces
/// σ ← (σ + σ^{T_A})/2, accepts when the smallest eigenvalue is ≥ −1e−10
/// (tiny negative dust is clipped to zero and the trace renormalized).
/// Throws Error after max_tries rejections.
DensityMatrix random_ppt_symmetric(BipartiteDims dims, std::uint64_t seed, int max_tries = 1000);
DensityMatrix random_ppt_symmetric(BipartiteDims dims, Rng& rng, int max_tries = 1000);

/// Haar-random pure product state |a⟩⟨a| ⊗ |b⟩⟨b|.
DensityMatrix random_pure_product(BipartiteDims dims, std::uint64_t seed);
DensityMatrix random_pure_product(BipartiteDims dims, Rng& rng);

/// Uniform convex mixture of `terms` independent Haar pure product states.
DensityMatrix random_separable_mixture(BipartiteDims dims, int terms, std::uint64_t seed);
DensityMatrix random_separable_mixture(BipartiteDims dims, int terms, Rng& rng);

} // namespace entwit
