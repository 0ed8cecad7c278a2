// entwit tests — shared helpers.
#pragma once

#include <complex>
#include <cstdlib>
#include <filesystem>
#include <string>

#include <unistd.h>

#include <entwit/linalg.hpp>
#include <entwit/rng.hpp>

namespace testutil {

/// Largest entrywise absolute difference; 0 means bitwise-equal values.
inline double max_abs_diff(const entwit::Matrix& a, const entwit::Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return 1e300;
    return (a - b).cwiseAbs().maxCoeff();
}

/// Random complex matrix with standard Gaussian entries (seeded).
inline entwit::Matrix random_matrix(int rows, int cols, std::uint64_t seed) {
    entwit::Rng rng(seed);
    return rng.ginibre(rows, cols);
}

/// Random Hermitian matrix (seeded).
inline entwit::Matrix random_hermitian(int d, std::uint64_t seed) {
    const entwit::Matrix g = random_matrix(d, d, seed);
    return 0.5 * (g + g.adjoint());
}

/// Per-process scratch directory for file-based tests.
inline std::filesystem::path scratch_dir() {
    static const std::filesystem::path dir = [] {
        std::filesystem::path p = std::filesystem::temp_directory_path() /
                                  ("entwit_tests_" + std::to_string(::getpid()));
        std::filesystem::create_directories(p);
        return p;
    }();
    return dir;
}

inline std::string scratch_file(const std::string& name) {
    return (scratch_dir() / name).string();
}

} // namespace testutil
