// entwit: bipartite entanglement-detection toolkit
// rng.hpp — seeded deterministic random source.
//
// All stochastic pieces of the toolkit (state samplers, optimizer restarts,
// positivity certification) draw from this one generator type so that a fixed
// 64-bit seed reproduces results bitwise on every platform. The normal variate
// is a hand-rolled Box–Muller on top of the raw mt19937_64 stream; the standard
// library's std::normal_distribution is implementation-defined and would not
// reproduce across toolchains.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace entwit {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in (0, 1): top 53 bits of the raw draw, offset half a step
    /// so 0 and 1 are both unreachable (safe for logarithms).
    double uniform() {
        const std::uint64_t x = engine_();
        return (static_cast<double>(x >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Standard normal via Box–Muller; one spare value is cached.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    /// Standard complex normal: independent N(0,1) real and imaginary parts.
    std::complex<double> complex_normal() {
        const double re = normal();
        return {re, normal()};
    }

    /// Haar-distributed unit vector in C^dim (normalized complex Gaussian).
    Eigen::VectorXcd haar_vector(int dim) {
        Eigen::VectorXcd v(dim);
        for (int i = 0; i < dim; ++i) v(i) = complex_normal();
        v.normalize();
        return v;
    }

    /// Matrix with independent standard complex Gaussian entries.
    Eigen::MatrixXcd ginibre(int rows, int cols) {
        Eigen::MatrixXcd g(rows, cols);
        for (int j = 0; j < cols; ++j)
            for (int i = 0; i < rows; ++i) g(i, j) = complex_normal();
        return g;
    }

    /// Raw 64-bit draw (for derived seeds).
    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace entwit
