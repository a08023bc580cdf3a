#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "qutritlab/linalg.hpp"

// Seeded generators for test inputs, independent of the library's sampler.
// Normals come from Box-Muller over the engine's raw 64-bit output, so the
// draws are identical on every platform (std::normal_distribution is not).
namespace testutil {

using qutritlab::linalg::Complex;
using qutritlab::linalg::ComplexMatrix;

inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double gauss(std::mt19937_64& rng) {
    const double u = 1.0 - uniform01(rng); // (0, 1]
    const double v = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
}

inline ComplexMatrix random_hermitian(std::size_t dim, std::mt19937_64& rng) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = gauss(rng);
        for (std::size_t j = i + 1; j < dim; ++j) {
            const Complex v{gauss(rng), gauss(rng)};
            m(i, j) = v;
            m(j, i) = std::conj(v);
        }
    }
    return m;
}

// Ginibre construction G G^dagger / tr: PSD with unit trace by construction.
inline ComplexMatrix random_density(std::size_t dim, std::mt19937_64& rng) {
    ComplexMatrix g(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) g(i, j) = Complex{gauss(rng), gauss(rng)};
    ComplexMatrix rho = g * adjoint(g);
    const double tr = std::real(trace(rho));
    rho *= Complex{1.0 / tr, 0.0};
    return rho;
}

template <std::size_t N>
std::array<Complex, N> random_ket(std::mt19937_64& rng) {
    std::array<Complex, N> ket;
    double norm2 = 0.0;
    for (auto& c : ket) {
        c = Complex{gauss(rng), gauss(rng)};
        norm2 += std::norm(c);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& c : ket) c *= inv;
    return ket;
}

inline std::array<double, 8> random_unit8(std::mt19937_64& rng) {
    std::array<double, 8> v;
    double norm2 = 0.0;
    for (auto& x : v) {
        x = gauss(rng);
        norm2 += x * x;
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& x : v) x *= inv;
    return v;
}

} // namespace testutil
