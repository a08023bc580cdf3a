#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qutritlab/qutrit_state.hpp"

namespace qutritlab::geometry {

using state::PureStateParams;
using su3::Vec8;

// Hilbert-space angle arccos(sqrt(overlap)) in [0, pi/2] for pure n, m.
double fs_angle(const Vec8& n, const Vec8& m);

// Quadratic form of the rescaled line element ds^2 = 3 ds_FS^2 = dn.dn in
// the chart coordinates, evaluated at p for the increment dp.
struct CoordinateIncrement {
    double dtheta = 0.0;
    double dphi = 0.0;
    double dchi1 = 0.0;
    double dchi2 = 0.0;
};

double line_element(const PureStateParams& p, const CoordinateIncrement& dp);

// Deterministic chunked sampling stream: draw i lives in chunk i/chunk_size,
// and each chunk runs its own counter-seeded engine, so the stream depends
// only on (seed, chunk_size) and parallel evaluation stays bit-stable.
struct SamplerConfig {
    std::uint64_t seed = 0;
    std::size_t chunk_size = 4096;
};

// i.i.d. draws from the unitarily invariant measure on pure states,
// density ~ sin^3(theta)cos(theta) sin(phi)cos(phi) on the coordinate box,
// via inverse CDF: theta = asin(u^{1/4}), phi = asin(sqrt(v)).
std::vector<PureStateParams> sample_pure(const SamplerConfig& cfg, std::size_t count);

// First and second moments of the Bloch components under the invariant
// measure, with standard errors. Chunk partials are pairwise-combined so the
// result is independent of evaluation order.
struct MomentEstimate {
    std::size_t samples = 0;
    std::array<double, 8> first{};
    std::array<double, 8> first_se{};
    std::array<std::array<double, 8>, 8> second{};
    std::array<std::array<double, 8>, 8> second_se{};
};

MomentEstimate estimate_moments(const SamplerConfig& cfg, std::size_t count);

// Composite trapezoid per axis (tensor-product rule) for the invariant
// volume integral over the coordinate box; grid_sizes are points per axis
// (theta, phi, chi1, chi2), each >= 2. Converges to 9 pi^2 / 2 as O(h^2).
double total_volume_quadrature(const std::array<std::size_t, 4>& grid_sizes);

namespace detail {

// SplitMix64 step; the stream generator behind per-chunk seeding.
std::uint64_t splitmix64(std::uint64_t& state);

std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk_index);

// 53-bit uniform in [0, 1).
double uniform01(std::uint64_t raw);

double pairwise_sum(const double* xs, std::size_t count);

} // namespace detail

} // namespace qutritlab::geometry
