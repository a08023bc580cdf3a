#include "qutritlab/geometry.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace qutritlab::geometry {

namespace detail {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk_index) {
    std::uint64_t s = seed;
    const std::uint64_t a = splitmix64(s);
    s = a ^ chunk_index;
    return splitmix64(s);
}

double uniform01(std::uint64_t raw) {
    return static_cast<double>(raw >> 11) * 0x1.0p-53;
}

double pairwise_sum(const double* xs, std::size_t count) {
    if (count <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < count; ++i) s += xs[i];
        return s;
    }
    const std::size_t half = count / 2;
    return pairwise_sum(xs, half) + pairwise_sum(xs + half, count - half);
}

} // namespace detail

double fs_angle(const Vec8& n, const Vec8& m) {
    double ov = state::overlap(n, m);
    ov = std::min(1.0, std::max(0.0, ov));
    return std::acos(std::sqrt(ov));
}

double line_element(const PureStateParams& p, const CoordinateIncrement& dp) {
    const double st2 = std::sin(p.theta) * std::sin(p.theta);
    const double cp2 = std::cos(p.phi) * std::cos(p.phi);
    const double sp2 = std::sin(p.phi) * std::sin(p.phi);
    const double a = st2 * cp2; // |<1|psi>|^2
    const double b = st2 * sp2; // |<2|psi>|^2
    return 3.0 * (dp.dtheta * dp.dtheta + st2 * dp.dphi * dp.dphi +
                  a * (1.0 - a) * dp.dchi1 * dp.dchi1 + b * (1.0 - b) * dp.dchi2 * dp.dchi2 -
                  2.0 * a * b * dp.dchi1 * dp.dchi2);
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

PureStateParams draw_params(std::mt19937_64& eng) {
    const double u = detail::uniform01(eng());
    const double v = detail::uniform01(eng());
    const double w1 = detail::uniform01(eng());
    const double w2 = detail::uniform01(eng());
    return {std::asin(std::pow(u, 0.25)), std::asin(std::sqrt(v)), kTwoPi * w1, kTwoPi * w2};
}

} // namespace

std::vector<PureStateParams> sample_pure(const SamplerConfig& cfg, std::size_t count) {
    if (cfg.chunk_size == 0) fail("range", "chunk_size must be >= 1");
    std::vector<PureStateParams> out;
    out.reserve(count);
    const std::size_t chunks = (count + cfg.chunk_size - 1) / cfg.chunk_size;
    for (std::size_t c = 0; c < chunks; ++c) {
        std::mt19937_64 eng(detail::chunk_seed(cfg.seed, c));
        const std::size_t lo = c * cfg.chunk_size;
        const std::size_t hi = std::min(count, lo + cfg.chunk_size);
        for (std::size_t i = lo; i < hi; ++i) out.push_back(draw_params(eng));
    }
    return out;
}

MomentEstimate estimate_moments(const SamplerConfig& cfg, std::size_t count) {
    if (cfg.chunk_size == 0) fail("range", "chunk_size must be >= 1");
    MomentEstimate est;
    est.samples = count;
    if (count == 0) return est;

    // Per-chunk partial sums of n_j, n_j^2, n_j n_k and (n_j n_k)^2 (j <= k).
    struct Partial {
        std::array<double, 8> s1{};
        std::array<double, 8> s1sq{};
        std::array<double, 36> s2{};
        std::array<double, 36> s2sq{};
    };
    const std::size_t chunks = (count + cfg.chunk_size - 1) / cfg.chunk_size;
    std::vector<Partial> part(chunks);

    for (std::size_t c = 0; c < chunks; ++c) {
        std::mt19937_64 eng(detail::chunk_seed(cfg.seed, c));
        const std::size_t lo = c * cfg.chunk_size;
        const std::size_t hi = std::min(count, lo + cfg.chunk_size);
        Partial& pc = part[c];
        for (std::size_t i = lo; i < hi; ++i) {
            const Vec8 n = state::ket_to_bloch(state::params_to_ket(draw_params(eng)));
            std::size_t idx = 0;
            for (int j = 0; j < 8; ++j) {
                pc.s1[j] += n[j];
                pc.s1sq[j] += n[j] * n[j];
                for (int k = j; k < 8; ++k, ++idx) {
                    const double y = n[j] * n[k];
                    pc.s2[idx] += y;
                    pc.s2sq[idx] += y * y;
                }
            }
        }
    }

    const double m = static_cast<double>(count);
    std::vector<double> buf(chunks);
    auto combine = [&](auto pick) {
        for (std::size_t c = 0; c < chunks; ++c) buf[c] = pick(part[c]);
        return detail::pairwise_sum(buf.data(), chunks);
    };

    for (int j = 0; j < 8; ++j) {
        const double s1 = combine([&](const Partial& p) { return p.s1[j]; });
        const double s1sq = combine([&](const Partial& p) { return p.s1sq[j]; });
        est.first[j] = s1 / m;
        const double var = std::max(0.0, s1sq / m - est.first[j] * est.first[j]);
        est.first_se[j] = std::sqrt(var / m);
    }
    std::size_t idx = 0;
    for (int j = 0; j < 8; ++j)
        for (int k = j; k < 8; ++k, ++idx) {
            const double s2 = combine([&](const Partial& p) { return p.s2[idx]; });
            const double s2sq = combine([&](const Partial& p) { return p.s2sq[idx]; });
            const double mean = s2 / m;
            const double var = std::max(0.0, s2sq / m - mean * mean);
            const double se = std::sqrt(var / m);
            est.second[j][k] = est.second[k][j] = mean;
            est.second_se[j][k] = est.second_se[k][j] = se;
        }
    return est;
}

namespace {

// Composite trapezoid of f over [a, b] with `points` nodes.
template <typename F>
double trapezoid(F f, double a, double b, std::size_t points) {
    const double h = (b - a) / static_cast<double>(points - 1);
    double s = 0.5 * (f(a) + f(b));
    for (std::size_t i = 1; i + 1 < points; ++i) s += f(a + static_cast<double>(i) * h);
    return h * s;
}

} // namespace

double total_volume_quadrature(const std::array<std::size_t, 4>& grid_sizes) {
    for (std::size_t g : grid_sizes)
        if (g < 2) fail("range", "quadrature grid needs at least 2 points per axis");
    // The volume density 9 sin^3(t)cos(t) sin(p)cos(p) factorizes over the
    // axes, so the 4-D tensor-product trapezoid sum reduces to a product of
    // per-axis sums (an N^4-effective grid at 4N cost).
    const double half_pi = 0.5 * std::numbers::pi;
    const double it =
        trapezoid([](double t) { return std::pow(std::sin(t), 3) * std::cos(t); }, 0.0,
                  half_pi, grid_sizes[0]);
    const double ip = trapezoid([](double p) { return std::sin(p) * std::cos(p); }, 0.0,
                                half_pi, grid_sizes[1]);
    const double ic1 = trapezoid([](double) { return 1.0; }, 0.0, kTwoPi, grid_sizes[2]);
    const double ic2 = trapezoid([](double) { return 1.0; }, 0.0, kTwoPi, grid_sizes[3]);
    return 9.0 * it * ip * ic1 * ic2;
}

} // namespace qutritlab::geometry
