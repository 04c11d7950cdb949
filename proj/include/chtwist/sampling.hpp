#pragma once

#include <algorithm>
#include <cstdint>
#include <random>

#include "chtwist/sasaki.hpp"

namespace chtwist {

inline constexpr std::uint64_t kDefaultSeed = 20240917;
inline constexpr double kDefaultSampleRadius = 0.8;

/// Sampling radius that keeps a central-difference stencil of size fd_step inside the ball.
inline double sample_radius_for(const ModelParams& params) {
    return std::max(0.0, std::min(kDefaultSampleRadius, 1.0 - 2.0 * params.fd_step));
}

/// One seeded stream for every random quantity a command draws.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

    double uniform(double lo, double hi);
    double log_uniform(double lo, double hi);
    Vec gaussian(int dim);

    /// Uniform in the Euclidean ball |z| <= max_radius.
    BasePoint base_point(int n, double max_radius = kDefaultSampleRadius);

    /// Gaussian direction rescaled to unit length in g.
    Vec unit_vector(const MetricTensor& g, int dim);

    /// Random base point and direction, v rescaled so ‖v‖²_g = energy exactly.
    PhasePoint on_level(const ModelParams& params, double energy, double max_radius = kDefaultSampleRadius);

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

}  // namespace chtwist
