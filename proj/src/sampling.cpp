#include "chtwist/sampling.hpp"

#include <cmath>

namespace chtwist {

double Sampler::uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

double Sampler::log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }

Vec Sampler::gaussian(int dim) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Vec out(dim);
    for (int i = 0; i < dim; ++i) out[i] = normal(engine_);
    return out;
}

BasePoint Sampler::base_point(int n, double max_radius) {
    const int d = 2 * n;
    Vec direction = gaussian(d);
    direction.normalize();
    const double radius = max_radius * std::pow(uniform(0.0, 1.0), 1.0 / d);
    return BasePoint(radius * direction);
}

Vec Sampler::unit_vector(const MetricTensor& g, int dim) {
    const Vec w = gaussian(dim);
    return w / std::sqrt(g.norm_sq(w));
}

PhasePoint Sampler::on_level(const ModelParams& params, double energy, double max_radius) {
    BasePoint x = base_point(params.n, max_radius);
    const Vec v = std::sqrt(energy) * unit_vector(metric(params, x), params.real_dim());
    return {std::move(x), v};
}

}  // namespace chtwist
