#pragma once

#include <random>
#include <vector>

#include "chtwist/sasaki.hpp"

namespace chtwist::testing {

// Test-local randomness, deliberately separate from the library Sampler.
class Rng {
public:
    explicit Rng(unsigned seed = 12345) : engine_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

    Vec gaussian(int dim) {
        std::normal_distribution<double> normal;
        Vec out(dim);
        for (int i = 0; i < dim; ++i) out[i] = normal(engine_);
        return out;
    }

    BasePoint point(int n, double radius = 0.7) {
        Vec z = gaussian(2 * n);
        return BasePoint(z.normalized() * radius * std::sqrt(uniform(0.0, 1.0)));
    }

    /// Random phase point with ‖v‖²_g = energy.
    PhasePoint phase(const ModelParams& params, double energy, double radius = 0.7) {
        BasePoint x = point(params.n, radius);
        Vec v = gaussian(params.real_dim());
        const double norm_sq = metric(params, x).norm_sq(v);
        v *= std::sqrt(energy / norm_sq);
        return {std::move(x), std::move(v)};
    }

private:
    std::mt19937 engine_;
};

inline ModelParams params_for(int n, double c) {
    ModelParams p;
    p.n = n;
    p.c = c;
    return p;
}

/// Metric derivative by central differences of metric() alone.
inline std::vector<Mat> metric_derivatives_fd(const ModelParams& params, const BasePoint& x, double h = 1e-6) {
    const int d = params.real_dim();
    std::vector<Mat> out;
    for (int k = 0; k < d; ++k) {
        const Vec step = h * Vec::Unit(d, k);
        out.push_back((metric(params, BasePoint(x.coords() + step)).matrix() -
                       metric(params, BasePoint(x.coords() - step)).matrix()) /
                      (2.0 * h));
    }
    return out;
}

/// Christoffel symbols from the textbook formula applied to FD metric derivatives.
inline std::vector<Mat> christoffel_fd(const ModelParams& params, const BasePoint& x) {
    const int d = params.real_dim();
    const auto dG = metric_derivatives_fd(params, x);
    const Mat Ginv = metric(params, x).matrix().inverse();
    std::vector<Mat> gamma(d, Mat::Zero(d, d));
    for (int k = 0; k < d; ++k)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                double sum = 0.0;
                for (int l = 0; l < d; ++l) sum += Ginv(k, l) * (dG[i](l, j) + dG[j](l, i) - dG[l](i, j));
                gamma[k](i, j) = 0.5 * sum;
            }
    return gamma;
}

inline double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace chtwist::testing
