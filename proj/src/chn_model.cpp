#include "chtwist/chn_model.hpp"

#include <cmath>
#include <string>

#include "chtwist/errors.hpp"

namespace chtwist {

void ModelParams::validate() const {
    if (n < 1) throw DomainError("complex dimension n must be >= 1, got " + std::to_string(n));
    if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("curvature constant c must be > 0");
    if (!(fd_step > 0.0 && fd_step < 1.0)) throw DomainError("fd_step must lie in (0, 1)");
    if (!(tol_fd > 0.0) || !(tol_exact > 0.0)) throw DomainError("tolerances must be positive");
}

void check_in_ball(const ModelParams& params, const BasePoint& x) {
    if (x.real_dim() != params.real_dim()) {
        throw DomainError("base point has dimension " + std::to_string(x.real_dim()) + ", expected " +
                          std::to_string(params.real_dim()));
    }
    if (!(x.squared_radius() < 1.0)) throw DomainError("base point outside the unit ball (|z| >= 1)");
}

Vec Christoffel::contract(const Vec& a, const Vec& b) const {
    Vec out(dim());
    for (int k = 0; k < dim(); ++k) out[k] = a.dot(upper(k) * b);
    return out;
}

Mat Christoffel::along(const Vec& a) const {
    Mat out(dim(), dim());
    for (int k = 0; k < dim(); ++k) out.row(k) = a.transpose() * upper(k);
    return out;
}

Mat complex_structure(int n) {
    Mat J = Mat::Zero(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        J(2 * i, 2 * i + 1) = -1.0;
        J(2 * i + 1, 2 * i) = 1.0;
    }
    return J;
}

Mat complex_structure(const ModelParams& params) { return complex_structure(params.n); }

// Real form of (4/c)[(1-|z|^2) δ_ij + conj(z_i) z_j] / (1-|z|^2)^2:
//   G = (4/c) [ I / s + (x x^T + Jx (Jx)^T) / s^2 ],   s = 1 - |x|^2.
MetricTensor metric(const ModelParams& params, const BasePoint& x) {
    check_in_ball(params, x);
    const int d = params.real_dim();
    const Vec& p = x.coords();
    const Vec jp = complex_structure(params) * p;
    const double s = 1.0 - x.squared_radius();
    Mat G = Mat::Identity(d, d) / s + (p * p.transpose() + jp * jp.transpose()) / (s * s);
    return MetricTensor(G * (4.0 / params.c));
}

std::vector<Mat> metric_derivatives(const ModelParams& params, const BasePoint& x) {
    check_in_ball(params, x);
    const int d = params.real_dim();
    const Mat J = complex_structure(params);
    const Vec& p = x.coords();
    const Vec jp = J * p;
    const double s = 1.0 - x.squared_radius();
    const Mat P = p * p.transpose() + jp * jp.transpose();
    const double scale = 4.0 / params.c;

    std::vector<Mat> dG;
    dG.reserve(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        const Vec ek = Vec::Unit(d, k);
        const Vec jek = J.col(k);
        const Mat dP = ek * p.transpose() + p * ek.transpose() + jek * jp.transpose() + jp * jek.transpose();
        const double xk = p[k];
        dG.push_back(scale * ((2.0 * xk / (s * s)) * Mat::Identity(d, d) + dP / (s * s) +
                              (4.0 * xk / (s * s * s)) * P));
    }
    return dG;
}

Christoffel christoffel(const ModelParams& params, const BasePoint& x) {
    const int d = params.real_dim();
    const Mat Ginv = metric(params, x).matrix().inverse();
    const auto dG = metric_derivatives(params, x);

    // Γ_lij = (1/2)(∂_i G_lj + ∂_j G_li - ∂_l G_ij), then raise l.
    std::vector<Mat> lowered(static_cast<std::size_t>(d), Mat::Zero(d, d));
    for (int l = 0; l < d; ++l) {
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) {
                lowered[static_cast<std::size_t>(l)](i, j) =
                    0.5 * (dG[static_cast<std::size_t>(i)](l, j) + dG[static_cast<std::size_t>(j)](l, i) -
                           dG[static_cast<std::size_t>(l)](i, j));
            }
        }
    }
    std::vector<Mat> gamma(static_cast<std::size_t>(d), Mat::Zero(d, d));
    for (int k = 0; k < d; ++k) {
        for (int l = 0; l < d; ++l) {
            gamma[static_cast<std::size_t>(k)] += Ginv(k, l) * lowered[static_cast<std::size_t>(l)];
        }
    }
    return Christoffel(std::move(gamma));
}

Vec geodesic_acceleration(const ModelParams& params, const BasePoint& x, const Vec& v) {
    const int d = params.real_dim();
    const auto dG = metric_derivatives(params, x);
    // G Γ(v, v) = (∂_v G) v - (1/2) (vᵀ ∂_l G v)_l
    Vec lowered = Vec::Zero(d);
    for (int i = 0; i < d; ++i) {
        const Vec dGv = dG[static_cast<std::size_t>(i)] * v;
        lowered += v[i] * dGv;
        lowered[i] -= 0.5 * v.dot(dGv);
    }
    return metric(params, x).matrix().ldlt().solve(lowered);
}

double curvature_algebraic(const ModelParams& params, const MetricTensor& g,
                           const Vec& X, const Vec& Y, const Vec& Z, const Vec& W) {
    const Mat J = complex_structure(params);
    const Vec JY = J * Y;
    const Vec JZ = J * Z;
    const Vec JW = J * W;
    const double sum = g.inner(X, Z) * g.inner(Y, W) - g.inner(X, W) * g.inner(Y, Z) +
                       g.inner(X, JZ) * g.inner(Y, JW) - g.inner(X, JW) * g.inner(Y, JZ) +
                       2.0 * g.inner(X, JY) * g.inner(Z, JW);
    return -(params.c / 4.0) * sum;
}

double curvature_algebraic(const ModelParams& params, const BasePoint& x,
                           const Vec& X, const Vec& Y, const Vec& Z, const Vec& W) {
    return curvature_algebraic(params, metric(params, x), X, Y, Z, W);
}

RiemannComponents riemann_numeric(const ModelParams& params, const BasePoint& x) {
    check_in_ball(params, x);
    const int d = params.real_dim();
    const double h = params.fd_step;
    if (std::sqrt(x.squared_radius()) + h >= 1.0) {
        throw DomainError("finite-difference stencil leaves the unit ball");
    }

    const Christoffel gamma = christoffel(params, x);
    // dGamma[i] holds ∂_i Γ^k_ab as a Christoffel-shaped array.
    std::vector<std::vector<Mat>> dGamma;
    dGamma.reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        const Vec step = h * Vec::Unit(d, i);
        const Christoffel plus = christoffel(params, BasePoint(x.coords() + step));
        const Christoffel minus = christoffel(params, BasePoint(x.coords() - step));
        std::vector<Mat> di;
        di.reserve(static_cast<std::size_t>(d));
        for (int k = 0; k < d; ++k) di.push_back((plus.upper(k) - minus.upper(k)) / (2.0 * h));
        dGamma.push_back(std::move(di));
    }

    std::vector<double> data(static_cast<std::size_t>(d * d * d * d), 0.0);
    auto at = [&](int l, int k, int i, int j) -> double& {
        return data[static_cast<std::size_t>(((l * d + k) * d + i) * d + j)];
    };
    for (int l = 0; l < d; ++l) {
        for (int k = 0; k < d; ++k) {
            for (int i = 0; i < d; ++i) {
                for (int j = 0; j < d; ++j) {
                    double r = dGamma[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)](j, k) -
                               dGamma[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)](i, k);
                    for (int m = 0; m < d; ++m) {
                        r += gamma(l, i, m) * gamma(m, j, k) - gamma(l, j, m) * gamma(m, i, k);
                    }
                    at(l, k, i, j) = r;
                }
            }
        }
    }
    return RiemannComponents(d, std::move(data));
}

double curvature_numeric(const RiemannComponents& riemann, const MetricTensor& g,
                         const Vec& X, const Vec& Y, const Vec& Z, const Vec& W) {
    const int d = riemann.dim();
    // R(X, Y) W as a vector, then pair with Z.
    Vec RW = Vec::Zero(d);
    for (int l = 0; l < d; ++l) {
        double acc = 0.0;
        for (int k = 0; k < d; ++k) {
            if (W[k] == 0.0) continue;
            for (int i = 0; i < d; ++i) {
                for (int j = 0; j < d; ++j) acc += riemann(l, k, i, j) * W[k] * X[i] * Y[j];
            }
        }
        RW[l] = acc;
    }
    return g.inner(RW, Z);
}

double curvature_numeric(const ModelParams& params, const BasePoint& x,
                         const Vec& X, const Vec& Y, const Vec& Z, const Vec& W) {
    return curvature_numeric(riemann_numeric(params, x), metric(params, x), X, Y, Z, W);
}

}  // namespace chtwist
