#pragma once

// Ball model of complex hyperbolic space CH^n with holomorphic sectional
// curvature -c. Real coordinates are interleaved, (x1, y1, ..., xn, yn), so the
// complex structure is the constant block matrix diag([[0,-1],[1,0]], ...).

#include <vector>

#include <Eigen/Dense>

namespace chtwist {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

struct ModelParams {
    int n = 1;
    double c = 1.0;
    double fd_step = 1e-5;
    double tol_fd = 1e-5;
    double tol_exact = 1e-10;

    /// Throws DomainError unless n >= 1, c > 0, 0 < fd_step < 1 and both tolerances are positive.
    void validate() const;

    int real_dim() const { return 2 * n; }
    int phase_dim() const { return 4 * n; }
};

class BasePoint {
public:
    BasePoint() = default;
    explicit BasePoint(Vec coords) : coords_(std::move(coords)) {}

    static BasePoint origin(int n) { return BasePoint(Vec::Zero(2 * n)); }

    const Vec& coords() const { return coords_; }
    double squared_radius() const { return coords_.squaredNorm(); }
    int real_dim() const { return static_cast<int>(coords_.size()); }

private:
    Vec coords_;
};

class MetricTensor {
public:
    explicit MetricTensor(Mat matrix) : matrix_(std::move(matrix)) {}

    const Mat& matrix() const { return matrix_; }
    double inner(const Vec& a, const Vec& b) const { return a.dot(matrix_ * b); }
    double norm_sq(const Vec& a) const { return inner(a, a); }

private:
    Mat matrix_;
};

/// Christoffel symbols of the second kind; gamma[k](i, j) = Γ^k_ij.
class Christoffel {
public:
    explicit Christoffel(std::vector<Mat> gamma) : gamma_(std::move(gamma)) {}

    const Mat& upper(int k) const { return gamma_[static_cast<std::size_t>(k)]; }
    double operator()(int k, int i, int j) const { return gamma_[static_cast<std::size_t>(k)](i, j); }
    int dim() const { return static_cast<int>(gamma_.size()); }

    /// Γ(a, b)^k = Γ^k_ij a^i b^j.
    Vec contract(const Vec& a, const Vec& b) const;

    /// Matrix A with A(k, j) = Γ^k_ij a^i, i.e. b -> Γ(a, b).
    Mat along(const Vec& a) const;

private:
    std::vector<Mat> gamma_;
};

/// Riemann tensor components R^l_{kij} with R(e_i, e_j) e_k = R^l_{kij} e_l and
/// R(X, Y) = ∇_X∇_Y - ∇_Y∇_X - ∇_[X,Y]. Stored as data[(l * d + k) * d * d + i * d + j].
class RiemannComponents {
public:
    RiemannComponents(int dim, std::vector<double> data) : dim_(dim), data_(std::move(data)) {}

    double operator()(int l, int k, int i, int j) const {
        return data_[static_cast<std::size_t>(((l * dim_ + k) * dim_ + i) * dim_ + j)];
    }
    int dim() const { return dim_; }

private:
    int dim_;
    std::vector<double> data_;
};

/// Throws DomainError if |z| >= 1 or the dimension does not match params.
void check_in_ball(const ModelParams& params, const BasePoint& x);

MetricTensor metric(const ModelParams& params, const BasePoint& x);

/// Closed-form partial derivatives ∂_k G of the metric matrix, k = 0..2n-1.
std::vector<Mat> metric_derivatives(const ModelParams& params, const BasePoint& x);

Mat complex_structure(const ModelParams& params);
Mat complex_structure(int n);

Christoffel christoffel(const ModelParams& params, const BasePoint& x);

/// Γ_x(v, v) without forming the full Christoffel array.
Vec geodesic_acceleration(const ModelParams& params, const BasePoint& x, const Vec& v);

/// R(X, Y, Z, W) = <R(X, Y) W, Z> for constant holomorphic sectional curvature -c:
///   -(c/4)(<X,Z><Y,W> - <X,W><Y,Z> + <X,JZ><Y,JW> - <X,JW><Y,JZ> + 2<X,JY><Z,JW>).
/// With this convention R(X, Y, X, Y) is the sectional curvature of an orthonormal pair.
double curvature_algebraic(const ModelParams& params, const MetricTensor& g,
                           const Vec& X, const Vec& Y, const Vec& Z, const Vec& W);
double curvature_algebraic(const ModelParams& params, const BasePoint& x,
                           const Vec& X, const Vec& Y, const Vec& Z, const Vec& W);

/// Riemann components from central differences of christoffel().
RiemannComponents riemann_numeric(const ModelParams& params, const BasePoint& x);

/// Same tensor as curvature_algebraic, assembled from riemann_numeric and lowered with metric().
double curvature_numeric(const ModelParams& params, const BasePoint& x,
                         const Vec& X, const Vec& Y, const Vec& Z, const Vec& W);
double curvature_numeric(const RiemannComponents& riemann, const MetricTensor& g,
                         const Vec& X, const Vec& Y, const Vec& Z, const Vec& W);

}  // namespace chtwist
