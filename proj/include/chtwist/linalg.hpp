#pragma once

#include <Eigen/Dense>

namespace chtwist {

/// Pfaffian of an antisymmetric matrix of even order, by skew Gaussian
/// elimination with partial pivoting. Odd order returns 0.
double pfaffian(const Eigen::MatrixXd& A);

/// Largest |A + A^T| entry.
double antisymmetry_defect(const Eigen::MatrixXd& A);

struct Nondegeneracy {
    double det = 0.0;
    double pfaffian = 0.0;
    double sigma_min = 0.0;
    double sigma_max = 0.0;

    double relative_sigma_min() const { return sigma_max > 0.0 ? sigma_min / sigma_max : 0.0; }
    /// sigma_min / sigma_max above the threshold.
    bool nondegenerate(double threshold) const { return relative_sigma_min() > threshold; }
};

Nondegeneracy nondegeneracy(const Eigen::MatrixXd& A);

}  // namespace chtwist
