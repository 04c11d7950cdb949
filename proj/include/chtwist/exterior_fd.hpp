#pragma once

// Central-difference exterior derivatives of forms given by their coordinate
// components on an open set of R^m. Used as the independent oracle for every
// closed-form 2-form in the library.

#include <functional>

#include <Eigen/Dense>

#include "chtwist/sasaki.hpp"

namespace chtwist {

using OneFormField = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;
using TwoFormField = std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>;

/// D(a, b) = ∂_a θ_b - ∂_b θ_a, i.e. (dθ)(e_a, e_b).
Eigen::MatrixXd exterior_derivative_fd(const OneFormField& theta, const Eigen::VectorXd& q, double h);

struct ClosednessFd {
    double max_cyclic_sum = 0.0;  ///< max over a < b < c of |∂_a ω_bc + ∂_b ω_ca + ∂_c ω_ab|
    double max_partial = 0.0;     ///< max |∂_a ω_bc|, the size of the terms being summed
    /// The cyclic sum measured against the partial derivatives it is built from.
    double relative() const { return max_cyclic_sum / (1.0 + max_partial); }
};

ClosednessFd closedness_fd(const TwoFormField& omega, const Eigen::VectorXd& q, double h);

/// (x, v) stacked into one 4n-vector, and back.
Eigen::VectorXd phase_coordinates(const PhasePoint& p);
PhasePoint phase_point_from(const Eigen::VectorXd& q);

}  // namespace chtwist
