#include "chtwist/exterior_fd.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace chtwist {

Eigen::MatrixXd exterior_derivative_fd(const OneFormField& theta, const Eigen::VectorXd& q, double h) {
    const Eigen::Index m = q.size();
    // partial(a, b) = ∂_a θ_b
    Eigen::MatrixXd partial(m, m);
    for (Eigen::Index a = 0; a < m; ++a) {
        Eigen::VectorXd qp = q;
        Eigen::VectorXd qm = q;
        qp[a] += h;
        qm[a] -= h;
        partial.row(a) = ((theta(qp) - theta(qm)) / (2.0 * h)).transpose();
    }
    return partial - partial.transpose();
}

ClosednessFd closedness_fd(const TwoFormField& omega, const Eigen::VectorXd& q, double h) {
    const Eigen::Index m = q.size();
    std::vector<Eigen::MatrixXd> partial;
    partial.reserve(static_cast<std::size_t>(m));
    for (Eigen::Index a = 0; a < m; ++a) {
        Eigen::VectorXd qp = q;
        Eigen::VectorXd qm = q;
        qp[a] += h;
        qm[a] -= h;
        partial.push_back((omega(qp) - omega(qm)) / (2.0 * h));
    }
    ClosednessFd out;
    for (const auto& p : partial) out.max_partial = std::max(out.max_partial, p.cwiseAbs().maxCoeff());
    for (Eigen::Index a = 0; a < m; ++a) {
        for (Eigen::Index b = a + 1; b < m; ++b) {
            for (Eigen::Index c = b + 1; c < m; ++c) {
                const double v = partial[static_cast<std::size_t>(a)](b, c) +
                                 partial[static_cast<std::size_t>(b)](c, a) +
                                 partial[static_cast<std::size_t>(c)](a, b);
                out.max_cyclic_sum = std::max(out.max_cyclic_sum, std::abs(v));
            }
        }
    }
    return out;
}

Eigen::VectorXd phase_coordinates(const PhasePoint& p) {
    Eigen::VectorXd q(p.x.coords().size() + p.v.size());
    q << p.x.coords(), p.v;
    return q;
}

PhasePoint phase_point_from(const Eigen::VectorXd& q) {
    const Eigen::Index d = q.size() / 2;
    return {BasePoint(q.head(d)), q.tail(d)};
}

}  // namespace chtwist
