#include "chtwist/linalg.hpp"

#include <cmath>
#include <utility>

namespace chtwist {

double pfaffian(const Eigen::MatrixXd& input) {
    const Eigen::Index n = input.rows();
    if (n % 2 != 0) return 0.0;
    Eigen::MatrixXd A = input;
    double pf = 1.0;
    for (Eigen::Index k = 0; k + 1 < n; k += 2) {
        // Bring the largest entry of row k (right of the diagonal) to column k+1.
        Eigen::Index pivot = k + 1;
        double best = std::abs(A(k, k + 1));
        for (Eigen::Index j = k + 2; j < n; ++j) {
            if (std::abs(A(k, j)) > best) {
                best = std::abs(A(k, j));
                pivot = j;
            }
        }
        if (pivot != k + 1) {
            A.row(k + 1).swap(A.row(pivot));
            A.col(k + 1).swap(A.col(pivot));
            pf = -pf;
        }
        const double a = A(k, k + 1);
        if (a == 0.0) return 0.0;
        pf *= a;
        if (k + 2 < n) {
            // Eliminate A(k, j) for j > k+1 with the congruence row_j -= t_j row_{k+1}, col_j -= t_j col_{k+1}.
            const Eigen::Index m = n - k - 2;
            const Eigen::VectorXd tau = A.row(k).tail(m).transpose() / a;
            const Eigen::VectorXd col = A.col(k + 1).tail(m);
            A.bottomRightCorner(m, m) += tau * col.transpose() - col * tau.transpose();
        }
    }
    return pf;
}

double antisymmetry_defect(const Eigen::MatrixXd& A) { return (A + A.transpose()).cwiseAbs().maxCoeff(); }

Nondegeneracy nondegeneracy(const Eigen::MatrixXd& A) {
    Nondegeneracy out;
    out.det = A.partialPivLu().determinant();
    out.pfaffian = pfaffian(A);
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(A);
    const auto& s = svd.singularValues();
    out.sigma_max = s.size() > 0 ? s(0) : 0.0;
    out.sigma_min = s.size() > 0 ? s(s.size() - 1) : 0.0;
    return out;
}

}  // namespace chtwist
