#include "chtwist/twisted_form.hpp"

#include "chtwist/exterior_fd.hpp"

namespace chtwist {

double beta(const PhaseGeometry& geom, const TangentTT& xi) {
    geom.require_nonzero_velocity();
    return geom.inner(geom.J() * geom.v(), geom.connection_map(xi)) / geom.energy();
}

Vec beta_components(const PhaseGeometry& geom) {
    const int d = geom.real_dim();
    Vec out(2 * d);
    for (int a = 0; a < 2 * d; ++a) {
        const Vec e = Vec::Unit(2 * d, a);
        out[a] = beta(geom, TangentTT::coordinate(e.head(d), e.tail(d)));
    }
    return out;
}

double omega_magnetic(const PhaseGeometry& geom, const Vec& u, const Vec& w) {
    geom.require_nonzero_velocity();
    const Vec sigma = geom.J() * geom.v() / geom.energy();
    return -curvature_algebraic(geom.params(), geom.g(), geom.v(), sigma, u, w);
}

double dbeta_vertical(const PhaseGeometry& geom, const Vec& u, const Vec& w) {
    geom.require_nonzero_velocity();
    const double e = geom.energy();
    const Vec& v = geom.v();
    const Vec Jv = geom.J() * v;
    return (2.0 / e) * geom.inner(geom.J() * u, w) -
           (2.0 / (e * e)) * (geom.inner(v, u) * geom.inner(Jv, w) - geom.inner(v, w) * geom.inner(Jv, u));
}

Vec covariant_derivative_sigma(const PhaseGeometry& geom, const TangentTT& xi) {
    geom.require_nonzero_velocity();
    const TangentTT c = geom.to_coordinate(xi);
    const Vec& v = geom.v();
    const double e = geom.energy();
    const Vec Jv = geom.J() * v;
    const Vec sigma = Jv / e;
    const auto dG = metric_derivatives(geom.params(), geom.x());

    // Directional derivative of ‖v‖²_g(x) along (δx, δv).
    double de = 2.0 * geom.inner(v, c.second);
    for (int k = 0; k < geom.real_dim(); ++k) de += c.first[k] * v.dot(dG[static_cast<std::size_t>(k)] * v);

    const Vec dsigma = geom.J() * c.second / e - (de / (e * e)) * Jv;
    return dsigma + geom.gamma().contract(c.first, sigma);
}

double dbeta(const PhaseGeometry& geom, const TangentTT& xi, const TangentTT& eta) {
    const Vec sigma = geom.J() * geom.v() / geom.energy();
    return geom.inner(covariant_derivative_sigma(geom, xi), geom.connection_map(eta)) -
           geom.inner(covariant_derivative_sigma(geom, eta), geom.connection_map(xi)) +
           curvature_algebraic(geom.params(), geom.g(), geom.pushforward(xi), geom.pushforward(eta),
                               sigma, geom.v());
}

MagneticDecomposition assemble_dbeta(const PhaseGeometry& geom) {
    const AdaptedFrame& frame = geom.adapted_frame();
    const int d = geom.real_dim();
    MagneticDecomposition out;
    out.omega_h = Mat::Zero(d, d);
    out.dbeta_v = Mat::Zero(d, d);
    out.mixed = Mat::Zero(d, d);
    for (int a = 0; a < d; ++a) {
        const Vec& fa = frame[static_cast<std::size_t>(a)];
        const TangentTT horizontal = geom.horizontal_lift(fa);
        for (int b = 0; b < d; ++b) {
            const Vec& fb = frame[static_cast<std::size_t>(b)];
            out.omega_h(a, b) = omega_magnetic(geom, fa, fb);
            out.dbeta_v(a, b) = dbeta_vertical(geom, fa, fb);
            out.mixed(a, b) = dbeta(geom, horizontal, geom.vertical_lift(fb));
        }
    }
    Mat M(2 * d, 2 * d);
    M.topLeftCorner(d, d) = out.omega_h;
    M.topRightCorner(d, d) = out.mixed;
    M.bottomLeftCorner(d, d) = -out.mixed.transpose();
    M.bottomRightCorner(d, d) = out.dbeta_v;
    out.assembled = {FormBasis::sasaki_frame, std::move(M)};
    return out;
}

TwoFormMatrix dbeta_fd_oracle(const ModelParams& params, const PhasePoint& p) {
    const OneFormField components = [&params](const Vec& q) {
        return beta_components(PhaseGeometry(params, phase_point_from(q)));
    };
    return {FormBasis::coordinate, exterior_derivative_fd(components, phase_coordinates(p), params.fd_step)};
}

TwoFormMatrix omega_total(const PhaseGeometry& geom, FormBasis basis) {
    geom.require_nonzero_velocity();
    const TwoFormMatrix total = geom.omega0_matrix(FormBasis::sasaki_frame) + assemble_dbeta(geom).assembled;
    if (basis == FormBasis::coordinate) return geom.frame_change().to_coordinate_basis(total);
    return total;
}

TwoFormMatrix kahler_form_pullback(const PhaseGeometry& geom) {
    const int d = geom.real_dim();
    Mat M = Mat::Zero(2 * d, 2 * d);
    M.topLeftCorner(d, d) = geom.J().transpose() * geom.g().matrix();
    return {FormBasis::coordinate, std::move(M)};
}

}  // namespace chtwist
