#include "chtwist/sasaki.hpp"

#include <cmath>
#include <string>

#include "chtwist/errors.hpp"

namespace chtwist {

Vec TangentTT::stacked() const {
    Vec out(first.size() + second.size());
    out << first, second;
    return out;
}

const char* to_string(FormBasis basis) {
    switch (basis) {
        case FormBasis::coordinate:
            return "coordinate";
        case FormBasis::sasaki_frame:
            return "sasaki_frame";
    }
    return "unknown";
}

TwoFormMatrix TwoFormMatrix::operator+(const TwoFormMatrix& other) const {
    if (basis != other.basis) {
        throw BasisMismatch(std::string("cannot add 2-forms in bases ") + to_string(basis) + " and " +
                            to_string(other.basis));
    }
    return {basis, matrix + other.matrix};
}

TwoFormMatrix TwoFormMatrix::operator-(const TwoFormMatrix& other) const {
    if (basis != other.basis) {
        throw BasisMismatch(std::string("cannot subtract 2-forms in bases ") + to_string(basis) + " and " +
                            to_string(other.basis));
    }
    return {basis, matrix - other.matrix};
}

Mat TwoFormMatrix::horizontal_block() const {
    const Eigen::Index h = matrix.rows() / 2;
    return matrix.topLeftCorner(h, h);
}

Mat TwoFormMatrix::vertical_block() const {
    const Eigen::Index h = matrix.rows() / 2;
    return matrix.bottomRightCorner(h, h);
}

Mat TwoFormMatrix::mixed_block() const {
    const Eigen::Index h = matrix.rows() / 2;
    return matrix.topRightCorner(h, h);
}

Mat AdaptedFrame::matrix() const {
    const auto d = static_cast<Eigen::Index>(vectors.size());
    Mat out(d, d);
    for (Eigen::Index i = 0; i < d; ++i) out.col(i) = vectors[static_cast<std::size_t>(i)];
    return out;
}

TwoFormMatrix FrameChange::to_sasaki_frame(const TwoFormMatrix& form) const {
    if (form.basis == FormBasis::sasaki_frame) return form;
    return {FormBasis::sasaki_frame, to_coordinates.transpose() * form.matrix * to_coordinates};
}

TwoFormMatrix FrameChange::to_coordinate_basis(const TwoFormMatrix& form) const {
    if (form.basis == FormBasis::coordinate) return form;
    return {FormBasis::coordinate, to_frame.transpose() * form.matrix * to_frame};
}

namespace {

double metric_energy(const ModelParams& params, const PhasePoint& p, const MetricTensor& g) {
    if (p.v.size() != params.real_dim()) {
        throw DomainError("velocity has dimension " + std::to_string(p.v.size()) + ", expected " +
                          std::to_string(params.real_dim()));
    }
    return g.norm_sq(p.v);
}

}  // namespace

PhaseGeometry::PhaseGeometry(const ModelParams& params, PhasePoint p)
    : params_((params.validate(), params)),
      point_(std::move(p)),
      metric_(metric(params_, point_.x)),
      J_(complex_structure(params_)),
      gamma_(christoffel(params_, point_.x)),
      energy_(metric_energy(params_, point_, metric_)) {}

void PhaseGeometry::require_nonzero_velocity() const {
    if (!(energy_ > 0.0)) throw DomainError("velocity must be nonzero (operation is defined on TM minus M)");
}

TangentTT PhaseGeometry::to_sasaki(const TangentTT& xi) const {
    if (xi.rep == TangentRep::sasaki) return xi;
    return TangentTT::sasaki(xi.first, xi.second + gamma_.contract(xi.first, v()));
}

TangentTT PhaseGeometry::to_coordinate(const TangentTT& xi) const {
    if (xi.rep == TangentRep::coordinate) return xi;
    return TangentTT::coordinate(xi.first, xi.second - gamma_.contract(xi.first, v()));
}

Vec PhaseGeometry::pushforward(const TangentTT& xi) const { return xi.first; }

Vec PhaseGeometry::connection_map(const TangentTT& xi) const {
    if (xi.rep == TangentRep::sasaki) return xi.second;
    return xi.second + gamma_.contract(xi.first, v());
}

TangentTT PhaseGeometry::horizontal_lift(const Vec& u) const {
    return TangentTT::coordinate(u, -gamma_.contract(u, v()));
}

double PhaseGeometry::sasaki_inner(const TangentTT& xi, const TangentTT& eta) const {
    return inner(pushforward(xi), pushforward(eta)) + inner(connection_map(xi), connection_map(eta));
}

double PhaseGeometry::omega0(const TangentTT& xi, const TangentTT& eta) const {
    return inner(pushforward(xi), connection_map(eta)) - inner(connection_map(xi), pushforward(eta));
}

TwoFormMatrix PhaseGeometry::omega0_matrix(FormBasis basis) const {
    const int d = real_dim();
    if (basis == FormBasis::sasaki_frame) {
        // Orthonormal frame: ω₀(H(f_a), V(f_b)) = δ_ab.
        Mat M = Mat::Zero(2 * d, 2 * d);
        M.topRightCorner(d, d) = Mat::Identity(d, d);
        M.bottomLeftCorner(d, d) = -Mat::Identity(d, d);
        adapted_frame();
        return {basis, M};
    }
    Mat M(2 * d, 2 * d);
    std::vector<TangentTT> basis_vectors;
    basis_vectors.reserve(static_cast<std::size_t>(2 * d));
    for (int a = 0; a < 2 * d; ++a) {
        const Vec e = Vec::Unit(2 * d, a);
        basis_vectors.push_back(TangentTT::coordinate(e.head(d), e.tail(d)));
    }
    for (int a = 0; a < 2 * d; ++a) {
        for (int b = 0; b < 2 * d; ++b) {
            M(a, b) = omega0(basis_vectors[static_cast<std::size_t>(a)], basis_vectors[static_cast<std::size_t>(b)]);
        }
    }
    return {basis, M};
}

double PhaseGeometry::liouville(const TangentTT& xi) const { return -inner(v(), pushforward(xi)); }

TangentTT PhaseGeometry::almost_cx_W(const TangentTT& xi) const {
    const TangentTT s = to_sasaki(xi);
    return TangentTT::sasaki(-s.second, s.first);
}

const AdaptedFrame& PhaseGeometry::adapted_frame() const {
    if (!frame_) frame_ = chtwist::adapted_frame(*this);
    return *frame_;
}

const FrameChange& PhaseGeometry::frame_change() const {
    if (!change_) {
        const int d = real_dim();
        const Mat F = adapted_frame().matrix();
        Mat P = Mat::Zero(2 * d, 2 * d);
        P.topLeftCorner(d, d) = F;
        P.bottomLeftCorner(d, d) = -gamma_.along(v()) * F;  // Γ(f, v) = Γ(v, f)
        P.bottomRightCorner(d, d) = F;
        FrameChange change;
        change.to_frame = P.inverse();
        change.to_coordinates = std::move(P);
        change_ = std::move(change);
    }
    return *change_;
}

Vec PhaseGeometry::frame_components(const TangentTT& xi) const {
    return frame_change().to_frame * to_coordinate(xi).stacked();
}

TangentTT PhaseGeometry::from_frame_components(const Vec& components) const {
    const int d = real_dim();
    const Vec coords = frame_change().to_coordinates * components;
    return TangentTT::coordinate(coords.head(d), coords.tail(d));
}

AdaptedFrame adapted_frame(const PhaseGeometry& geom) {
    geom.require_nonzero_velocity();
    const int d = geom.real_dim();
    const Mat& J = geom.J();

    AdaptedFrame frame;
    frame.vectors.reserve(static_cast<std::size_t>(d));
    const Vec v0 = geom.v() / std::sqrt(geom.energy());
    frame.vectors.push_back(v0);
    frame.vectors.push_back(J * v0);

    for (int k = 0; k < d && static_cast<int>(frame.vectors.size()) < d; ++k) {
        const Vec candidate = Vec::Unit(d, k);
        const double original = std::sqrt(geom.g().norm_sq(candidate));
        Vec w = candidate;
        // Two modified Gram-Schmidt sweeps keep the Gram matrix at I to rounding.
        for (int sweep = 0; sweep < 2; ++sweep) {
            for (const Vec& f : frame.vectors) w -= geom.inner(w, f) * f;
        }
        const double norm = std::sqrt(geom.g().norm_sq(w));
        if (norm < kFrameDependenceThreshold * original) continue;
        w /= norm;
        frame.vectors.push_back(w);
        frame.vectors.push_back(J * w);
    }
    return frame;
}

}  // namespace chtwist
