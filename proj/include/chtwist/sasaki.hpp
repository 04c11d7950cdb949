#pragma once

// Geometry of T_(x,v)TM for the ball model: the connection map K, the
// horizontal/vertical splitting, the Sasaki metric, ω₀, the Liouville form and
// the almost complex structure W, plus J-adapted frames and the 4n x 4n basis
// change between coordinate and Sasaki-frame components.

#include <optional>
#include <vector>

#include "chtwist/chn_model.hpp"

namespace chtwist {

struct PhasePoint {
    BasePoint x;
    Vec v;
};

enum class TangentRep { coordinate, sasaki };

/// A vector in T_(x,v)TM. Coordinate rep holds (δx, δv); Sasaki rep holds (π_*ξ, Kξ).
struct TangentTT {
    TangentRep rep = TangentRep::coordinate;
    Vec first;
    Vec second;

    static TangentTT coordinate(Vec dx, Vec dv) { return {TangentRep::coordinate, std::move(dx), std::move(dv)}; }
    static TangentTT sasaki(Vec horizontal, Vec vertical) {
        return {TangentRep::sasaki, std::move(horizontal), std::move(vertical)};
    }

    Vec stacked() const;
};

enum class FormBasis { coordinate, sasaki_frame };

const char* to_string(FormBasis basis);

/// Antisymmetric matrix M with M(a, b) = form(e_a, e_b) in the tagged basis.
/// Coordinate basis order: ∂x^0..∂x^{2n-1}, ∂v^0..∂v^{2n-1}.
/// Sasaki-frame basis order: H(f_0)..H(f_{2n-1}), V(f_0)..V(f_{2n-1}) for the adapted frame f.
struct TwoFormMatrix {
    FormBasis basis = FormBasis::coordinate;
    Mat matrix;

    /// Throws BasisMismatch when the tags differ.
    TwoFormMatrix operator+(const TwoFormMatrix& other) const;
    TwoFormMatrix operator-(const TwoFormMatrix& other) const;

    double operator()(const Vec& a, const Vec& b) const { return a.dot(matrix * b); }

    /// Components of i_X form = form(X, .), i.e. M^T X.
    Vec interior(const Vec& X) const { return matrix.transpose() * X; }

    Mat horizontal_block() const;
    Mat vertical_block() const;
    Mat mixed_block() const;
};

/// g-orthonormal J-adapted basis [v0, Jv0, v1, Jv1, ...] of T_xM with v0 = v/|v|.
struct AdaptedFrame {
    std::vector<Vec> vectors;

    /// Frame vectors as columns.
    Mat matrix() const;
    std::size_t size() const { return vectors.size(); }
    const Vec& operator[](std::size_t i) const { return vectors[i]; }
};

/// Change of basis between coordinate and Sasaki-frame components at one phase point.
/// Columns of `to_coordinates` are the coordinate components of H(f_a), V(f_a).
struct FrameChange {
    Mat to_coordinates;
    Mat to_frame;

    TwoFormMatrix to_sasaki_frame(const TwoFormMatrix& form) const;
    TwoFormMatrix to_coordinate_basis(const TwoFormMatrix& form) const;
};

/// Everything at one phase point that the tangent-bundle operations share.
/// The constructor validates params and the base point (DomainError on |z| >= 1).
class PhaseGeometry {
public:
    PhaseGeometry(const ModelParams& params, PhasePoint p);

    const ModelParams& params() const { return params_; }
    const PhasePoint& point() const { return point_; }
    const BasePoint& x() const { return point_.x; }
    const Vec& v() const { return point_.v; }
    const MetricTensor& g() const { return metric_; }
    const Mat& J() const { return J_; }
    const Christoffel& gamma() const { return gamma_; }
    int real_dim() const { return params_.real_dim(); }

    /// ‖v‖² measured with the metric at x.
    double energy() const { return energy_; }
    double inner(const Vec& a, const Vec& b) const { return metric_.inner(a, b); }

    /// Throws DomainError when v = 0 (operations that live on TM minus the zero section).
    void require_nonzero_velocity() const;

    TangentTT to_sasaki(const TangentTT& xi) const;
    TangentTT to_coordinate(const TangentTT& xi) const;

    Vec pushforward(const TangentTT& xi) const;

    /// The connection map K (the "curvature operator" K: TTM -> TM): δv + Γ_x(δx, v).
    Vec connection_map(const TangentTT& xi) const;

    /// Coordinate rep (u, -Γ_x(u, v)); π_* = u and K = 0.
    TangentTT horizontal_lift(const Vec& u) const;
    TangentTT vertical_lift(const Vec& w) const { return TangentTT::coordinate(Vec::Zero(real_dim()), w); }

    /// g(ξ, η) = <π_*ξ, π_*η> + <Kξ, Kη>.
    double sasaki_inner(const TangentTT& xi, const TangentTT& eta) const;

    /// ω₀(ξ, η) = <π_*ξ, Kη> - <Kξ, π_*η>.
    double omega0(const TangentTT& xi, const TangentTT& eta) const;
    TwoFormMatrix omega0_matrix(FormBasis basis) const;

    /// λ(ξ) = -<v, π_*ξ>.
    double liouville(const TangentTT& xi) const;

    /// W(ξ_h, ξ_v) = (-ξ_v, ξ_h), returned in Sasaki rep.
    TangentTT almost_cx_W(const TangentTT& xi) const;

    /// Throws DomainError if v = 0. Cached after the first call.
    const AdaptedFrame& adapted_frame() const;
    const FrameChange& frame_change() const;

    /// Components of ξ in the Sasaki-frame basis, and back.
    Vec frame_components(const TangentTT& xi) const;
    TangentTT from_frame_components(const Vec& components) const;

private:
    ModelParams params_;
    PhasePoint point_;
    MetricTensor metric_;
    Mat J_;
    Christoffel gamma_;
    double energy_;
    mutable std::optional<AdaptedFrame> frame_;
    mutable std::optional<FrameChange> change_;
};

/// Dependence threshold of the frame extension: a projected candidate whose
/// g-norm is below this fraction of its original g-norm is skipped.
inline constexpr double kFrameDependenceThreshold = 1e-8;

AdaptedFrame adapted_frame(const PhaseGeometry& geom);

}  // namespace chtwist
