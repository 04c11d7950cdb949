#pragma once

// The 1-form β(ξ) = <Jv, Kξ>/‖v‖², its exterior derivative split into the
// horizontal block Ω and the vertical block, and the total form ω = ω₀ + dβ.

#include "chtwist/sasaki.hpp"

namespace chtwist {

double beta(const PhaseGeometry& geom, const TangentTT& xi);

/// β evaluated on the coordinate basis ∂x^0.., ∂v^0...
Vec beta_components(const PhaseGeometry& geom);

/// Ω(u, w) = -R(v, Jv/‖v‖², u, w) for horizontal u, w (given by their projections).
double omega_magnetic(const PhaseGeometry& geom, const Vec& u, const Vec& w);

/// dβ on two vertical vectors (0, u), (0, w):
///   (2/‖v‖²)<Ju, w> - (2/‖v‖⁴)(<v, u><Jv, w> - <v, w><Jv, u>).
double dbeta_vertical(const PhaseGeometry& geom, const Vec& u, const Vec& w);

/// Covariant derivative D_ξσ of σ = Jv/‖v‖² along ξ, as a section of π*TM.
Vec covariant_derivative_sigma(const PhaseGeometry& geom, const TangentTT& xi);

/// dβ(ξ, η) = <D_ξσ, Kη> - <D_ησ, Kξ> + <σ, R(π_*ξ, π_*η) v> for arbitrary ξ, η.
double dbeta(const PhaseGeometry& geom, const TangentTT& xi, const TangentTT& eta);

struct MagneticDecomposition {
    Mat omega_h;             ///< Ω on the horizontal frame vectors
    Mat dbeta_v;             ///< dβ on the vertical frame vectors
    Mat mixed;               ///< dβ(H(f_a), V(f_b)), evaluated through the general formula
    TwoFormMatrix assembled; ///< 4n x 4n, Sasaki-frame basis
};

MagneticDecomposition assemble_dbeta(const PhaseGeometry& geom);

/// Coordinate-basis dβ from central differences of beta_components over (x, v).
TwoFormMatrix dbeta_fd_oracle(const ModelParams& params, const PhasePoint& p);

/// ω₀ + dβ. Throws DomainError when v = 0.
TwoFormMatrix omega_total(const PhaseGeometry& geom, FormBasis basis = FormBasis::sasaki_frame);

/// π*ρ for the Kähler form ρ(u, w) = <Ju, w>, coordinate basis. For n = 1 this is
/// the pullback of the Riemannian area form.
TwoFormMatrix kahler_form_pullback(const PhaseGeometry& geom);

}  // namespace chtwist
