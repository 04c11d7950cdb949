#pragma once

#include <string>
#include <vector>

#include "chtwist/sasaki.hpp"

namespace chtwist {

/// H(x, v) = ‖v‖²_g / 2.
double hamiltonian(const ModelParams& params, const PhasePoint& p);

/// dH in coordinate components: (½ vᵀ ∂_k G v, G v).
Vec hamiltonian_differential(const PhaseGeometry& geom);

/// dH in Sasaki-frame components: zero on H, <v, f_a> on V(f_a).
Vec hamiltonian_differential_frame(const PhaseGeometry& geom);

/// X_H = (v, R(v, Jv/‖v‖²) v) = (v, c Jv), Sasaki rep.
TangentTT xh_closed(const PhaseGeometry& geom);

/// Reciprocal-condition floor below which a dense solve against ω is refused.
inline constexpr double kSolveRcondFloor = 1e-12;

/// Solve i_X ω = θ for X, with ω and θ in coordinate components. Throws
/// ConditioningError when the LU reciprocal-condition estimate is below kSolveRcondFloor.
TangentTT solve_interior(const PhaseGeometry& geom, const TwoFormMatrix& omega_coordinate, const Vec& theta);

/// X_H from a partial-pivoted LU solve of i_X ω = dH in coordinates; returned in Sasaki rep.
TangentTT xh_solve(const PhaseGeometry& geom);

enum class FlowMode { magnetic, geodesic };

const char* to_string(FlowMode mode);

struct TrajectorySample {
    double t = 0.0;
    PhasePoint p;
    double energy = 0.0;  ///< H = ‖v‖²_g / 2
};

struct Trajectory {
    std::vector<TrajectorySample> samples;
    double dt = 0.0;
    std::string integrator = "rk4";
    FlowMode mode = FlowMode::magnetic;
    long long steps = 0;
    bool truncated = false;   ///< left the ball |z| < truncation radius
    bool nonfinite = false;   ///< a step produced NaN/inf and was rejected
    double max_drift = 0.0;   ///< max |H(t) - H(0)| / H(0) over every step

    const TrajectorySample& final_sample() const { return samples.back(); }
};

struct FlowOptions {
    FlowMode mode = FlowMode::magnetic;
    double truncation_radius = 0.95;
    long long sample_stride = 1;
};

/// RK4 on ẋ = v, v̇ = c Jv - Γ_x(v, v) (c Jv dropped in geodesic mode).
/// Throws DomainError for dt <= 0, T < 0, v = 0 or x outside the ball.
Trajectory integrate_flow(const ModelParams& params, const PhasePoint& p0, double T, double dt,
                          const FlowOptions& options = {});

struct ConvergenceStudy {
    double dt = 0.0;
    double diff_coarse = 0.0;  ///< ‖y(dt) - y(dt/2)‖ at time T
    double diff_fine = 0.0;    ///< ‖y(dt/2) - y(dt/4)‖ at time T
    double ratio() const { return diff_coarse / diff_fine; }
    double observed_order() const;
};

/// Step-halving study of the final state at time T.
ConvergenceStudy convergence_study(const ModelParams& params, const PhasePoint& p0, double T, double dt,
                                   FlowMode mode = FlowMode::magnetic);

}  // namespace chtwist
