#include "chtwist/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "chtwist/errors.hpp"
#include "chtwist/exterior_fd.hpp"
#include "chtwist/twisted_form.hpp"

namespace chtwist {

double hamiltonian(const ModelParams& params, const PhasePoint& p) {
    return 0.5 * metric(params, p.x).norm_sq(p.v);
}

Vec hamiltonian_differential(const PhaseGeometry& geom) {
    const int d = geom.real_dim();
    const auto dG = metric_derivatives(geom.params(), geom.x());
    const Vec& v = geom.v();
    Vec out(2 * d);
    for (int k = 0; k < d; ++k) out[k] = 0.5 * v.dot(dG[static_cast<std::size_t>(k)] * v);
    out.tail(d) = geom.g().matrix() * v;
    return out;
}

Vec hamiltonian_differential_frame(const PhaseGeometry& geom) {
    const int d = geom.real_dim();
    const AdaptedFrame& frame = geom.adapted_frame();
    Vec out = Vec::Zero(2 * d);
    for (int a = 0; a < d; ++a) out[d + a] = geom.inner(geom.v(), frame[static_cast<std::size_t>(a)]);
    return out;
}

TangentTT xh_closed(const PhaseGeometry& geom) {
    geom.require_nonzero_velocity();
    return TangentTT::sasaki(geom.v(), geom.params().c * (geom.J() * geom.v()));
}

TangentTT solve_interior(const PhaseGeometry& geom, const TwoFormMatrix& omega_coordinate, const Vec& theta) {
    if (omega_coordinate.basis != FormBasis::coordinate) {
        throw BasisMismatch("solve_interior expects a coordinate-basis 2-form");
    }
    // i_X ω = ω(X, .) = Mᵀ X.
    const Mat A = omega_coordinate.matrix.transpose();
    const Eigen::PartialPivLU<Mat> lu(A);
    const double rcond = lu.rcond();
    if (!(rcond >= kSolveRcondFloor)) throw ConditioningError("2-form is numerically singular", rcond);
    const Vec X = lu.solve(theta);
    const int d = geom.real_dim();
    return TangentTT::coordinate(X.head(d), X.tail(d));
}

TangentTT xh_solve(const PhaseGeometry& geom) {
    const TwoFormMatrix omega = omega_total(geom, FormBasis::coordinate);
    return geom.to_sasaki(solve_interior(geom, omega, hamiltonian_differential(geom)));
}

const char* to_string(FlowMode mode) { return mode == FlowMode::magnetic ? "magnetic" : "geodesic"; }

namespace {

Vec flow_rhs(const ModelParams& params, const Mat& J, const Vec& y, double magnetic) {
    const int d = params.real_dim();
    const Vec x = y.head(d);
    const Vec v = y.tail(d);
    Vec out(2 * d);
    out.head(d) = v;
    out.tail(d) = magnetic * params.c * (J * v) - geodesic_acceleration(params, BasePoint(x), v);
    return out;
}

bool all_finite(const Vec& y) { return y.allFinite(); }

}  // namespace

Trajectory integrate_flow(const ModelParams& params, const PhasePoint& p0, double T, double dt,
                          const FlowOptions& options) {
    params.validate();
    if (!(dt > 0.0)) throw DomainError("dt must be positive");
    if (!(T >= 0.0)) throw DomainError("T must be non-negative");
    if (options.sample_stride < 1) throw DomainError("sample stride must be >= 1");
    const double h0 = hamiltonian(params, p0);
    if (!(h0 > 0.0)) throw DomainError("initial velocity must be nonzero");

    const int d = params.real_dim();
    const Mat J = complex_structure(params);
    const double magnetic = options.mode == FlowMode::magnetic ? 1.0 : 0.0;
    const double r2_max = options.truncation_radius * options.truncation_radius;

    Trajectory traj;
    traj.dt = dt;
    traj.mode = options.mode;
    traj.samples.push_back({0.0, p0, h0});

    const auto steps = static_cast<long long>(std::llround(T / dt));
    Vec y = phase_coordinates(p0);
    for (long long step = 1; step <= steps; ++step) {
        const Vec k1 = flow_rhs(params, J, y, magnetic);
        const Vec y2 = y + 0.5 * dt * k1;
        if (!(y2.head(d).squaredNorm() < 1.0)) { traj.truncated = true; break; }
        const Vec k2 = flow_rhs(params, J, y2, magnetic);
        const Vec y3 = y + 0.5 * dt * k2;
        if (!(y3.head(d).squaredNorm() < 1.0)) { traj.truncated = true; break; }
        const Vec k3 = flow_rhs(params, J, y3, magnetic);
        const Vec y4 = y + dt * k3;
        if (!(y4.head(d).squaredNorm() < 1.0)) { traj.truncated = true; break; }
        const Vec k4 = flow_rhs(params, J, y4, magnetic);
        const Vec next = y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (!all_finite(next)) {
            traj.nonfinite = true;
            break;
        }
        y = next;
        const double t = static_cast<double>(step) * dt;
        traj.steps = step;

        const PhasePoint p = phase_point_from(y);
        if (!(p.x.squared_radius() < r2_max)) {
            traj.truncated = true;
            break;
        }
        const double h = hamiltonian(params, p);
        traj.max_drift = std::max(traj.max_drift, std::abs(h - h0) / h0);
        if (step % options.sample_stride == 0 || step == steps) traj.samples.push_back({t, p, h});
    }
    return traj;
}

double ConvergenceStudy::observed_order() const { return std::log2(ratio()); }

ConvergenceStudy convergence_study(const ModelParams& params, const PhasePoint& p0, double T, double dt,
                                   FlowMode mode) {
    FlowOptions options;
    options.mode = mode;
    options.sample_stride = std::numeric_limits<long long>::max();
    auto final_state = [&](double step) {
        const Trajectory traj = integrate_flow(params, p0, T, step, options);
        if (traj.truncated || traj.nonfinite) throw DomainError("convergence study orbit left the ball");
        return phase_coordinates(traj.final_sample().p);
    };
    const Vec y1 = final_state(dt);
    const Vec y2 = final_state(dt / 2.0);
    const Vec y4 = final_state(dt / 4.0);
    ConvergenceStudy out;
    out.dt = dt;
    out.diff_coarse = (y1 - y2).norm();
    out.diff_fine = (y2 - y4).norm();
    return out;
}

}  // namespace chtwist
