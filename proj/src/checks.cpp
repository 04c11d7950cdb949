#include "chtwist/checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "chtwist/contact.hpp"
#include "chtwist/dynamics.hpp"
#include "chtwist/errors.hpp"
#include "chtwist/exterior_fd.hpp"
#include "chtwist/linalg.hpp"
#include "chtwist/sampling.hpp"
#include "chtwist/twisted_form.hpp"

namespace chtwist {

namespace {

class Tally {
public:
    Tally(std::string id, std::string statistic, double tolerance)
        : record_{std::move(id), std::move(statistic), 0, 0.0, tolerance, true} {}

    void add(double residual) {
        ++record_.samples;
        if (!std::isfinite(residual)) {
            record_.max_residual = std::numeric_limits<double>::infinity();
            record_.pass = false;
            return;
        }
        record_.max_residual = std::max(record_.max_residual, residual);
        record_.pass = record_.pass && residual <= record_.tolerance;
    }

    CheckRecord finish() const { return record_; }

private:
    CheckRecord record_;
};

double relative(double diff, double reference) { return std::abs(diff) / (1.0 + std::abs(reference)); }

double max_abs(const Mat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

// The displayed block form of Ω in an adapted frame.
Mat expected_omega_block(const ModelParams& params) {
    const int d = params.real_dim();
    Mat out = Mat::Zero(d, d);
    for (int i = 0; i < params.n; ++i) {
        const double value = i == 0 ? params.c : params.c / 2.0;
        out(2 * i, 2 * i + 1) = value;
        out(2 * i + 1, 2 * i) = -value;
    }
    return out;
}

TwoFormMatrix omega_coordinate_at(const ModelParams& params, const Vec& q) {
    return omega_total(PhaseGeometry(params, phase_point_from(q)), FormBasis::coordinate);
}

}  // namespace

std::vector<CheckRecord> run_verification_suite(const ModelParams& params, int samples, std::uint64_t seed) {
    params.validate();
    if (samples < 1) throw DomainError("samples must be >= 1");
    const double c = params.c;
    const double tol_fd = params.tol_fd;
    const double tol_exact = params.tol_exact;

    Tally curvature("curvature_oracle", "max |R_numeric - R_algebraic| / (1 + |R_algebraic|)", tol_fd);
    Tally hsc("holomorphic_sectional_curvature", "max |R(X,JX,X,JX) + c| over algebraic and numeric routes", tol_fd);
    Tally j_isometry("j_isometry", "max |g(JX,JY) - g(X,Y)|", tol_exact);
    Tally dlambda("omega0_equals_dlambda_fd", "max |d(lambda)_fd - omega0| / (1 + max|omega0|)", tol_fd);
    Tally hv_exact("hv_orthogonality", "max |dbeta(H(f_a), V(f_b))| in the assembled form", tol_exact);
    Tally hv_fd("hv_orthogonality_fd", "max |mixed block| of the FD dbeta in the Sasaki frame", tol_fd);
    Tally vertical_kernel("vertical_kernel", "max norm of the vertical block applied to (0,v), (0,Jv)", tol_exact);
    Tally curvature_block("curvature_block", "max |Omega - block form {c, c/2, 0}| in the adapted frame", tol_exact);
    Tally oracle("dbeta_fd_oracle", "max |dbeta_fd - dbeta_assembled| in the Sasaki frame", tol_fd);
    Tally symplectic("symplectic_nondegenerate", "max sigma_max/sigma_min of omega at random levels", 1.0 / tol_exact);
    Tally critical("symplectic_critical_level", "max sigma_max/sigma_min of omega on |v|^2 = c", 1.0 / tol_exact);
    Tally pf_det("pfaffian_squared_equals_det", "max |Pf^2 - det| / max(1, |det|)", tol_exact);
    Tally closed("omega_closed_fd", "max |d(omega)_fd| / (1 + max |partial_a omega_bc|)", tol_fd);
    Tally hamiltonian_field("hamiltonian_field_closed_form", "max |i_{X_H} omega - dH| with X_H = (v, cJv)", tol_exact);
    Tally solve("hamiltonian_field_dense_solve", "max Sasaki norm of xh_solve - xh_closed", kSolveAgreementTol);
    Tally alpha_xh("alpha_of_xh", "max |alpha(X_H) - (c - |v|^2)|", tol_exact);
    Tally vertical_xh("omega_vertical_xh", "max |omega((0,v), X_H) + |v|^2|", tol_exact);
    Tally primitive("primitive_equals_omega_fd", "max |d(alpha)_fd - omega| / (1 + max|omega|)", tol_fd);
    Tally liouville("liouville_dh_identity", "max |dH(X) - (|v|^2 - c)|", kSolveAgreementTol);
    Tally area("n1_area_form", "max |dbeta - c pi^*(area form)| / (1 + max|dbeta|), coordinate basis", tol_exact);

    Sampler sampler(seed);
    const Mat expected = expected_omega_block(params);
    const int d = params.real_dim();

    for (int s = 0; s < samples; ++s) {
        const double energy = sampler.log_uniform(0.1 * c, 10.0 * c);
        const PhasePoint p = sampler.on_level(params, energy, sample_radius_for(params));
        const PhaseGeometry geom(params, p);
        const MetricTensor& g = geom.g();
        const Mat& J = geom.J();

        // Base-manifold curvature.
        {
            const RiemannComponents riemann = riemann_numeric(params, p.x);
            const Vec X = sampler.unit_vector(g, d);
            const Vec Y = sampler.unit_vector(g, d);
            const Vec Z = sampler.unit_vector(g, d);
            const Vec W = sampler.unit_vector(g, d);
            const double alg = curvature_algebraic(params, g, X, Y, Z, W);
            curvature.add(relative(curvature_numeric(riemann, g, X, Y, Z, W) - alg, alg));
            const Vec JX = J * X;
            hsc.add(std::max(std::abs(curvature_algebraic(params, g, X, JX, X, JX) + c),
                             std::abs(curvature_numeric(riemann, g, X, JX, X, JX) + c)));
            j_isometry.add(std::abs(g.inner(J * X, J * Y) - g.inner(X, Y)));
        }

        // ω₀ = dλ.
        {
            const OneFormField lambda = [&params](const Vec& q) {
                const PhaseGeometry at(params, phase_point_from(q));
                Vec out = Vec::Zero(2 * at.real_dim());
                out.head(at.real_dim()) = -(at.g().matrix() * at.v());
                return out;
            };
            const Mat omega0 = geom.omega0_matrix(FormBasis::coordinate).matrix;
            const Mat fd = exterior_derivative_fd(lambda, phase_coordinates(p), params.fd_step);
            dlambda.add(max_abs(fd - omega0) / (1.0 + max_abs(omega0)));
        }

        // dβ structure.
        const MagneticDecomposition dec = assemble_dbeta(geom);
        hv_exact.add(max_abs(dec.mixed));
        {
            const Vec v_frame = geom.frame_components(geom.vertical_lift(p.v)).tail(d);
            const Vec jv_frame = geom.frame_components(geom.vertical_lift(J * p.v)).tail(d);
            vertical_kernel.add(std::max({(dec.dbeta_v * v_frame).norm(), (dec.dbeta_v.transpose() * v_frame).norm(),
                                 (dec.dbeta_v * jv_frame).norm(), (dec.dbeta_v.transpose() * jv_frame).norm()}));
        }
        curvature_block.add(max_abs(dec.omega_h - expected));
        {
            const TwoFormMatrix fd = geom.frame_change().to_sasaki_frame(dbeta_fd_oracle(params, p));
            oracle.add(max_abs(fd.matrix - dec.assembled.matrix));
            hv_fd.add(max_abs(fd.mixed_block()));
            if (params.n == 1) {
                const Mat dbeta_coord = geom.frame_change().to_coordinate_basis(dec.assembled).matrix;
                const Mat area_form = c * kahler_form_pullback(geom).matrix;
                area.add(max_abs(dbeta_coord - area_form) / (1.0 + max_abs(dbeta_coord)));
            }
        }

        // ω.
        const TwoFormMatrix omega = omega_total(geom);
        {
            const Nondegeneracy nd = nondegeneracy(omega.matrix);
            symplectic.add(nd.sigma_min > 0.0 ? nd.sigma_max / nd.sigma_min
                                              : std::numeric_limits<double>::infinity());
            pf_det.add(std::abs(nd.pfaffian * nd.pfaffian - nd.det) / std::max(1.0, std::abs(nd.det)));
            const TwoFormField omega_field = [&params](const Vec& q) {
                return omega_coordinate_at(params, q).matrix;
            };
            closed.add(closedness_fd(omega_field, phase_coordinates(p), params.fd_step).relative());
        }

        // Hamiltonian vector field.
        const TangentTT xh = xh_closed(geom);
        const Vec xh_frame = geom.frame_components(xh);
        hamiltonian_field.add((omega.interior(xh_frame) - hamiltonian_differential_frame(geom)).norm());
        try {
            const TangentTT solved = xh_solve(geom);
            const TangentTT diff = TangentTT::sasaki(solved.first - xh.first, solved.second - xh.second);
            solve.add(std::sqrt(geom.sasaki_inner(diff, diff)));
        } catch (const ConditioningError&) {
            solve.add(std::numeric_limits<double>::infinity());
        }

        // Primitive and Liouville field.
        alpha_xh.add(std::abs(alpha(geom, xh) - (c - geom.energy())));
        {
            const Vec v_vertical = geom.frame_components(geom.vertical_lift(p.v));
            vertical_xh.add(std::abs(omega(v_vertical, xh_frame) + geom.energy()));
        }
        primitive.add(primitive_fd_residual(params, p));
        const TransversalityResult t = transversality_check(geom);
        liouville.add(t.singular ? std::numeric_limits<double>::infinity()
                                 : std::abs(t.dh_x - (geom.energy() - c)));
    }

    const int critical_samples = std::max(1, samples / 10);
    for (int s = 0; s < critical_samples; ++s) {
        const PhaseGeometry geom(params, sampler.on_level(params, c, sample_radius_for(params)));
        const Nondegeneracy nd = nondegeneracy(omega_total(geom).matrix);
        critical.add(nd.sigma_min > 0.0 ? nd.sigma_max / nd.sigma_min : std::numeric_limits<double>::infinity());
    }

    std::vector<CheckRecord> out{curvature.finish(),       hsc.finish(),
                                 j_isometry.finish(),      dlambda.finish(),
                                 hv_exact.finish(),        hv_fd.finish(),
                                 vertical_kernel.finish(), curvature_block.finish(),
                                 oracle.finish(),          symplectic.finish(),
                                 critical.finish(),        pf_det.finish(),
                                 closed.finish(),          hamiltonian_field.finish(),
                                 solve.finish(),           alpha_xh.finish(),
                                 vertical_xh.finish(),     primitive.finish(),
                                 liouville.finish()};
    if (params.n == 1) out.push_back(area.finish());
    return out;
}

CheckRecord curvature_cross_check(const ModelParams& params, int samples, std::uint64_t seed) {
    params.validate();
    if (samples < 1) throw DomainError("samples must be >= 1");
    Tally tally("curvature_oracle", "max |R_numeric - R_algebraic| / (1 + |R_algebraic|)", params.tol_fd);
    Sampler sampler(seed);
    const int d = params.real_dim();
    for (int s = 0; s < samples; ++s) {
        const BasePoint x = sampler.base_point(params.n, sample_radius_for(params));
        const MetricTensor g = metric(params, x);
        const RiemannComponents riemann = riemann_numeric(params, x);
        const Vec X = sampler.unit_vector(g, d);
        const Vec Y = sampler.unit_vector(g, d);
        const Vec Z = sampler.unit_vector(g, d);
        const Vec W = sampler.unit_vector(g, d);
        const double alg = curvature_algebraic(params, g, X, Y, Z, W);
        tally.add(relative(curvature_numeric(riemann, g, X, Y, Z, W) - alg, alg));
    }
    return tally.finish();
}

bool all_pass(const std::vector<CheckRecord>& records) {
    return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.pass; });
}

}  // namespace chtwist
