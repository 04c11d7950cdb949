#include "chtwist/contact.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "chtwist/dynamics.hpp"
#include "chtwist/errors.hpp"
#include "chtwist/exterior_fd.hpp"
#include "chtwist/sampling.hpp"
#include "chtwist/twisted_form.hpp"

namespace chtwist {

double alpha(const PhaseGeometry& geom, const TangentTT& xi) { return geom.liouville(xi) + beta(geom, xi); }

Vec alpha_components(const PhaseGeometry& geom) {
    const int d = geom.real_dim();
    Vec out(2 * d);
    for (int a = 0; a < 2 * d; ++a) {
        const Vec e = Vec::Unit(2 * d, a);
        out[a] = alpha(geom, TangentTT::coordinate(e.head(d), e.tail(d)));
    }
    return out;
}

TangentTT liouville_field(const PhaseGeometry& geom) {
    return geom.to_sasaki(solve_interior(geom, omega_total(geom, FormBasis::coordinate), alpha_components(geom)));
}

double primitive_fd_residual(const ModelParams& params, const PhasePoint& p) {
    const OneFormField components = [&params](const Vec& q) {
        return alpha_components(PhaseGeometry(params, phase_point_from(q)));
    };
    const Mat d_alpha = exterior_derivative_fd(components, phase_coordinates(p), params.fd_step);
    const Mat omega = omega_total(PhaseGeometry(params, p), FormBasis::coordinate).matrix;
    return (d_alpha - omega).cwiseAbs().maxCoeff() / (1.0 + omega.cwiseAbs().maxCoeff());
}

const char* to_string(Wall wall) { return wall == Wall::inner ? "inner" : "outer"; }

const char* to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::contact_disconnected:
            return "contact_disconnected";
        case Verdict::degenerate:
            return "degenerate";
        case Verdict::fails:
            return "fails";
    }
    return "unknown";
}

namespace {

// Minimum-norm solution of i_X ω = α when ω is singular. On the kernel of a
// singular ω, α and dH both vanish, so dH(X) does not depend on the choice.
Vec minimum_norm_liouville(const PhaseGeometry& geom) {
    const Mat A = omega_total(geom, FormBasis::coordinate).matrix.transpose();
    Eigen::CompleteOrthogonalDecomposition<Mat> cod(A.rows(), A.cols());
    cod.setThreshold(geom.params().tol_exact);
    cod.compute(A);
    return cod.solve(alpha_components(geom));
}

}  // namespace

TransversalityResult transversality_check(const PhaseGeometry& geom) {
    TransversalityResult out;
    out.level = geom.energy();
    const Vec dH = hamiltonian_differential(geom);
    try {
        out.dh_x = dH.dot(geom.to_coordinate(liouville_field(geom)).stacked());
    } catch (const ConditioningError&) {
        out.singular = true;
        out.dh_x = dH.dot(minimum_norm_liouville(geom));
    }
    out.ambiguous = out.singular || std::abs(out.dh_x) < geom.params().tol_exact;
    return out;
}

ContactReport contact_report(const ModelParams& params, double a, double b, int sample_count, std::uint64_t seed) {
    params.validate();
    if (!(a > 0.0) || !(b > 0.0)) throw DomainError("levels a and b must be positive");
    if (sample_count < 1) throw DomainError("sample_count must be >= 1");

    ContactReport report;
    report.n = params.n;
    report.a = a;
    report.b = b;
    report.c = params.c;
    report.primitive_tolerance = params.tol_fd;

    if (!(a < b)) {
        report.verdict = Verdict::degenerate;
        report.explanation = "a >= b: the domain a <= |v|^2 <= b has empty interior";
        return report;
    }

    Sampler sampler(seed);
    for (const Wall wall : {Wall::inner, Wall::outer}) {
        LevelRecord record;
        record.wall = wall;
        record.level = wall == Wall::inner ? a : b;
        record.outward = true;
        for (int i = 0; i < sample_count; ++i) {
            const PhasePoint p = sampler.on_level(params, record.level, sample_radius_for(params));
            const PhaseGeometry geom(params, p);
            const TransversalityResult t = transversality_check(geom);
            record.dh_x.push_back(t.dh_x);
            record.max_identity_residual =
                std::max(record.max_identity_residual, std::abs(t.dh_x - (geom.energy() - params.c)));
            record.singular += t.singular ? 1 : 0;
            record.ambiguous += t.ambiguous ? 1 : 0;
            record.outward = record.outward && t.outward(wall);
            report.primitive_max_residual = std::max(report.primitive_max_residual, primitive_fd_residual(params, p));
        }
        report.levels.push_back(std::move(record));
    }

    std::ostringstream why;
    const LevelRecord& inner = report.levels[0];
    const LevelRecord& outer = report.levels[1];
    if (inner.ambiguous > 0 || outer.ambiguous > 0) {
        const LevelRecord& critical = inner.ambiguous > 0 ? inner : outer;
        report.verdict = Verdict::degenerate;
        why << "level |v|^2 = " << critical.level << " is critical: dH(X) vanishes there ("
            << critical.ambiguous << " of " << sample_count << " samples ambiguous, " << critical.singular
            << " with singular omega)";
    } else if (report.primitive_max_residual > params.tol_fd) {
        report.verdict = Verdict::fails;
        why << "d(alpha) != omega: residual " << report.primitive_max_residual;
    } else if (!inner.outward || !outer.outward) {
        report.verdict = Verdict::fails;
        if (!inner.outward) why << "X points inward through the inner wall |v|^2 = " << a << "; ";
        if (!outer.outward) why << "X points inward through the outer wall |v|^2 = " << b << "; ";
    } else {
        report.verdict = Verdict::contact_disconnected;
        why << "X is outward on both walls: dH(X) < 0 on |v|^2 = " << a << " and > 0 on |v|^2 = " << b;
    }
    report.explanation = why.str();
    return report;
}

}  // namespace chtwist
