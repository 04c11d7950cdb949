// Acceptance suite: every criterion over n in {1, 2, 3}, c in {0.5, 1, 3} with
// at least 200 seeded samples per combination. Prints one PASS/FAIL line per
// criterion; `--criterion N` runs a single one.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chtwist/checks.hpp"
#include "chtwist/contact.hpp"
#include "chtwist/dynamics.hpp"
#include "chtwist/errors.hpp"
#include "chtwist/exterior_fd.hpp"
#include "chtwist/linalg.hpp"
#include "chtwist/sampling.hpp"
#include "chtwist/twisted_form.hpp"

using namespace chtwist;

namespace {

constexpr int kSamples = 200;
constexpr int kDims[] = {1, 2, 3};
constexpr double kCurvatures[] = {0.5, 1.0, 3.0};
constexpr double kInf = std::numeric_limits<double>::infinity();

ModelParams params_for(int n, double c) {
    ModelParams p;
    p.n = n;
    p.c = c;
    return p;
}

std::uint64_t seed_for(int criterion, int n, double c) {
    return kDefaultSeed + 1000003ull * static_cast<std::uint64_t>(criterion) + 101ull * static_cast<std::uint64_t>(n) +
           static_cast<std::uint64_t>(std::lround(c * 16));
}

double max_abs(const Mat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

// Largest residual of one named statistic, with its tolerance.
struct Measure {
    std::string name;
    double tolerance;
    double worst = 0.0;
    int samples = 0;

    void add(double residual) {
        ++samples;
        worst = std::isfinite(residual) ? std::max(worst, residual) : kInf;
    }
    bool pass() const { return worst <= tolerance; }
};

struct Report {
    bool pass = true;
    std::vector<std::string> details;

    void record(int n, double c, const std::vector<Measure>& measures) {
        for (const auto& m : measures) {
            char line[256];
            std::snprintf(line, sizeof line, "    n=%d c=%-3g %-34s max=%-12.4g tol=%-8.1g samples=%-4d %s", n, c,
                          m.name.c_str(), m.worst, m.tolerance, m.samples, m.pass() ? "ok" : "FAIL");
            details.emplace_back(line);
            pass = pass && m.pass();
        }
    }
};

template <typename Body>
Report over_combinations(int criterion, Body body) {
    Report report;
    for (const int n : kDims) {
        for (const double c : kCurvatures) {
            const ModelParams params = params_for(n, c);
            Sampler sampler(seed_for(criterion, n, c));
            report.record(n, c, body(params, sampler));
        }
    }
    return report;
}

// ‖v‖² log-uniform across [0.1c, 10c].
PhasePoint random_phase(const ModelParams& params, Sampler& sampler) {
    const double energy = sampler.log_uniform(0.1 * params.c, 10.0 * params.c);
    return sampler.on_level(params, energy, sample_radius_for(params));
}

Report curvature_oracle() {
    return over_combinations(1, [](const ModelParams& params, Sampler& sampler) {
        Measure cross{"numeric vs algebraic (relative)", 1e-5};
        Measure hsc{"holomorphic sectional curvature", 1e-5};
        const CheckRecord record = curvature_cross_check(params, kSamples, sampler.engine()());
        cross.samples = record.samples;
        cross.worst = record.max_residual;
        const int d = params.real_dim();
        const Mat J = complex_structure(params);
        for (int s = 0; s < kSamples; ++s) {
            const BasePoint x = sampler.base_point(params.n);
            const MetricTensor g = metric(params, x);
            const Vec X = sampler.unit_vector(g, d);
            hsc.add(std::abs(curvature_numeric(params, x, X, J * X, X, J * X) + params.c));
        }
        return std::vector<Measure>{cross, hsc};
    });
}

Report hv_orthogonality() {
    return over_combinations(2, [](const ModelParams& params, Sampler& sampler) {
        Measure assembled{"mixed block, assembled", params.tol_exact};
        Measure fd{"mixed block, FD oracle", params.tol_fd};
        for (int s = 0; s < kSamples; ++s) {
            const PhasePoint p = random_phase(params, sampler);
            const PhaseGeometry geom(params, p);
            assembled.add(max_abs(assemble_dbeta(geom).assembled.mixed_block()));
            fd.add(max_abs(geom.frame_change().to_sasaki_frame(dbeta_fd_oracle(params, p)).mixed_block()));
        }
        return std::vector<Measure>{assembled, fd};
    });
}

Report vertical_kernel() {
    return over_combinations(3, [](const ModelParams& params, Sampler& sampler) {
        Measure kernel{"V-block rows/cols at (0,v), (0,Jv)", params.tol_exact};
        for (int s = 0; s < kSamples; ++s) {
            const PhaseGeometry geom(params, random_phase(params, sampler));
            const Mat V = assemble_dbeta(geom).assembled.vertical_block();
            // Frame vectors 0 and 1 are v/|v| and Jv/|v|.
            kernel.add(std::max({V.row(0).norm(), V.row(1).norm(), V.col(0).norm(), V.col(1).norm()}));
            // Pointwise on the closed form too, against random vertical partners.
            const Vec w = sampler.gaussian(params.real_dim());
            kernel.add(std::max(std::abs(dbeta_vertical(geom, geom.v(), w)),
                                std::abs(dbeta_vertical(geom, geom.J() * geom.v(), w))));
        }
        return std::vector<Measure>{kernel};
    });
}

Report omega_block() {
    return over_combinations(4, [](const ModelParams& params, Sampler& sampler) {
        Measure block{"adapted-frame Omega vs {c, c/2, 0}", params.tol_exact};
        const int d = params.real_dim();
        Mat expected = Mat::Zero(d, d);
        for (int i = 0; i < params.n; ++i) {
            expected(2 * i, 2 * i + 1) = i == 0 ? params.c : params.c / 2.0;
            expected(2 * i + 1, 2 * i) = -expected(2 * i, 2 * i + 1);
        }
        for (int s = 0; s < kSamples; ++s) {
            const PhaseGeometry geom(params, random_phase(params, sampler));
            const AdaptedFrame& f = geom.adapted_frame();
            Mat omega(d, d);
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) omega(a, b) = omega_magnetic(geom, f[a], f[b]);
            block.add(max_abs(omega - expected));
        }
        return std::vector<Measure>{block};
    });
}

Report symplecticity() {
    return over_combinations(5, [](const ModelParams& params, Sampler& sampler) {
        Measure random_levels{"sigma_max/sigma_min, random levels", 1.0 / params.tol_exact};
        Measure critical{"sigma_max/sigma_min, |v|^2 = c", 1.0 / params.tol_exact};
        Measure closed{"FD |d omega| (relative)", params.tol_fd};
        const auto condition = [](const Mat& omega) {
            const Nondegeneracy nd = nondegeneracy(omega);
            return nd.sigma_min > 0.0 ? nd.sigma_max / nd.sigma_min : kInf;
        };
        const TwoFormField omega_field = [&params](const Vec& q) {
            return omega_total(PhaseGeometry(params, phase_point_from(q)), FormBasis::coordinate).matrix;
        };
        for (int s = 0; s < kSamples; ++s) {
            const PhasePoint p = random_phase(params, sampler);
            const PhaseGeometry geom(params, p);
            random_levels.add(condition(omega_total(geom).matrix));
            closed.add(closedness_fd(omega_field, phase_coordinates(p), params.fd_step).relative());
            const PhaseGeometry at_c(params, sampler.on_level(params, params.c, sample_radius_for(params)));
            critical.add(condition(omega_total(at_c).matrix));
        }
        return std::vector<Measure>{random_levels, critical, closed};
    });
}

Report dbeta_oracle() {
    return over_combinations(6, [](const ModelParams& params, Sampler& sampler) {
        Measure coords{"FD vs assembled, coordinates (rel)", params.tol_fd};
        Measure frame{"FD vs assembled, Sasaki frame", params.tol_fd};
        for (int s = 0; s < kSamples; ++s) {
            const PhasePoint p = random_phase(params, sampler);
            const PhaseGeometry geom(params, p);
            const TwoFormMatrix fd = dbeta_fd_oracle(params, p);
            const TwoFormMatrix assembled = assemble_dbeta(geom).assembled;
            const Mat assembled_coords = geom.frame_change().to_coordinate_basis(assembled).matrix;
            coords.add(max_abs(fd.matrix - assembled_coords) / (1.0 + max_abs(assembled_coords)));
            frame.add(max_abs(geom.frame_change().to_sasaki_frame(fd).matrix - assembled.matrix));
        }
        return std::vector<Measure>{coords, frame};
    });
}

Report hamiltonian_field() {
    return over_combinations(7, [](const ModelParams& params, Sampler& sampler) {
        Measure closed_form{"|omega X_H - dH|, X_H = (v, cJv)", params.tol_exact};
        Measure solve{"dense solve vs closed form", 1e-8};
        for (int s = 0; s < kSamples; ++s) {
            const PhaseGeometry geom(params, random_phase(params, sampler));
            const TangentTT xh = xh_closed(geom);
            const TwoFormMatrix omega = omega_total(geom);
            closed_form.add((omega.interior(geom.frame_components(xh)) - hamiltonian_differential_frame(geom)).norm());
            try {
                const TangentTT solved = xh_solve(geom);
                const TangentTT diff = TangentTT::sasaki(solved.first - xh.first, solved.second - xh.second);
                solve.add(std::sqrt(geom.sasaki_inner(diff, diff)));
            } catch (const ConditioningError&) {
                solve.add(kInf);
            }
        }
        return std::vector<Measure>{closed_form, solve};
    });
}

Report primitive() {
    return over_combinations(8, [](const ModelParams& params, Sampler& sampler) {
        Measure d_alpha{"FD d(alpha) vs omega (rel)", params.tol_fd};
        Measure on_xh{"|alpha(X_H) - (c - |v|^2)|", params.tol_exact};
        for (int s = 0; s < kSamples; ++s) {
            const PhasePoint p = random_phase(params, sampler);
            const PhaseGeometry geom(params, p);
            d_alpha.add(primitive_fd_residual(params, p));
            on_xh.add(std::abs(alpha(geom, xh_closed(geom)) - (params.c - geom.energy())));
        }
        return std::vector<Measure>{d_alpha, on_xh};
    });
}

Report contact_verdict() {
    Report report;
    const double c = 1.0;
    for (const int n : kDims) {
        const ModelParams params = params_for(n, c);
        Measure mismatches{"verdict mismatches on 7x7 grid", 0.0};
        Measure identity{"|dH(X) - (|v|^2 - c)|", 1e-8};
        for (int i = 0; i < 7; ++i) {
            for (int j = 0; j < 7; ++j) {
                const double a = 0.25 + 0.25 * i;
                const double b = 1.25 + j * (1.75 / 6.0);
                const ContactReport r = contact_report(params, a, b, kSamples, seed_for(9, n, a * 7 + b));
                const bool expected = a < c && c < b;
                mismatches.add((r.verdict == Verdict::contact_disconnected) == expected ? 0.0 : 1.0);
                for (const auto& level : r.levels) {
                    identity.samples += static_cast<int>(level.dh_x.size()) - 1;
                    identity.add(level.max_identity_residual);
                }
            }
        }
        report.record(n, c, {mismatches, identity});
    }
    return report;
}

Report area_form() {
    Report report;
    for (const double c : kCurvatures) {
        const ModelParams params = params_for(1, c);
        Sampler sampler(seed_for(10, 1, c));
        Measure frame{"dbeta - c pi*(area), Sasaki frame", params.tol_exact};
        Measure coords{"dbeta - c pi*(area), coordinates (rel)", params.tol_exact};
        for (int s = 0; s < kSamples; ++s) {
            const PhaseGeometry geom(params, random_phase(params, sampler));
            const TwoFormMatrix dbeta = assemble_dbeta(geom).assembled;
            // In a g-orthonormal frame the area form is dx∧dy on the horizontal part.
            Mat expected = Mat::Zero(4, 4);
            expected(0, 1) = c;
            expected(1, 0) = -c;
            frame.add(max_abs(dbeta.matrix - expected));
            const Mat dbeta_coords = geom.frame_change().to_coordinate_basis(dbeta).matrix;
            const double sqrt_det = std::sqrt(geom.g().matrix().determinant());
            Mat area = Mat::Zero(4, 4);
            area(0, 1) = sqrt_det;
            area(1, 0) = -sqrt_det;
            coords.add(max_abs(dbeta_coords - c * area) / (1.0 + max_abs(dbeta_coords)));
        }
        report.record(1, c, {frame, coords});
    }
    return report;
}

Report dynamics() {
    return over_combinations(11, [](const ModelParams& params, Sampler& sampler) {
        Measure drift{"energy drift over T=10, dt=1e-3", 1e-7};
        Measure reached{"trajectories cut short", 0.0};
        Measure order{"|observed order - 4| (dt=0.02)", 0.5};
        // observed order = log2 of the step-halving ratio at T = 10
        // Bounded orbits: start near the origin below the critical level. A full
        // T = 10 run costs 10^4 steps, so this criterion uses fewer samples per
        // combination (216 trajectories in total).
        constexpr int kTrajectories = 24;
        for (int s = 0; s < kTrajectories; ++s) {
            const double energy = sampler.uniform(0.1, 0.5) * params.c;
            const PhasePoint p = sampler.on_level(params, energy, 0.3);
            const Trajectory traj = integrate_flow(params, p, 10.0, 1e-3);
            drift.add(traj.max_drift);
            reached.add(traj.truncated || traj.nonfinite ? 1.0 : 0.0);
            order.add(std::abs(convergence_study(params, p, 10.0, 0.02).observed_order() - 4.0));
        }
        return std::vector<Measure>{drift, reached, order};
    });
}

struct Criterion {
    int id;
    const char* name;
    std::function<Report()> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all{
        {1, "curvature oracle and holomorphic sectional curvature -c", curvature_oracle},
        {2, "horizontal/vertical orthogonality of dbeta", hv_orthogonality},
        {3, "(0,v) and (0,Jv) lie in the kernel of dbeta on V", vertical_kernel},
        {4, "adapted-frame block form of Omega", omega_block},
        {5, "omega nondegenerate everywhere (incl. |v|^2 = c) and closed", symplecticity},
        {6, "assembled dbeta matches FD exterior derivative of beta", dbeta_oracle},
        {7, "Hamiltonian field X_H = (v, cJv)", hamiltonian_field},
        {8, "alpha = lambda + beta is a primitive; alpha(X_H) = c - |v|^2", primitive},
        {9, "contact verdict grid and dH(X) = |v|^2 - c", contact_verdict},
        {10, "n = 1: dbeta = c pi*(area form)", area_form},
        {11, "RK4 energy drift and fourth-order convergence", dynamics},
    };
    return all;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria for the chtwist library"};
    int only = 0;
    bool verbose = false;
    app.add_option("--criterion", only, "run a single criterion (1-11)")->check(CLI::Range(1, 11));
    app.add_flag("--verbose,-v", verbose, "print per-combination residuals for passing criteria too");
    CLI11_PARSE(app, argc, argv);

    bool all_pass = true;
    for (const auto& criterion : criteria()) {
        if (only != 0 && criterion.id != only) continue;
        const auto start = std::chrono::steady_clock::now();
        Report report;
        try {
            report = criterion.run();
        } catch (const std::exception& e) {
            report.pass = false;
            report.details.push_back(std::string("    error: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %2d %s  %s (%.1fs)\n", criterion.id, report.pass ? "PASS" : "FAIL", criterion.name,
                    seconds);
        if (verbose || !report.pass || only != 0) {
            for (const auto& line : report.details) std::printf("%s\n", line.c_str());
        }
        all_pass = all_pass && report.pass;
    }
    return all_pass ? 0 : 1;
}
