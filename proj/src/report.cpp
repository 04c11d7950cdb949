#include "chtwist/report.hpp"

#include <cmath>
#include <cstdio>

namespace chtwist {

namespace {

// JSON has no infinity; a non-finite residual is reported as null.
nlohmann::json number(double value) {
    if (!std::isfinite(value)) return nullptr;
    return value;
}

}  // namespace

nlohmann::json to_json(const ModelParams& params) {
    return {{"n", params.n},
            {"c", params.c},
            {"fd_step", params.fd_step},
            {"tol_fd", params.tol_fd},
            {"tol_exact", params.tol_exact}};
}

nlohmann::json to_json(const CheckRecord& record) {
    return {{"check_id", record.id},
            {"statistic", record.statistic},
            {"samples", record.samples},
            {"max_residual", number(record.max_residual)},
            {"tolerance", record.tolerance},
            {"pass", record.pass}};
}

nlohmann::json to_json(const LevelRecord& record) {
    nlohmann::json values = nlohmann::json::array();
    for (const double v : record.dh_x) values.push_back(number(v));
    return {{"wall", to_string(record.wall)},
            {"level", record.level},
            {"samples", record.dh_x.size()},
            {"dh_x", std::move(values)},
            {"max_identity_residual", number(record.max_identity_residual)},
            {"singular", record.singular},
            {"ambiguous", record.ambiguous},
            {"outward", record.outward}};
}

nlohmann::json to_json(const ContactReport& report) {
    nlohmann::json levels = nlohmann::json::array();
    for (const auto& level : report.levels) levels.push_back(to_json(level));
    return {{"n", report.n},
            {"a", report.a},
            {"b", report.b},
            {"c", report.c},
            {"verdict", to_string(report.verdict)},
            {"boundary_components", report.boundary_components()},
            {"explanation", report.explanation},
            {"primitive_max_residual", number(report.primitive_max_residual)},
            {"primitive_tolerance", report.primitive_tolerance},
            {"levels", std::move(levels)}};
}

nlohmann::json to_json(const Trajectory& trajectory) {
    nlohmann::json samples = nlohmann::json::array();
    const double h0 = trajectory.samples.front().energy;
    for (const auto& s : trajectory.samples) {
        samples.push_back({{"t", s.t},
                           {"x", std::vector<double>(s.p.x.coords().begin(), s.p.x.coords().end())},
                           {"v", std::vector<double>(s.p.v.begin(), s.p.v.end())},
                           {"energy", s.energy},
                           {"drift", std::abs(s.energy - h0) / h0}});
    }
    return {{"integrator", trajectory.integrator},
            {"mode", to_string(trajectory.mode)},
            {"dt", trajectory.dt},
            {"steps", trajectory.steps},
            {"truncated", trajectory.truncated},
            {"nonfinite", trajectory.nonfinite},
            {"max_drift", trajectory.max_drift},
            {"samples", std::move(samples)}};
}

std::string format_double(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory, const std::string& header_comment) {
    out << "# " << header_comment << '\n';
    const auto d = trajectory.samples.front().p.v.size();
    out << 't';
    for (Eigen::Index i = 0; i < d; ++i) out << ",x" << i;
    for (Eigen::Index i = 0; i < d; ++i) out << ",v" << i;
    out << ",energy,drift\n";
    const double h0 = trajectory.samples.front().energy;
    for (const auto& s : trajectory.samples) {
        out << format_double(s.t);
        for (Eigen::Index i = 0; i < d; ++i) out << ',' << format_double(s.p.x.coords()[i]);
        for (Eigen::Index i = 0; i < d; ++i) out << ',' << format_double(s.p.v[i]);
        out << ',' << format_double(s.energy) << ',' << format_double(std::abs(s.energy - h0) / h0) << '\n';
    }
    out << "# truncated=" << (trajectory.truncated ? "true" : "false")
        << " nonfinite=" << (trajectory.nonfinite ? "true" : "false") << " steps=" << trajectory.steps
        << " max_drift=" << format_double(trajectory.max_drift) << '\n';
}

}  // namespace chtwist
