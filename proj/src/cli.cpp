#include "chtwist/cli.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "chtwist/checks.hpp"
#include "chtwist/contact.hpp"
#include "chtwist/errors.hpp"
#include "chtwist/report.hpp"

namespace chtwist::cli {

ModelParams RunConfig::params() const {
    ModelParams p;
    p.n = n;
    p.c = c;
    p.fd_step = fd_step;
    p.tol_fd = tol_fd;
    p.tol_exact = tol_exact;
    return p;
}

void validate(const RunConfig& config) {
    config.params().validate();
    if (config.samples < 1) throw DomainError("--samples must be >= 1");
    if (!(config.dt > 0.0)) throw DomainError("--dt must be positive");
    if (!(config.T >= 0.0)) throw DomainError("--T must be non-negative");
    if (config.a && !(*config.a > 0.0)) throw DomainError("--a must be positive");
    if (config.b && !(*config.b > 0.0)) throw DomainError("--b must be positive");
    if (config.a.has_value() != config.b.has_value()) throw DomainError("--a and --b must be given together");
    if (!(config.energy > 0.0)) throw DomainError("--energy must be positive");
    if (config.stride < 1) throw DomainError("--stride must be >= 1");
}

namespace {

nlohmann::json config_json(const RunConfig& config) {
    nlohmann::json j = {{"n", config.n},          {"c", config.c},
                        {"seed", config.seed},    {"samples", config.samples},
                        {"fd_step", config.fd_step}, {"tol_fd", config.tol_fd},
                        {"tol_exact", config.tol_exact}, {"dt", config.dt},
                        {"T", config.T}};
    if (config.a) j["a"] = *config.a;
    if (config.b) j["b"] = *config.b;
    return j;
}

OutputFormat format_or(const RunConfig& config, OutputFormat fallback) { return config.format.value_or(fallback); }

nlohmann::json envelope(const std::string& command, const RunConfig& config) {
    return {{"schema_version", kSchemaVersion}, {"command", command}, {"config", config_json(config)}};
}

void write_check_csv(std::ostream& out, const std::vector<CheckRecord>& records) {
    out << "check_id,samples,max_residual,tolerance,pass\n";
    for (const auto& r : records) {
        out << r.id << ',' << r.samples << ',' << format_double(r.max_residual) << ','
            << format_double(r.tolerance) << ',' << (r.pass ? "true" : "false") << '\n';
    }
}

}  // namespace

int cmd_verify(const RunConfig& config, std::ostream& out) {
    validate(config);
    const auto records = run_verification_suite(config.params(), config.samples, config.seed);
    const bool pass = all_pass(records);
    if (format_or(config, OutputFormat::json) == OutputFormat::csv) {
        write_check_csv(out, records);
    } else {
        nlohmann::json j = envelope("verify", config);
        j["checks"] = nlohmann::json::array();
        for (const auto& r : records) j["checks"].push_back(to_json(r));
        j["all_pass"] = pass;
        out << j.dump(2) << '\n';
    }
    return pass ? kAllPass : kCheckFailure;
}

int cmd_curvature_check(const RunConfig& config, std::ostream& out) {
    validate(config);
    const CheckRecord record = curvature_cross_check(config.params(), config.samples, config.seed);
    if (format_or(config, OutputFormat::json) == OutputFormat::csv) {
        write_check_csv(out, {record});
    } else {
        nlohmann::json j = envelope("curvature-check", config);
        j["samples"] = record.samples;
        j["max_relative_deviation"] = to_json(record)["max_residual"];
        j["tolerance"] = record.tolerance;
        j["pass"] = record.pass;
        out << j.dump(2) << '\n';
    }
    return record.pass ? kAllPass : kCheckFailure;
}

int cmd_flow(const RunConfig& config, std::ostream& out) {
    validate(config);
    const ModelParams params = config.params();
    // Start at the origin, moving along the first real axis with ‖v‖²_g = energy.
    const BasePoint origin = BasePoint::origin(params.n);
    const Vec e0 = Vec::Unit(params.real_dim(), 0);
    const Vec v0 = std::sqrt(config.energy / metric(params, origin).norm_sq(e0)) * e0;

    FlowOptions options;
    options.mode = config.mode;
    options.sample_stride = config.stride;
    const Trajectory traj = integrate_flow(params, {origin, v0}, config.T, config.dt, options);

    if (format_or(config, OutputFormat::csv) == OutputFormat::json) {
        nlohmann::json j = envelope("flow", config);
        j["config"]["energy"] = config.energy;
        j["trajectory"] = to_json(traj);
        out << j.dump(2) << '\n';
    } else {
        std::ostringstream header;
        header << "chtwist flow schema_version=" << kSchemaVersion << " n=" << params.n
               << " c=" << format_double(params.c) << " energy=" << format_double(config.energy)
               << " dt=" << format_double(config.dt) << " T=" << format_double(config.T)
               << " mode=" << to_string(config.mode) << " seed=" << config.seed << " stride=" << config.stride;
        write_trajectory_csv(out, traj, header.str());
    }
    return kAllPass;
}

int cmd_contact_scan(const RunConfig& config, std::ostream& out) {
    validate(config);
    const ModelParams params = config.params();
    std::vector<std::pair<double, double>> pairs;
    if (config.a && config.b) {
        pairs.emplace_back(*config.a, *config.b);
    } else {
        // 7 x 7 grid: a in {0.25, ..., 1.75} c, b in [1.25, 3] c.
        for (int i = 0; i < 7; ++i) {
            for (int j = 0; j < 7; ++j) {
                pairs.emplace_back(params.c * (0.25 + 0.25 * i), params.c * (1.25 + j * (1.75 / 6.0)));
            }
        }
    }

    std::vector<ContactReport> reports;
    bool matches = true;
    for (const auto& [a, b] : pairs) {
        reports.push_back(contact_report(params, a, b, config.samples, config.seed));
        const bool expected = a < params.c && params.c < b;
        matches = matches && ((reports.back().verdict == Verdict::contact_disconnected) == expected);
    }

    if (format_or(config, OutputFormat::json) == OutputFormat::csv) {
        out << "n,a,b,c,verdict,boundary_components,primitive_max_residual\n";
        for (const auto& r : reports) {
            out << r.n << ',' << format_double(r.a) << ',' << format_double(r.b) << ',' << format_double(r.c) << ','
                << to_string(r.verdict) << ',' << r.boundary_components() << ','
                << format_double(r.primitive_max_residual) << '\n';
        }
    } else {
        nlohmann::json j = envelope("contact-scan", config);
        j["reports"] = nlohmann::json::array();
        for (const auto& r : reports) j["reports"].push_back(to_json(r));
        j["verdicts_match_expected"] = matches;
        out << j.dump(2) << '\n';
    }
    return matches ? kAllPass : kCheckFailure;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical verification of the twisted symplectic form on T(CH^n)", "chtwist"};
    app.require_subcommand(1);

    RunConfig config;
    std::string format_name;
    std::string mode_name = "magnetic";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n", config.n, "complex dimension");
        sub->add_option("--c", config.c, "holomorphic sectional curvature is -c");
        sub->add_option("--seed", config.seed, "random seed");
        sub->add_option("--samples", config.samples, "random samples per check (per level for contact-scan)");
        sub->add_option("--fd-step", config.fd_step, "finite-difference step");
        sub->add_option("--tol-fd", config.tol_fd, "tolerance for finite-difference oracles");
        sub->add_option("--tol-exact", config.tol_exact, "tolerance for algebraic identities");
        sub->add_option("--dt", config.dt, "integrator step");
        sub->add_option("--T", config.T, "integration time");
        sub->add_option("--a", config.a, "inner level |v|^2 = a");
        sub->add_option("--b", config.b, "outer level |v|^2 = b");
        sub->add_option("--out", config.output_path, "output file (default stdout)");
        sub->add_option("--format", format_name, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    };

    CLI::App* verify = app.add_subcommand("verify", "run every identity check and emit a JSON report");
    CLI::App* flow = app.add_subcommand("flow", "integrate the magnetic flow and write a trajectory");
    CLI::App* scan = app.add_subcommand("contact-scan", "contact-type verdicts for one (a, b) or a grid");
    CLI::App* curvature = app.add_subcommand("curvature-check", "numeric vs closed-form curvature");
    for (CLI::App* sub : {verify, flow, scan, curvature}) add_common(sub);
    flow->add_option("--energy", config.energy, "initial |v|^2 at the origin");
    flow->add_option("--mode", mode_name, "magnetic or geodesic")->check(CLI::IsMember({"magnetic", "geodesic"}));
    flow->add_option("--stride", config.stride, "record every k-th step");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kAllPass : kUsageError;
    }
    if (!format_name.empty()) config.format = format_name == "csv" ? OutputFormat::csv : OutputFormat::json;
    config.mode = mode_name == "geodesic" ? FlowMode::geodesic : FlowMode::magnetic;

    std::ofstream file;
    std::ostream* sink = &out;
    if (!config.output_path.empty()) {
        file.open(config.output_path, std::ios::binary);
        if (!file) {
            err << "cannot open output file " << config.output_path << '\n';
            return kUsageError;
        }
        sink = &file;
    }

    try {
        if (verify->parsed()) return cmd_verify(config, *sink);
        if (flow->parsed()) return cmd_flow(config, *sink);
        if (scan->parsed()) return cmd_contact_scan(config, *sink);
        return cmd_curvature_check(config, *sink);
    } catch (const DomainError& e) {
        err << "invalid configuration: " << e.what() << '\n';
        return kUsageError;
    }
}

}  // namespace chtwist::cli
