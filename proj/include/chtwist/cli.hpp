#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "chtwist/dynamics.hpp"
#include "chtwist/sampling.hpp"

namespace chtwist::cli {

enum class OutputFormat { json, csv };

enum ExitCode : int { kAllPass = 0, kCheckFailure = 1, kUsageError = 2 };

struct RunConfig {
    int n = 1;
    double c = 1.0;
    std::uint64_t seed = kDefaultSeed;
    int samples = 200;
    double fd_step = 1e-5;
    double tol_fd = 1e-5;
    double tol_exact = 1e-10;
    double dt = 1e-3;
    double T = 10.0;
    std::optional<double> a;
    std::optional<double> b;
    std::string output_path;
    std::optional<OutputFormat> format;

    // flow only
    double energy = 0.25;  ///< initial ‖v‖²_g, at the origin
    FlowMode mode = FlowMode::magnetic;
    long long stride = 1;

    ModelParams params() const;
};

/// Throws DomainError on an invalid configuration.
void validate(const RunConfig& config);

int cmd_verify(const RunConfig& config, std::ostream& out);
int cmd_flow(const RunConfig& config, std::ostream& out);
int cmd_contact_scan(const RunConfig& config, std::ostream& out);
int cmd_curvature_check(const RunConfig& config, std::ostream& out);

/// Full entry point: parses argv, runs the subcommand, writes to --out or `out`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chtwist::cli
