#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chtwist/chn_model.hpp"

namespace chtwist {

/// Outcome of one named identity check over a batch of random samples.
struct CheckRecord {
    std::string id;
    std::string statistic;  ///< what max_residual measures
    int samples = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// Agreement threshold between the dense-solve and closed-form Hamiltonian fields,
/// and for the dH(X) = ‖v‖² - c identity.
inline constexpr double kSolveAgreementTol = 1e-8;

/// Every pointwise identity of the construction, checked at `samples` random
/// phase points (‖v‖² log-uniform in [0.1c, 10c]) plus points on ‖v‖² = c.
std::vector<CheckRecord> run_verification_suite(const ModelParams& params, int samples, std::uint64_t seed);

/// Largest |numeric - algebraic| / (1 + |algebraic|) over g-unit random X, Y, Z, W.
CheckRecord curvature_cross_check(const ModelParams& params, int samples, std::uint64_t seed);

bool all_pass(const std::vector<CheckRecord>& records);

}  // namespace chtwist
