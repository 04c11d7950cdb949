#pragma once

// Machine-readable outputs. JSON keys are lower_snake_case; every top-level
// report carries schema_version.

#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "chtwist/checks.hpp"
#include "chtwist/contact.hpp"
#include "chtwist/dynamics.hpp"

namespace chtwist {

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const ModelParams& params);
nlohmann::json to_json(const CheckRecord& record);
nlohmann::json to_json(const LevelRecord& record);
nlohmann::json to_json(const ContactReport& report);
nlohmann::json to_json(const Trajectory& trajectory);

/// Trajectory CSV: `#` comment line with `header_comment`, column header
/// t,x0..x{2n-1},v0..v{2n-1},energy,drift, one row per sample, `#` trailer line.
void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory, const std::string& header_comment);

/// Doubles printed with 17 significant digits so reports are byte-reproducible.
std::string format_double(double value);

}  // namespace chtwist
