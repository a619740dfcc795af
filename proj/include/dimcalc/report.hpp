#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "dimcalc/analysis.hpp"
#include "dimcalc/problem.hpp"

namespace dimcalc {

struct ModelReport {
    DimensionalModel model;
    PiRelation relation;
    std::vector<std::string> pi_groups; // ASCII
    std::string relation_power;         // ASCII
    std::string relation_root;
    std::string relation_scalar;
    std::string display_power; // Unicode
    std::string display_root;
};

struct Report {
    ProblemFile problem;
    std::size_t rank = 0;
    std::vector<ModelReport> models;
    std::vector<std::string> diagnostics;
};

/// Exit status of `analyze`: success, or success with no model.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNoModel = 2;
inline constexpr int kExitNotHomogeneous = 3;

Report analyze_problem(const ProblemFile& problem);
int exit_code(const Report& report) noexcept;

std::string render_text(const Report& report);
nlohmann::ordered_json to_json(const Report& report);
/// Canonical JSON (fixed key order, two-space indent, trailing newline).
std::string emit_json(const Report& report);

} // namespace dimcalc
