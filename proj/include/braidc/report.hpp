// report.hpp: machine-readable and human-readable CLI reports.
#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "braidc/search.hpp"
#include "braidc/targets.hpp"
#include "braidc/unitary2.hpp"

namespace braidc {

// All reports carry these so saved outputs stay self-describing.
inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kConventionTag = "temporal-order";

nlohmann::json matrix_to_json(const Unitary2& u);
Unitary2 matrix_from_json(const nlohmann::json& j);

struct CompileReport {
    TargetGate target;
    SearchBudget budget;
    SearchResult result;

    nlohmann::json to_json() const;
    std::string to_text() const;
};

struct EvaluateReport {
    std::string word_text;  // temporal order, normalized
    Unitary2 matrix;
    std::optional<std::string> target_name;
    std::optional<double> error;

    nlohmann::json to_json() const;
    std::string to_text() const;
};

struct ModelCheckReport {
    double pentagon_residual = 0.0;
    double hexagon_residual = 0.0;
    double sigma_tenth_power_residual = 0.0;
    double braid_relation_residual = 0.0;

    bool pass(double tol = 1e-10) const;
    nlohmann::json to_json() const;
    std::string to_text() const;
};

}  // namespace braidc
