#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "frc/code.hpp"
#include "frc/incidence.hpp"
#include "frc/reconstruction.hpp"
#include "frc/repair.hpp"

namespace frc {

inline constexpr int kReportFormat = 1;
inline constexpr const char* kToolName = "frc";
inline constexpr const char* kToolVersion = "1.0.0";

struct ToolMetadata {
    std::string command;
    std::uint64_t cap = kDefaultSubsetCap;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> mode;
};

// Everything one CLI invocation reports. Only the sections that were computed
// are present in the serialized form.
struct AnalysisReport {
    ToolMetadata tool;
    std::optional<FRCode> code;
    std::optional<ValidationReport> validation;
    std::optional<DerivedParams> params;
    std::optional<DegreeReport> degrees;
    bool include_traces = false;
    std::optional<RepairReport> repair;
    std::optional<std::vector<int>> rate_profile;
    std::optional<std::pair<int, int>> rate;  // (k, R(k))
    std::optional<IncidenceMatrix> matrix;
};

// Validation and derived parameters for a code; the common base of every report.
AnalysisReport base_report(const FRCode& code, ToolMetadata tool);

nlohmann::json to_json(const FRCode& code);
nlohmann::json to_json(const ValidationReport& v);
nlohmann::json to_json(const DerivedParams& p);
nlohmann::json to_json(const GreedyTrace& t);
nlohmann::json to_json(const DegreeReport& d, bool include_traces);
nlohmann::json to_json(const RepairReport& r);
nlohmann::json to_json(const IncidenceMatrix& m);
nlohmann::json to_json(const AnalysisReport& report);

// Deterministic text: sorted keys, two-space indent, trailing newline.
std::string serialize(const AnalysisReport& report);

}  // namespace frc
