#pragma once

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "funobs/decide.hpp"
#include "funobs/sim.hpp"
#include "funobs/system.hpp"
#include "funobs/witness.hpp"

namespace funobs {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "funobs-report/1";

struct SystemFile {
  std::string name;
  std::string description;
  SystemSextuple system;
  // Regression expectations keyed by property name.
  std::map<std::string, bool> expected;
};

// Rational entries may be integers, "p/q" strings or decimals; decimals are
// taken from the literal text, so 0.1 is exactly 1/10. Errors carry the field path.
SystemFile parse_system(const std::string& text);
SystemFile load_system(const std::string& path);
std::string serialize_system(const SystemFile& file);

// Either {"G","H","Q","R"} or {"N": ...} where each N entry is a formula
// string in s or {"num": [...], "den": [...]} with ascending coefficients.
StateSpaceRealization parse_observer(const std::string& text);

struct ScenarioFile {
  Scenario scenario;
  bool horizon_given = false;
  double threshold = kDefaultThreshold;
};
ScenarioFile parse_scenario(const std::string& text);

std::string read_file(const std::string& path);

struct Report {
  std::string schema_version = kReportSchema;
  std::string system_name;
  std::vector<Verdict> verdicts;
  std::optional<WitnessReport> witness;
  std::vector<std::pair<std::string, double>> timing;  // stage, seconds
};

Json report_to_json(const Report& r);
Report report_from_json(const Json& j);
std::string report_to_text(const Report& r);

// Short command-line names: functional, strong, strong-star, hautus, hautus-star,
// leftinv, leftinv-star, darouach.
std::string property_label(Property p);

Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& field);

}  // namespace funobs
