#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cdt/catalog.hpp"
#include "cdt/graph.hpp"

namespace cdt {

enum class CheckStatus { match, mismatch, flagged, skipped };

/// "match", "mismatch", "flagged-discrepancy", "skipped".
std::string_view to_string(CheckStatus s);
CheckStatus check_status_from(std::string_view text);

struct Check {
  std::string id;
  CheckStatus status = CheckStatus::match;
  nlohmann::json expected;
  nlohmann::json computed;
  std::string note;

  friend bool operator==(const Check&, const Check&) = default;
};

struct GraphReport {
  std::string graph;   // catalog token, or "graph6:<text>"
  std::vector<Check> checks;
  nlohmann::json details = nlohmann::json::object();  // computed data beyond the checks
  std::vector<std::string> flags;                     // ids of known-discrepancy checks hit

  const Check* find(std::string_view id) const;
  bool has_mismatch() const;
  friend bool operator==(const GraphReport&, const GraphReport&) = default;
};

struct VerificationReport {
  static constexpr int kSchemaVersion = 1;
  int schema_version = kSchemaVersion;
  std::vector<GraphReport> graphs;

  bool has_mismatch() const;
  /// 0 when nothing mismatched, 1 otherwise.
  int exit_code() const { return has_mismatch() ? 1 : 0; }
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

nlohmann::json to_json(const VerificationReport& r);
/// Throws std::invalid_argument on a wrong schema version or missing fields.
VerificationReport report_from_json(const nlohmann::json& j);

struct ReportOptions {
  double budget_seconds = 60;  // hamiltonicity search and the separator group stage
  bool hamiltonicity = true;
};

/// Input graph for the pipeline: a catalog member or an arbitrary graph.
struct ReportInput {
  std::string name;
  Graph graph;
  std::optional<CdtName> cdt;
  LabelTable labels;
};

ReportInput catalog_input(CdtName name);
ReportInput graph6_input(std::string_view text);

/// Raised for inputs the pipeline cannot analyse (acyclic graphs, paths not
/// covered twice by girth cycles); maps to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Full pipeline: metrics, girth cycles, fastening, orientation, separator,
/// surface, groups, Cayley identifications. Throws InputError on degenerate
/// input.
GraphReport run_report(const ReportInput& input, const ReportOptions& options = {});

/// Every catalog graph in table order.
VerificationReport run_all(const ReportOptions& options = {});

/// JSON views used by the CLI. Each throws InputError on input the stage
/// cannot handle (for the separator views: no valid orientation).
nlohmann::json catalog_view();
nlohmann::json analyze_view(const ReportInput& input);
nlohmann::json orient_view(const ReportInput& input);
nlohmann::json separator_view(const ReportInput& input);
std::string separator_dot(const ReportInput& input);

/// Ids of the checks allowed to carry the flagged-discrepancy status.
const std::vector<std::string>& known_discrepancies();

}  // namespace cdt
