#ifndef ARS_REPORT_HPP
#define ARS_REPORT_HPP

#include "ars/grading.hpp"
#include "ars/linalg.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ars {

struct GenericityTable;

inline constexpr const char* kReportSchema = "ars-report/1";

enum class AnalysisStatus { ok, rank_condition_failure, not_privileged, degenerate };

std::string to_string(AnalysisStatus status);
AnalysisStatus status_from_string(const std::string& text);
/// 0, 3, 4, 5 for ok, rank failure, not privileged, degenerate.
int exit_code(AnalysisStatus status);

struct ApproximatedField {
  std::string kind; // "hat" or "tilde"
  std::size_t source = 0;
  std::string expression;

  friend bool operator==(const ApproximatedField&, const ApproximatedField&) = default;
};

struct ApproximationSummary {
  int k = 0;
  int m = 0;
  bool degenerate = false;
  RationalMatrix transform;
  std::vector<ApproximatedField> fields;

  friend bool operator==(const ApproximationSummary&, const ApproximationSummary&) = default;
};

struct LieSummary {
  std::size_t lie_dim = 0;
  std::size_t ideal_dim = 0;
  std::optional<int> g_nilpotent_step;
  bool l_solvable = false;
  bool ideal_full_rank_at_base = false;
  int l = 0;
  std::vector<std::string> labels;
  std::vector<std::size_t> order;
  std::vector<std::string> ideal_basis;
  std::vector<std::string> graded_frame;

  friend bool operator==(const LieSummary&, const LieSummary&) = default;
};

struct DeterminantSummary {
  std::string polynomial;
  bool identically_zero = false;
  bool constant = false;
  bool vanishes_at_base = false;

  friend bool operator==(const DeterminantSummary&, const DeterminantSummary&) = default;
};

struct ProbeSummary {
  std::size_t field = 0;
  bool triangular = false;
  int runs = 0;
  int blowups = 0;
  int saturated = 0;

  friend bool operator==(const ProbeSummary&, const ProbeSummary&) = default;
};

struct StratumSummary {
  int r = 0;
  std::size_t hits = 0;
  std::size_t line_hits = 0;
  std::optional<int> estimated_codim;
  int predicted_codim = 0;

  friend bool operator==(const StratumSummary&, const StratumSummary&) = default;
};

struct StratificationSummary {
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t lines = 0;
  std::size_t approximate_roots = 0;
  std::vector<StratumSummary> strata;

  friend bool operator==(const StratificationSummary&, const StratificationSummary&) = default;
};

struct Report {
  std::string schema = kReportSchema;
  AnalysisStatus status = AnalysisStatus::ok;
  std::string diagnostic;
  std::vector<std::string> warnings;
  std::vector<std::string> var_names;
  RationalVector base_point;
  std::optional<std::vector<int>> weights;
  std::string weights_source; // "auto" or "declared"
  std::optional<std::vector<std::size_t>> growth_dims;
  std::optional<int> step;
  std::optional<bool> privileged;
  std::optional<ApproximationSummary> approximation;
  std::optional<LieSummary> lie;
  DeterminantSummary determinant;
  std::optional<std::vector<ProbeSummary>> flow_probe;
  std::optional<StratificationSummary> stratification;

  friend bool operator==(const Report&, const Report&) = default;
};

nlohmann::ordered_json to_json(const Report& report);
/// Inverse of to_json. Throws nlohmann::json exceptions or std::invalid_argument
/// on schema violations.
Report report_from_json(const nlohmann::ordered_json& j);

/// Generic codimension table as JSON; stable output used as a golden file.
nlohmann::ordered_json to_json(const GenericityTable& table);

} // namespace ars

#endif
