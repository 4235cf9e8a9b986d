#ifndef ARS_ANALYZE_HPP
#define ARS_ANALYZE_HPP

#include "ars/parser.hpp"
#include "ars/report.hpp"

#include <cstdint>
#include <optional>

namespace ars {

struct AnalyzeOptions {
  /// Overrides the document's weights line; nullopt keeps the document's choice.
  std::optional<WeightVector> weights;
  /// Forces automatic weights even when the document declares some.
  bool auto_weights = false;
  std::optional<RationalVector> point;
  int max_bracket_depth = 0;
  int max_degree = 64;
  bool probe_flows = false;
  double probe_horizon = 1e3;
  int probe_trials = 4;
  bool stratify = false;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
};

/// Growth vector, privileged check, approximation, Lie closure, ideal,
/// classification and determinant, stopping at the first failed
/// precondition with the status and diagnostic set.
Report analyze(const FrameDocument& doc, const AnalyzeOptions& options = {});

/// Reads ARS_MAX_DEGREE (default 64).
int max_degree_from_env();

} // namespace ars

#endif
