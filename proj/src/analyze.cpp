#include "ars/analyze.hpp"

#include "ars/approx.hpp"
#include "ars/errors.hpp"
#include "ars/flows.hpp"
#include "ars/liealg.hpp"
#include "ars/locus.hpp"

#include <cstdlib>

namespace ars {

int max_degree_from_env() {
  const char* value = std::getenv("ARS_MAX_DEGREE");
  if (value == nullptr || *value == '\0')
    return 64;
  const int parsed = std::atoi(value);
  return parsed > 0 ? parsed : 64;
}

namespace {

DeterminantSummary summarize_determinant(const Frame& frame) {
  const Polynomial det = frame_determinant(frame);
  DeterminantSummary out;
  out.polynomial = det.to_string(frame.var_names());
  out.identically_zero = det.is_zero();
  out.constant = det.is_constant();
  out.vanishes_at_base = is_zero(det.evaluate(frame.base_point()));
  return out;
}

} // namespace

Report analyze(const FrameDocument& doc, const AnalyzeOptions& options) {
  Report report;
  FrameDocument located = doc;
  if (options.point)
    located.point = options.point;
  const Frame frame = located.frame();
  const Frame centered = frame.centered();
  const std::size_t n = frame.dim();
  const RationalVector origin(n, Rational(0));

  report.var_names = frame.var_names();
  report.base_point = frame.base_point();
  report.determinant = summarize_determinant(frame);
  if (report.determinant.identically_zero)
    report.warnings.push_back("frame determinant vanishes identically: the singular set has nonempty interior");
  else if (report.determinant.constant)
    report.warnings.push_back("frame determinant is a nonzero constant: the singular locus is empty");
  else if (!report.determinant.vanishes_at_base)
    report.warnings.push_back("base point is not in the singular locus");
  if (!frame.centered_at_origin())
    report.warnings.push_back("field expressions below are in coordinates centred at the base point");

  const GrowthOptions growth_options{options.max_bracket_depth, options.max_degree};
  GrowthResult grown;
  try {
    grown = growth_vector(centered, origin, growth_options);
  } catch (const RankConditionFailure& e) {
    report.status = AnalysisStatus::rank_condition_failure;
    report.diagnostic = e.what();
    return report;
  } catch (const DegreeBoundExceeded& e) {
    report.status = AnalysisStatus::rank_condition_failure;
    report.diagnostic = e.what();
    return report;
  }
  report.growth_dims = grown.growth.dims;
  report.step = grown.growth.step;

  std::optional<WeightVector> declared = options.weights ? options.weights : doc.weights;
  if (options.auto_weights)
    declared.reset();
  const WeightVector w = declared ? *declared : grown.weights;
  report.weights = w.values();
  report.weights_source = declared ? "declared" : "auto";
  report.privileged = check_privileged(centered, origin, w, growth_options);
  if (!*report.privileged) {
    report.status = AnalysisStatus::not_privileged;
    report.diagnostic = "coordinates are not privileged at the base point for weights (";
    for (std::size_t j = 0; j < n; ++j)
      report.diagnostic += (j ? "," : "") + std::to_string(w[j]);
    report.diagnostic += ")";
    return report;
  }

  const ApproximationSet approx = build_approximation(centered, w, growth_options);
  ApproximationSummary summary;
  summary.k = approx.k;
  summary.m = approx.m;
  summary.degenerate = approx.degenerate;
  summary.transform = approx.transform;
  const auto fields = approx.fields();
  for (std::size_t i = 0; i < fields.size(); ++i)
    summary.fields.push_back({static_cast<int>(i) < approx.m ? "hat" : "tilde", approx.source[i],
                              format_field(fields[i], frame.var_names())});
  report.approximation = summary;
  if (approx.degenerate) {
    report.status = AnalysisStatus::degenerate;
    report.diagnostic = "approximating fields are linearly dependent: the approximation is sub-Riemannian, not an ARS";
    return report;
  }

  const LieBasis algebra = lie_closure(fields, ClosureOptions{w.step()});
  const std::vector<VectorField> invariant(fields.begin(), fields.begin() + approx.k);
  const LieBasis ideal = ideal_closure(algebra, invariant);
  const Classification cls = classify_fields(approx, algebra, ideal);
  LieSummary lie;
  lie.lie_dim = cls.lie_dim;
  lie.ideal_dim = cls.ideal_dim;
  lie.g_nilpotent_step = cls.g_nilpotent_step;
  lie.l_solvable = cls.l_solvable;
  lie.ideal_full_rank_at_base = rank_condition_at_zero(ideal, origin);
  lie.l = cls.l;
  for (auto label : cls.labels)
    lie.labels.push_back(to_string(label));
  lie.order = cls.order;
  for (const auto& b : ideal.basis())
    lie.ideal_basis.push_back(format_field(b, frame.var_names()));
  try {
    for (const auto& y : graded_frame(ideal, w))
      lie.graded_frame.push_back(format_field(y, frame.var_names()));
  } catch (const GradedFrameUnavailable& e) {
    report.warnings.push_back(std::string("graded frame unavailable: ") + e.what());
  }
  report.lie = std::move(lie);

  if (options.probe_flows) {
    std::vector<ProbeSummary> probes;
    for (std::size_t i = 0; i < fields.size(); ++i) {
      const ProbeReport p = completeness_probe(fields[i], w, options.probe_horizon, options.probe_trials,
                                               options.seed + i);
      probes.push_back({i, p.triangular, p.runs, p.blowups, p.saturated});
    }
    report.flow_probe = std::move(probes);
  }

  if (options.stratify) {
    PointSampler sampler;
    sampler.seed = options.seed;
    const Stratification s = stratify_samples(frame, sampler, options.samples);
    StratificationSummary out;
    out.samples = options.samples;
    out.seed = options.seed;
    out.lines = s.lines;
    out.approximate_roots = s.approximate_roots;
    for (const auto& st : s.strata)
      out.strata.push_back({st.r, st.hits, st.line_hits, st.estimated_codim, st.predicted_codim});
    report.stratification = std::move(out);
  }
  return report;
}

} // namespace ars
