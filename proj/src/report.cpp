#include "ars/report.hpp"

#include "ars/locus.hpp"

#include <stdexcept>

namespace ars {

using nlohmann::ordered_json;

std::string to_string(AnalysisStatus status) {
  switch (status) {
  case AnalysisStatus::ok:
    return "ok";
  case AnalysisStatus::rank_condition_failure:
    return "rank_condition_failure";
  case AnalysisStatus::not_privileged:
    return "not_privileged";
  case AnalysisStatus::degenerate:
    return "degenerate_approximation";
  }
  return "unknown";
}

AnalysisStatus status_from_string(const std::string& text) {
  for (auto s : {AnalysisStatus::ok, AnalysisStatus::rank_condition_failure, AnalysisStatus::not_privileged,
                 AnalysisStatus::degenerate})
    if (to_string(s) == text)
      return s;
  throw std::invalid_argument("unknown analysis status: " + text);
}

int exit_code(AnalysisStatus status) {
  switch (status) {
  case AnalysisStatus::ok:
    return 0;
  case AnalysisStatus::rank_condition_failure:
    return 3;
  case AnalysisStatus::not_privileged:
    return 4;
  case AnalysisStatus::degenerate:
    return 5;
  }
  return 1;
}

namespace {

ordered_json rationals(const RationalVector& v) {
  ordered_json a = ordered_json::array();
  for (const auto& q : v)
    a.push_back(to_string(q));
  return a;
}

RationalVector rationals_from(const ordered_json& a) {
  RationalVector v;
  for (const auto& s : a)
    v.push_back(parse_rational(s.get<std::string>()));
  return v;
}

template <class T>
ordered_json optional_value(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

template <class T>
std::optional<T> optional_from(const ordered_json& j) {
  if (j.is_null())
    return std::nullopt;
  return j.get<T>();
}

} // namespace

ordered_json to_json(const Report& r) {
  ordered_json j;
  j["schema"] = r.schema;
  j["status"] = to_string(r.status);
  j["diagnostic"] = r.diagnostic;
  j["warnings"] = r.warnings;
  j["variables"] = r.var_names;
  j["base_point"] = rationals(r.base_point);
  j["weights"] = optional_value(r.weights);
  j["weights_source"] = r.weights_source;
  j["growth_vector"] = optional_value(r.growth_dims);
  j["step"] = optional_value(r.step);
  j["privileged"] = optional_value(r.privileged);

  if (r.approximation) {
    const auto& a = *r.approximation;
    ordered_json aj;
    aj["k"] = a.k;
    aj["m"] = a.m;
    aj["degenerate"] = a.degenerate;
    ordered_json t = ordered_json::array();
    for (std::size_t i = 0; i < a.transform.rows(); ++i)
      t.push_back(rationals(a.transform.row(i)));
    aj["transform"] = t;
    ordered_json fs = ordered_json::array();
    for (const auto& f : a.fields)
      fs.push_back({{"kind", f.kind}, {"source", f.source}, {"expression", f.expression}});
    aj["fields"] = fs;
    j["approximation"] = aj;
  } else {
    j["approximation"] = nullptr;
  }

  if (r.lie) {
    const auto& l = *r.lie;
    ordered_json lj;
    lj["lie_dim"] = l.lie_dim;
    lj["ideal_dim"] = l.ideal_dim;
    lj["ideal_nilpotent_step"] = optional_value(l.g_nilpotent_step);
    lj["lie_solvable"] = l.l_solvable;
    lj["ideal_full_rank_at_base"] = l.ideal_full_rank_at_base;
    lj["l"] = l.l;
    lj["labels"] = l.labels;
    lj["order"] = l.order;
    lj["ideal_basis"] = l.ideal_basis;
    lj["graded_frame"] = l.graded_frame;
    j["lie_algebra"] = lj;
  } else {
    j["lie_algebra"] = nullptr;
  }

  j["determinant"] = {{"polynomial", r.determinant.polynomial},
                      {"identically_zero", r.determinant.identically_zero},
                      {"constant", r.determinant.constant},
                      {"vanishes_at_base", r.determinant.vanishes_at_base}};

  if (r.flow_probe) {
    ordered_json pj = ordered_json::array();
    for (const auto& p : *r.flow_probe)
      pj.push_back({{"field", p.field},
                    {"triangular", p.triangular},
                    {"runs", p.runs},
                    {"blowups", p.blowups},
                    {"saturated", p.saturated}});
    j["flow_probe"] = pj;
  } else {
    j["flow_probe"] = nullptr;
  }

  if (r.stratification) {
    const auto& s = *r.stratification;
    ordered_json sj;
    sj["samples"] = s.samples;
    sj["seed"] = s.seed;
    sj["lines"] = s.lines;
    sj["approximate_roots"] = s.approximate_roots;
    ordered_json st = ordered_json::array();
    for (const auto& x : s.strata)
      st.push_back({{"r", x.r},
                    {"hits", x.hits},
                    {"line_hits", x.line_hits},
                    {"estimated_codim", optional_value(x.estimated_codim)},
                    {"predicted_codim", x.predicted_codim}});
    sj["strata"] = st;
    j["stratification"] = sj;
  } else {
    j["stratification"] = nullptr;
  }
  return j;
}

Report report_from_json(const ordered_json& j) {
  Report r;
  r.schema = j.at("schema").get<std::string>();
  if (r.schema != kReportSchema)
    throw std::invalid_argument("unsupported report schema: " + r.schema);
  r.status = status_from_string(j.at("status").get<std::string>());
  r.diagnostic = j.at("diagnostic").get<std::string>();
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  r.var_names = j.at("variables").get<std::vector<std::string>>();
  r.base_point = rationals_from(j.at("base_point"));
  r.weights = optional_from<std::vector<int>>(j.at("weights"));
  r.weights_source = j.at("weights_source").get<std::string>();
  r.growth_dims = optional_from<std::vector<std::size_t>>(j.at("growth_vector"));
  r.step = optional_from<int>(j.at("step"));
  r.privileged = optional_from<bool>(j.at("privileged"));

  if (const auto& aj = j.at("approximation"); !aj.is_null()) {
    ApproximationSummary a;
    a.k = aj.at("k").get<int>();
    a.m = aj.at("m").get<int>();
    a.degenerate = aj.at("degenerate").get<bool>();
    std::vector<RationalVector> rows;
    for (const auto& row : aj.at("transform"))
      rows.push_back(rationals_from(row));
    a.transform = RationalMatrix::from_rows(rows, rows.empty() ? 0 : rows.front().size());
    for (const auto& f : aj.at("fields"))
      a.fields.push_back({f.at("kind").get<std::string>(), f.at("source").get<std::size_t>(),
                          f.at("expression").get<std::string>()});
    r.approximation = std::move(a);
  }

  if (const auto& lj = j.at("lie_algebra"); !lj.is_null()) {
    LieSummary l;
    l.lie_dim = lj.at("lie_dim").get<std::size_t>();
    l.ideal_dim = lj.at("ideal_dim").get<std::size_t>();
    l.g_nilpotent_step = optional_from<int>(lj.at("ideal_nilpotent_step"));
    l.l_solvable = lj.at("lie_solvable").get<bool>();
    l.ideal_full_rank_at_base = lj.at("ideal_full_rank_at_base").get<bool>();
    l.l = lj.at("l").get<int>();
    l.labels = lj.at("labels").get<std::vector<std::string>>();
    l.order = lj.at("order").get<std::vector<std::size_t>>();
    l.ideal_basis = lj.at("ideal_basis").get<std::vector<std::string>>();
    l.graded_frame = lj.at("graded_frame").get<std::vector<std::string>>();
    r.lie = std::move(l);
  }

  const auto& dj = j.at("determinant");
  r.determinant.polynomial = dj.at("polynomial").get<std::string>();
  r.determinant.identically_zero = dj.at("identically_zero").get<bool>();
  r.determinant.constant = dj.at("constant").get<bool>();
  r.determinant.vanishes_at_base = dj.at("vanishes_at_base").get<bool>();

  if (const auto& pj = j.at("flow_probe"); !pj.is_null()) {
    std::vector<ProbeSummary> probes;
    for (const auto& p : pj)
      probes.push_back({p.at("field").get<std::size_t>(), p.at("triangular").get<bool>(), p.at("runs").get<int>(),
                        p.at("blowups").get<int>(), p.at("saturated").get<int>()});
    r.flow_probe = std::move(probes);
  }

  if (const auto& sj = j.at("stratification"); !sj.is_null()) {
    StratificationSummary s;
    s.samples = sj.at("samples").get<std::size_t>();
    s.seed = sj.at("seed").get<std::uint64_t>();
    s.lines = sj.at("lines").get<std::size_t>();
    s.approximate_roots = sj.at("approximate_roots").get<std::size_t>();
    for (const auto& x : sj.at("strata"))
      s.strata.push_back({x.at("r").get<int>(), x.at("hits").get<std::size_t>(), x.at("line_hits").get<std::size_t>(),
                          optional_from<int>(x.at("estimated_codim")), x.at("predicted_codim").get<int>()});
    r.stratification = std::move(s);
  }
  return r;
}

nlohmann::ordered_json to_json(const GenericityTable& table) {
  nlohmann::ordered_json out;
  out["n"] = table.n;
  out["max_corank"] = table.max_corank;
  auto& strata = out["strata"] = nlohmann::ordered_json::array();
  for (const auto& s : table.strata) {
    nlohmann::ordered_json j;
    j["r"] = s.r;
    j["codim"] = s.codim;
    j["max_span"] = s.max_span;
    j["transversality_possible"] = s.transversality_possible;
    j["tangential_codim_in_z1"] = s.tangential_codim_in_z1 ? nlohmann::ordered_json(*s.tangential_codim_in_z1) : nullptr;
    j["s1_threshold"] = s.s1_threshold ? nlohmann::ordered_json(*s.s1_threshold) : nullptr;
    j["s1_submanifold"] = s.s1_submanifold;
    auto& higher = j["higher"] = nlohmann::ordered_json::array();
    for (const auto& t : s.higher)
      higher.push_back({{"s", t.s}, {"empty", t.empty}, {"lower", t.lower}, {"upper", t.upper},
                        {"submanifold", t.submanifold}});
    strata.push_back(std::move(j));
  }
  return out;
}


} // namespace ars
