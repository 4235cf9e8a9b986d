// ars: command-line front end for almost-Riemannian frame analysis.

#include "ars/analyze.hpp"
#include "ars/errors.hpp"
#include "ars/locus.hpp"
#include "ars/parser.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitParse = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    parts.push_back(item);
  return parts;
}

struct CommonArgs {
  std::string file;
  std::string weights = "";
  std::string point = "";
  int max_bracket_depth = 0;
};

ars::AnalyzeOptions make_options(const CommonArgs& args) {
  ars::AnalyzeOptions opts;
  opts.max_degree = ars::max_degree_from_env();
  opts.max_bracket_depth = args.max_bracket_depth;
  if (args.weights == "auto") {
    opts.auto_weights = true;
  } else if (!args.weights.empty()) {
    std::vector<int> w;
    for (const auto& s : split_commas(args.weights))
      w.push_back(std::stoi(s));
    opts.weights = ars::WeightVector(std::move(w));
  }
  if (!args.point.empty()) {
    ars::RationalVector p;
    for (const auto& s : split_commas(args.point))
      p.push_back(ars::parse_rational(s));
    opts.point = std::move(p);
  }
  return opts;
}

void print_status(const ars::Report& r) {
  std::cout << "status: " << ars::to_string(r.status) << "\n";
  if (!r.diagnostic.empty())
    std::cout << "diagnostic: " << r.diagnostic << "\n";
  for (const auto& w : r.warnings)
    std::cout << "warning: " << w << "\n";
}

void print_weights(const ars::Report& r) {
  if (r.growth_dims) {
    std::cout << "growth:";
    for (auto d : *r.growth_dims)
      std::cout << ' ' << d;
    std::cout << "\nstep: " << *r.step << "\n";
  }
  if (r.weights) {
    std::cout << "weights (" << r.weights_source << "):";
    for (int w : *r.weights)
      std::cout << ' ' << w;
    std::cout << "\n";
  }
  if (r.privileged)
    std::cout << "privileged: " << (*r.privileged ? "yes" : "no") << "\n";
}

void print_approx(const ars::Report& r) {
  if (!r.approximation)
    return;
  const auto& a = *r.approximation;
  std::cout << "k: " << a.k << "\nm: " << a.m << "\ndegenerate: " << (a.degenerate ? "yes" : "no") << "\n";
  for (std::size_t i = 0; i < a.fields.size(); ++i)
    std::cout << "  " << a.fields[i].kind << " from X" << a.fields[i].source + 1 << ": " << a.fields[i].expression
              << "\n";
}

void print_lie(const ars::Report& r) {
  if (!r.lie)
    return;
  const auto& l = *r.lie;
  std::cout << "dim L: " << l.lie_dim << "\ndim g: " << l.ideal_dim << "\n";
  std::cout << "g nilpotent step: " << (l.g_nilpotent_step ? std::to_string(*l.g_nilpotent_step) : "none") << "\n";
  std::cout << "L solvable: " << (l.l_solvable ? "yes" : "no") << "\n";
  std::cout << "g full rank at base: " << (l.ideal_full_rank_at_base ? "yes" : "no") << "\nl: " << l.l << "\n";
  for (std::size_t i = 0; i < l.labels.size(); ++i)
    std::cout << "  field " << i + 1 << ": " << l.labels[i] << "\n";
  std::cout << "g basis:\n";
  for (const auto& b : l.ideal_basis)
    std::cout << "  " << b << "\n";
}

void print_locus(const ars::Report& r) {
  std::cout << "det: " << r.determinant.polynomial << "\n";
  if (r.stratification) {
    const auto& s = *r.stratification;
    std::cout << "samples: " << s.samples << " lines: " << s.lines << " approximate roots: " << s.approximate_roots
              << "\n";
    for (const auto& st : s.strata)
      std::cout << "  corank " << st.r << ": hits " << st.hits << ", line hits " << st.line_hits << ", codim "
                << (st.estimated_codim ? std::to_string(*st.estimated_codim) : "?") << " (predicted "
                << st.predicted_codim << ")\n";
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analysis of almost-Riemannian structures given by polynomial frames"};
  app.require_subcommand(1);

  CommonArgs common;
  std::string json_out;
  bool probe = false;
  bool stratify = false;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  int codims_n = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", common.file, "frame description")->required();
    sub->add_option("--weights", common.weights, "auto or w1,...,wn");
    sub->add_option("--point", common.point, "base point p1,...,pn");
    sub->add_option("--max-bracket-depth", common.max_bracket_depth, "0 = automatic");
  };

  auto* analyze = app.add_subcommand("analyze", "full pipeline");
  add_common(analyze);
  analyze->add_option("--json", json_out, "write the JSON report to this file ('-' for stdout)");
  analyze->add_flag("--probe-flows", probe, "numerical completeness probe of each approximating field");
  analyze->add_flag("--stratify", stratify, "sample the corank strata of the singular locus");
  analyze->add_option("--samples", samples, "sampling budget");
  analyze->add_option("--seed", seed, "sampling seed");
  auto* weights = app.add_subcommand("weights", "growth vector, weights and privileged check");
  add_common(weights);
  auto* approx = app.add_subcommand("approx", "nilpotent / solvable approximation");
  add_common(approx);
  auto* liealg = app.add_subcommand("liealg", "generated Lie algebra, ideal and classification");
  add_common(liealg);
  auto* locus = app.add_subcommand("locus", "determinant and corank strata");
  add_common(locus);
  locus->add_option("--samples", samples, "sampling budget");
  locus->add_option("--seed", seed, "sampling seed");
  auto* codims = app.add_subcommand("codims", "generic codimension formulas in dimension n");
  codims->add_option("n", codims_n, "dimension")->required()->check(CLI::Range(2, 1000));

  CLI11_PARSE(app, argc, argv);

  if (codims->parsed()) {
    std::cout << ars::to_json(ars::genericity_codims(codims_n)).dump(2) << "\n";
    return 0;
  }

  ars::FrameDocument doc;
  ars::AnalyzeOptions opts;
  try {
    doc = ars::parse_frame(read_file(common.file));
    opts = make_options(common);
  } catch (const ars::ParseError& e) {
    std::cerr << common.file << ":" << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  opts.probe_flows = probe;
  opts.stratify = stratify || locus->parsed();
  opts.samples = samples;
  opts.seed = seed;

  ars::Report report;
  try {
    report = ars::analyze(doc, opts);
  } catch (const ars::DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (analyze->parsed()) {
    const std::string text = ars::to_json(report).dump(2) + "\n";
    if (json_out == "-") {
      std::cout << text;
    } else {
      if (!json_out.empty()) {
        std::ofstream out(json_out, std::ios::binary);
        out << text;
      }
      print_status(report);
      print_weights(report);
      print_approx(report);
      print_lie(report);
      print_locus(report);
    }
  } else {
    print_status(report);
    if (weights->parsed())
      print_weights(report);
    if (approx->parsed())
      print_approx(report);
    if (liealg->parsed())
      print_lie(report);
    if (locus->parsed())
      print_locus(report);
  }
  return ars::exit_code(report.status);
}
